#include "bondcycle/cycles.hpp"

#include <algorithm>
#include <string>

namespace bondcycle {

namespace {

// Anchored depth-first path search. A cycle is visited exactly once: from
// its minimum vertex (all other members have larger ids) and only in the
// orientation whose second vertex is smaller than its last.
class CycleSearch {
 public:
  explicit CycleSearch(const Graph& g) : g_(g), n_(g.vertex_count()) {}

  // Longest cycle over the whole graph; empty when acyclic.
  std::vector<int> longest() {
    best_len_ = 0;
    best_.clear();
    exact_ = 0;
    first_only_ = false;
    stop_ = false;
    collect_ = nullptr;
    for (int s = 0; s < n_ && best_len_ < n_; ++s) anchor(s);
    return best_;
  }

  // All cycles of exactly the given length (first_only stops at one).
  std::vector<std::vector<int>> of_length(int length, bool first_only) {
    found_.clear();
    exact_ = length;
    first_only_ = first_only;
    stop_ = false;
    collect_ = &found_;
    for (int s = 0; s < n_ && !stop_; ++s) {
      if (n_ - s < exact_) break;  // not enough high vertices left
      anchor(s);
    }
    return std::move(found_);
  }

 private:
  void anchor(int s) {
    if (g_.degree(s) < 2) return;
    anchor_ = s;
    // only vertices above the anchor may join the cycle
    eligible_ = g_.vertices().bits() & ~((std::uint64_t{2} << s) - 1);
    path_.clear();
    path_.push_back(s);
    on_path_ = std::uint64_t{1} << s;
    extend();
  }

  void extend() {
    if (stop_) return;
    const int head = path_.back();
    const int len = static_cast<int>(path_.size());

    if (len >= 3 && g_.has_edge(head, anchor_) && path_[1] < path_.back()) {
      if (collect_ != nullptr) {
        if (len == exact_) {
          collect_->push_back(path_);
          if (first_only_) stop_ = true;
        }
      } else if (len > best_len_) {
        best_len_ = len;
        best_ = path_;
      }
    }
    if (exact_ != 0 && len >= exact_) return;

    const std::uint64_t free = eligible_ & ~on_path_;
    // Closing requires walking back to the anchor through free vertices;
    // the reachable free vertices also cap how long the cycle can get.
    const std::uint64_t reach = reachable(head, free);
    if (((reach >> anchor_) & 1) == 0) return;
    const int limit = len + std::popcount(reach & free);
    if (collect_ != nullptr ? limit < exact_ : limit <= best_len_) return;

    for (std::uint64_t b = g_.adjacency_bits(head) & free; b != 0; b &= b - 1) {
      const int w = std::countr_zero(b);
      path_.push_back(w);
      on_path_ |= std::uint64_t{1} << w;
      extend();
      on_path_ &= ~(std::uint64_t{1} << w);
      path_.pop_back();
      if (stop_) return;
    }
  }

  std::uint64_t reachable(int from, std::uint64_t free) const {
    const std::uint64_t allowed = free | (std::uint64_t{1} << anchor_);
    std::uint64_t reached = g_.adjacency_bits(from) & allowed;
    std::uint64_t frontier = reached;
    while (frontier != 0) {
      std::uint64_t expand = 0;
      for (std::uint64_t b = frontier; b != 0; b &= b - 1)
        expand |= g_.adjacency_bits(std::countr_zero(b));
      frontier = expand & allowed & ~reached;
      reached |= frontier;
    }
    return reached;
  }

  const Graph& g_;
  int n_;
  int anchor_ = 0;
  std::uint64_t eligible_ = 0;
  std::uint64_t on_path_ = 0;
  std::vector<int> path_;

  int best_len_ = 0;
  std::vector<int> best_;

  int exact_ = 0;  // 0 means longest mode
  bool first_only_ = false;
  bool stop_ = false;
  std::vector<std::vector<int>>* collect_ = nullptr;
  std::vector<std::vector<int>> found_;
};

bool is_bipartite(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  for (int s = 0; s < n; ++s) {
    if (color[static_cast<std::size_t>(s)] != -1) continue;
    color[static_cast<std::size_t>(s)] = 0;
    std::vector<int> queue{s};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const int v = queue[i];
      for (std::uint64_t b = g.adjacency_bits(v); b != 0; b &= b - 1) {
        const int w = std::countr_zero(b);
        if (color[static_cast<std::size_t>(w)] == -1) {
          color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(v)];
          queue.push_back(w);
        } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(v)]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

Cycle make_cycle(const Graph& g, std::vector<int> vertices) {
  const int len = static_cast<int>(vertices.size());
  if (len < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  VertexSet seen;
  for (int v : vertices) {
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("cycle vertex " + std::to_string(v) + " out of range");
    if (seen.contains(v))
      throw std::invalid_argument("cycle repeats vertex " + std::to_string(v));
    seen = seen.with(v);
  }
  EdgeSet edges;
  edges.reserve(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) {
    const int u = vertices[static_cast<std::size_t>(i)];
    const int v = vertices[static_cast<std::size_t>((i + 1) % len)];
    if (!g.has_edge(u, v))
      throw std::invalid_argument("cycle uses missing edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + ")");
    edges.push_back(make_edge(u, v));
  }
  std::sort(edges.begin(), edges.end());
  return Cycle{std::move(vertices), std::move(edges)};
}

std::optional<Cycle> longest_cycle(const Graph& g) {
  CycleSearch search(g);
  std::vector<int> best = search.longest();
  if (best.empty()) return std::nullopt;
  return make_cycle(g, std::move(best));
}

int circumference(const Graph& g) {
  auto cycle = longest_cycle(g);
  return cycle ? cycle->length() : 0;
}

std::vector<Cycle> all_longest_cycles(const Graph& g) {
  auto best = longest_cycle(g);
  if (!best) throw std::invalid_argument("all_longest_cycles: graph is acyclic");
  CycleSearch search(g);
  std::vector<Cycle> out;
  for (auto& vs : search.of_length(best->length(), /*first_only=*/false))
    out.push_back(make_cycle(g, std::move(vs)));
  return out;
}

std::vector<int> CycleSpectrum::lengths() const {
  std::vector<int> out;
  out.reserve(witnesses.size());
  for (const auto& [len, cycle] : witnesses) out.push_back(len);
  return out;
}

CycleSpectrum cycle_spectrum(const Graph& g) {
  if (g.vertex_count() > 24)
    throw InfeasibleError("cycle_spectrum search is guarded at n <= 24 (got n = " +
                          std::to_string(g.vertex_count()) + ")");
  CycleSpectrum spectrum;
  const int longest = circumference(g);
  if (longest == 0) return spectrum;
  const bool bipartite = is_bipartite(g);
  for (int len = 3; len <= longest; ++len) {
    if (bipartite && len % 2 == 1) continue;
    CycleSearch search(g);
    auto found = search.of_length(len, /*first_only=*/true);
    if (!found.empty()) spectrum.witnesses.emplace(len, make_cycle(g, std::move(found.front())));
  }
  return spectrum;
}

std::optional<Cycle> hamiltonian_cycle(const Graph& g) {
  if (g.vertex_count() < 3) return std::nullopt;
  CycleSearch search(g);
  auto found = search.of_length(g.vertex_count(), /*first_only=*/true);
  if (found.empty()) return std::nullopt;
  return make_cycle(g, std::move(found.front()));
}

bool is_hamiltonian(const Graph& g) {
  return hamiltonian_cycle(g).has_value();
}

int dirac_bound(const Graph& g) {
  if (!vertex_connectivity_at_least(g, 2))
    throw std::invalid_argument("dirac_bound requires a 2-connected graph");
  return std::min(g.vertex_count(), 2 * min_degree(g));
}

}  // namespace bondcycle
