#include "bondcycle/graph.hpp"

#include <algorithm>

namespace bondcycle {

Graph::Graph(int n, const std::vector<Edge>& edge_list) : n_(n) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  if (n > kMaxVertices)
    throw std::invalid_argument("graph too large: n = " + std::to_string(n) +
                                " exceeds the cap of " + std::to_string(kMaxVertices));
  adj_.assign(static_cast<std::size_t>(n), 0);
  edges_.reserve(edge_list.size());
  for (const auto& [a, b] : edge_list) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw std::invalid_argument("edge (" + std::to_string(a) + "," + std::to_string(b) +
                                  ") out of range for n = " + std::to_string(n));
    if (a == b)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
    edges_.push_back(make_edge(a, b));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const auto& [u, v] : edges_) {
    adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
  }
}

VertexSet reachable_within(const Graph& g, VertexSet allowed, int start) {
  std::uint64_t inside = allowed.bits();
  std::uint64_t reached = std::uint64_t{1} << start;
  std::uint64_t frontier = reached;
  while (frontier != 0) {
    std::uint64_t expand = 0;
    for (std::uint64_t b = frontier; b != 0; b &= b - 1)
      expand |= g.adjacency_bits(std::countr_zero(b));
    frontier = expand & inside & ~reached;
    reached |= frontier;
  }
  return VertexSet(reached);
}

bool is_connected(const Graph& g) {
  return reachable_within(g, g.vertices(), 0) == g.vertices();
}

bool is_connected_induced(const Graph& g, VertexSet s) {
  if (s.empty()) throw std::invalid_argument("induced connectivity of the empty set");
  if (!s.is_subset_of(g.vertices()))
    throw std::invalid_argument("vertex set not contained in the graph");
  return reachable_within(g, s, s.lowest()) == s;
}

bool vertex_connectivity_at_least(const Graph& g, int k) {
  if (k < 1 || k > 3)
    throw std::invalid_argument("k-connectivity supported for k in {1,2,3} only");
  const int n = g.vertex_count();
  if (n < k + 1) return false;
  if (!is_connected(g)) return false;
  if (k == 1) return true;
  const VertexSet all = g.vertices();
  for (int v = 0; v < n; ++v) {
    VertexSet rest = all.without(v);
    if (!is_connected_induced(g, rest)) return false;
  }
  if (k == 2) return true;
  for (int v = 0; v < n; ++v) {
    for (int u = v + 1; u < n; ++u) {
      VertexSet rest = all.without(v).without(u);
      if (!is_connected_induced(g, rest)) return false;
    }
  }
  return true;
}

int min_degree(const Graph& g) {
  int best = g.vertex_count();
  for (int v = 0; v < g.vertex_count(); ++v) best = std::min(best, g.degree(v));
  return best;
}

EdgeSet cut_edges(const Graph& g, VertexSet x) {
  if (x.empty()) throw std::invalid_argument("cut of the empty set");
  if (!x.is_subset_of(g.vertices()))
    throw std::invalid_argument("vertex set not contained in the graph");
  if (x == g.vertices()) throw std::invalid_argument("cut of the full vertex set");
  EdgeSet out;
  for (const auto& [u, v] : g.edges())
    if (x.contains(u) != x.contains(v)) out.push_back({u, v});
  return out;
}

int cut_size(const Graph& g, VertexSet x) {
  int total = 0;
  std::uint64_t other = g.vertices().bits() & ~x.bits();
  for (std::uint64_t b = x.bits(); b != 0; b &= b - 1)
    total += std::popcount(g.adjacency_bits(std::countr_zero(b)) & other);
  return total;
}

VertexSet complement(const Graph& g, VertexSet x) {
  return g.vertices() - x;
}

}  // namespace bondcycle
