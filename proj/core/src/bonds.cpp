#include "bondcycle/bonds.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace bondcycle {

namespace {

int edges_within(const Graph& g, std::uint64_t side) {
  int doubled = 0;
  for (std::uint64_t b = side; b != 0; b &= b - 1)
    doubled += std::popcount(g.adjacency_bits(std::countr_zero(b)) & side);
  return doubled / 2;
}

void require_connected(const Graph& g, const char* who) {
  if (!is_connected(g)) throw std::invalid_argument(std::string(who) + " needs a connected graph");
}

// Exact search over the bipartitions of a connected graph with vertex 0
// pinned to the X side. Vertices are decided in breadth-first order from
// vertex 0, X branch before Y branch. Both prunes are admissible:
//  - a decided side whose vertices cannot all be joined through the still
//    undecided vertices can never induce a connected subgraph;
//  - decided cross edges plus edges still touching an undecided vertex
//    bound the final cut size from above.
//
// In maximize mode `visit` sees each strict improvement and the floor
// follows the incumbent; otherwise every connected bipartition with cut
// size >= floor is visited.
class BipartitionSearch {
 public:
  explicit BipartitionSearch(const Graph& g) : g_(g), all_(g.vertices().bits()) {
    const int n = g.vertex_count();
    order_.reserve(static_cast<std::size_t>(n));
    order_.push_back(0);
    std::uint64_t seen = 1;
    for (std::size_t i = 0; i < order_.size(); ++i) {
      std::uint64_t fresh = g.adjacency_bits(order_[i]) & ~seen;
      seen |= fresh;
      for (; fresh != 0; fresh &= fresh - 1) order_.push_back(std::countr_zero(fresh));
    }
  }

  template <typename Visit>
  void run(int floor, bool maximize, int stop_at, Visit&& visit) {
    best_ = floor - 1;
    maximize_ = maximize;
    floor_ = floor;
    stop_at_ = stop_at;
    stop_ = false;
    recurse(1, std::uint64_t{1}, 0, 0, 0, visit);
  }

 private:
  template <typename Visit>
  void recurse(std::size_t depth, std::uint64_t x, std::uint64_t y, int cross, int within,
               Visit& visit) {
    if (stop_) return;
    const int need = maximize_ ? best_ + 1 : floor_;
    if (cross + (g_.edge_count() - within) < need) return;
    const std::uint64_t undecided = all_ & ~(x | y);
    if (!joinable(x, undecided) || !joinable(y, undecided)) return;

    if (depth == order_.size()) {
      if (y == 0) return;
      // joinable with nothing undecided means both sides are connected
      if (maximize_) {
        if (cross > best_) {
          best_ = cross;
          visit(VertexSet(x), cross);
          if (best_ >= stop_at_) stop_ = true;
        }
      } else if (cross >= floor_) {
        visit(VertexSet(x), cross);
      }
      return;
    }

    const int v = order_[depth];
    const std::uint64_t vbit = std::uint64_t{1} << v;
    const int to_x = std::popcount(g_.adjacency_bits(v) & x);
    const int to_y = std::popcount(g_.adjacency_bits(v) & y);
    recurse(depth + 1, x | vbit, y, cross + to_y, within + to_x + to_y, visit);
    recurse(depth + 1, x, y | vbit, cross + to_x, within + to_x + to_y, visit);
  }

  // Every vertex of `side` reachable from its lowest member through
  // side | undecided.
  bool joinable(std::uint64_t side, std::uint64_t undecided) const {
    if (side == 0) return true;
    const std::uint64_t allowed = side | undecided;
    std::uint64_t reached = side & (~side + 1);
    std::uint64_t frontier = reached;
    while (frontier != 0) {
      std::uint64_t expand = 0;
      for (std::uint64_t b = frontier; b != 0; b &= b - 1)
        expand |= g_.adjacency_bits(std::countr_zero(b));
      frontier = expand & allowed & ~reached;
      reached |= frontier;
    }
    return (side & ~reached) == 0;
  }

  const Graph& g_;
  std::uint64_t all_;
  std::vector<int> order_;
  int best_ = 0;
  int floor_ = 1;
  int stop_at_ = std::numeric_limits<int>::max();
  bool maximize_ = false;
  bool stop_ = false;
};

Bond bond_from_side(const Graph& g, VertexSet x) {
  return Bond{x, complement(g, x), cut_edges(g, x)};
}

// Best cut size with one witness side; 0 when no bipartition exists (n = 1).
std::pair<int, VertexSet> max_bond_side(const Graph& g, int stop_at) {
  BipartitionSearch search(g);
  int best = 0;
  VertexSet side;
  search.run(1, /*maximize=*/true, stop_at,
             [&](VertexSet x, int cut) {
               best = cut;
               side = x;
             });
  return {best, side};
}

constexpr int kNoCap = std::numeric_limits<int>::max();

}  // namespace

const char* to_string(BondDefect defect) {
  switch (defect) {
    case BondDefect::x_disconnected:
      return "x side induces a disconnected subgraph";
    case BondDefect::y_disconnected:
      return "y side induces a disconnected subgraph";
  }
  return "unknown defect";
}

BondOutcome validate_bond(const Graph& g, VertexSet x) {
  require_connected(g, "validate_bond");
  if (x.empty()) throw std::invalid_argument("validate_bond: x side is empty");
  if (!x.is_subset_of(g.vertices()))
    throw std::invalid_argument("validate_bond: x contains out-of-range vertices");
  if (x == g.vertices()) throw std::invalid_argument("validate_bond: y side is empty");
  VertexSet y = complement(g, x);
  if (!is_connected_induced(g, x)) return BondDefect::x_disconnected;
  if (!is_connected_induced(g, y)) return BondDefect::y_disconnected;
  return bond_from_side(g, x);
}

int bond_upper_bound(const Graph& g) {
  require_connected(g, "bond_upper_bound");
  return g.edge_count() - g.vertex_count() + 2;
}

Bond largest_bond(const Graph& g) {
  require_connected(g, "largest_bond");
  if (g.vertex_count() < 2)
    throw std::invalid_argument("largest_bond needs at least 2 vertices");
  auto [best, first_side] = max_bond_side(g, kNoCap);

  // Second pass at the known optimum picks the smallest x bitmask, so
  // equal largest bonds always resolve the same way.
  BipartitionSearch search(g);
  std::uint64_t smallest = first_side.bits();
  search.run(best, /*maximize=*/false, kNoCap, [&](VertexSet x, int cut) {
    if (cut == best && x.bits() < smallest) smallest = x.bits();
  });
  return bond_from_side(g, VertexSet(smallest));
}

std::vector<Bond> all_largest_bonds(const Graph& g) {
  require_connected(g, "all_largest_bonds");
  if (g.vertex_count() < 2) return {};
  const int best = max_bond_side(g, kNoCap).first;
  std::vector<std::uint64_t> sides;
  BipartitionSearch search(g);
  search.run(best, /*maximize=*/false, kNoCap, [&](VertexSet x, int cut) {
    if (cut == best) sides.push_back(x.bits());
  });
  std::sort(sides.begin(), sides.end());
  std::vector<Bond> out;
  out.reserve(sides.size());
  for (std::uint64_t s : sides) out.push_back(bond_from_side(g, VertexSet(s)));
  return out;
}

BondCertificate certified_largest_bond(const Graph& g, const Bond& candidate) {
  BondOutcome check = validate_bond(g, candidate.x);
  const Bond* valid = std::get_if<Bond>(&check);
  if (valid == nullptr || valid->cut != candidate.cut || valid->y != candidate.y)
    throw std::invalid_argument("certified_largest_bond: candidate is not a bond of this graph");
  return candidate.size() == bond_upper_bound(g) ? BondCertificate::certified_optimal
                                                 : BondCertificate::unknown;
}

std::vector<int> CoSpectrum::sizes() const {
  std::vector<int> out;
  out.reserve(witnesses.size());
  for (const auto& [size, bond] : witnesses) out.push_back(size);
  return out;
}

CoSpectrum co_spectrum(const Graph& g) {
  require_connected(g, "co_spectrum");
  if (g.vertex_count() > 24)
    throw InfeasibleError("co_spectrum enumeration is guarded at n <= 24 (got n = " +
                          std::to_string(g.vertex_count()) + ")");
  std::map<int, std::uint64_t> first_side;
  if (g.vertex_count() >= 2) {
    BipartitionSearch search(g);
    search.run(1, /*maximize=*/false, kNoCap, [&](VertexSet x, int cut) {
      first_side.emplace(cut, x.bits());
    });
  }
  CoSpectrum spectrum;
  for (const auto& [size, side] : first_side)
    spectrum.witnesses.emplace(size, bond_from_side(g, VertexSet(side)));
  return spectrum;
}

std::optional<Bond> dual_hamiltonian_witness(const Graph& g) {
  require_connected(g, "dual_hamiltonian_witness");
  if (g.vertex_count() < 2) return std::nullopt;
  const int target = bond_upper_bound(g);
  // A bond of size m - n + 2 is maximal outright, so the search may stop
  // at the first one it finds.
  auto [best, side] = max_bond_side(g, target);
  if (best != target) return std::nullopt;
  Bond bond = bond_from_side(g, side);
  // Both sides connected with m - (m-n+2) = n - 2 internal edges forces
  // exactly |x|-1 and |y|-1 edges per side: two trees. Re-check anyway.
  if (edges_within(g, bond.x.bits()) != bond.x.count() - 1 ||
      edges_within(g, bond.y.bits()) != bond.y.count() - 1)
    throw TheoremContradiction(
        "dual_hamiltonian_witness: maximum bond sides are not trees despite c* = m - n + 2");
  return bond;
}

bool is_dual_hamiltonian(const Graph& g) {
  return dual_hamiltonian_witness(g).has_value();
}

namespace {

Bond checked_construction(const PetersenGraph& pg, VertexSet side, int expected_size,
                          const char* who) {
  BondOutcome outcome = validate_bond(pg.graph, side);
  if (const BondDefect* defect = std::get_if<BondDefect>(&outcome))
    throw TheoremContradiction(std::string(who) + ": constructed side is invalid (" +
                               to_string(*defect) + ")");
  Bond bond = std::get<Bond>(std::move(outcome));
  if (bond.size() != expected_size)
    throw TheoremContradiction(std::string(who) + ": constructed bond has size " +
                               std::to_string(bond.size()) + ", expected " +
                               std::to_string(expected_size));
  return bond;
}

}  // namespace

Bond petersen_bond_step1(const PetersenGraph& pg, int t) {
  if (t < 1 || t > pg.n - pg.k)
    throw std::invalid_argument("petersen_bond_step1: t must satisfy 1 <= t <= n - k");
  VertexSet side;
  for (int i = 0; i < t; ++i) side = side.with(pg.labels.outer[static_cast<std::size_t>(i)]);
  return checked_construction(pg, side, t + 2, "petersen_bond_step1");
}

Bond petersen_bond_step1(int n, int k, int t) {
  return petersen_bond_step1(petersen(n, k), t);
}

Bond petersen_bond_step2(const PetersenGraph& pg, int i) {
  if (i < 1 || i > pg.k)
    throw std::invalid_argument("petersen_bond_step2: i must satisfy 1 <= i <= k");
  VertexSet side;
  for (int j = 0; j < pg.n - pg.k; ++j)
    side = side.with(pg.labels.outer[static_cast<std::size_t>(j)]);
  for (int j = 0; j < i; ++j) side = side.with(pg.labels.inner[static_cast<std::size_t>(j)]);
  return checked_construction(pg, side, pg.n - pg.k + i + 2, "petersen_bond_step2");
}

Bond petersen_bond_step2(int n, int k, int i) {
  return petersen_bond_step2(petersen(n, k), i);
}

Bond petersen_bond_of_size(const PetersenGraph& pg, int size) {
  if (size < 3 || size > pg.n + 2)
    throw std::invalid_argument("petersen_bond_of_size: size must lie in {3, ..., n + 2}");
  if (size <= pg.n - pg.k + 2) return petersen_bond_step1(pg, size - 2);
  return petersen_bond_step2(pg, size - (pg.n - pg.k + 2));
}

Bond petersen_bond_of_size(int n, int k, int size) {
  return petersen_bond_of_size(petersen(n, k), size);
}

}  // namespace bondcycle
