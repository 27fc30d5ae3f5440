#pragma once

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "bondcycle/generators.hpp"
#include "bondcycle/graph.hpp"

namespace bondcycle {

/// A bond of a connected graph: a bipartition (x, y) whose sides both
/// induce connected subgraphs, together with the cut between them.
/// Equivalently a minimal nonempty edge-cut. Instances are produced by
/// validate_bond and the search routines, which establish the invariants.
struct Bond {
  VertexSet x;
  VertexSet y;
  EdgeSet cut;

  int size() const { return static_cast<int>(cut.size()); }
};

/// Which side of a proposed bipartition fails to induce a connected subgraph.
enum class BondDefect { x_disconnected, y_disconnected };

const char* to_string(BondDefect defect);

using BondOutcome = std::variant<Bond, BondDefect>;

/// Checks the bipartition (x, V-x) of a connected graph. Returns the Bond
/// when both sides induce connected subgraphs, otherwise names the
/// disconnected side. Throws when g is disconnected or x is empty/full.
BondOutcome validate_bond(const Graph& g, VertexSet x);

/// m - n + 2, an upper bound on every bond size of a connected graph.
int bond_upper_bound(const Graph& g);

/// A bond of maximum size, found by exact branch and bound over connected
/// bipartitions. Among equally large bonds returns the one whose x side
/// (containing vertex 0) has the smallest bitmask. Requires g connected
/// with at least 2 vertices.
Bond largest_bond(const Graph& g);

/// Every bond of maximum size, one per unordered partition {x, y},
/// normalized so vertex 0 is in x and sorted by the x bitmask.
std::vector<Bond> all_largest_bonds(const Graph& g);

enum class BondCertificate { certified_optimal, unknown };

/// Certifies a candidate as a largest bond without searching when its size
/// meets the m - n + 2 upper bound; otherwise reports unknown. The
/// candidate is re-validated and rejected if inconsistent with g.
BondCertificate certified_largest_bond(const Graph& g, const Bond& candidate);

/// All realized bond sizes with one witness each.
struct CoSpectrum {
  std::map<int, Bond> witnesses;

  std::vector<int> sizes() const;
  bool contains(int size) const { return witnesses.count(size) > 0; }
};

/// Exact co-spectrum by enumeration of all connected bipartitions
/// containing vertex 0. Guarded at n <= 24.
CoSpectrum co_spectrum(const Graph& g);

/// When the largest bond reaches m - n + 2 the two sides necessarily
/// induce trees; returns that bond as the two-tree witness, or nullopt
/// when the graph is not dual Hamiltonian.
std::optional<Bond> dual_hamiltonian_witness(const Graph& g);

bool is_dual_hamiltonian(const Graph& g);

/// The outer-rim prefix bond of P(n,k): x side {x_1..x_t}, size t + 2.
/// Valid for 1 <= t <= n - k.
Bond petersen_bond_step1(const PetersenGraph& pg, int t);
Bond petersen_bond_step1(int n, int k, int t);

/// The mixed-rim bond of P(n,k): x side {x_1..x_{n-k}, y_1..y_i}, size
/// n - k + i + 2. Valid for 1 <= i <= k.
Bond petersen_bond_step2(const PetersenGraph& pg, int i);
Bond petersen_bond_step2(int n, int k, int i);

/// A bond of P(n,k) of any requested size in {3, ..., n + 2}, dispatching
/// to the prefix or mixed-rim construction.
Bond petersen_bond_of_size(const PetersenGraph& pg, int size);
Bond petersen_bond_of_size(int n, int k, int size);

}  // namespace bondcycle
