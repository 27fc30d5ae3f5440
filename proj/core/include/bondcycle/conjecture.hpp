#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bondcycle/bonds.hpp"
#include "bondcycle/cycles.hpp"
#include "bondcycle/graph.hpp"

namespace bondcycle {

/// Number of edges shared by a cycle and a bond's cut. The cycle meets
/// the bond when the count is positive; crossings of a bipartition pair
/// up, so the count is always even.
int cycle_meets_bond(const Cycle& cycle, const Bond& bond);

/// Per-graph verdict for "every longest cycle meets every largest bond",
/// quantified over all longest cycles and all largest bonds.
struct ConjectureReport {
  int n = 0;
  int m = 0;
  bool three_connected = false;
  int circumference = 0;
  int largest_bond_size = 0;
  long num_longest_cycles = 0;
  long num_largest_bonds = 0;
  bool all_pairs_meet = false;
  /// Minimum of |E(C) ∩ cut(B)| over all longest-cycle/largest-bond pairs.
  int min_shared_edges = 0;
  /// A cycle crosses any bipartition an even number of times; recorded,
  /// not assumed.
  bool all_shared_counts_even = false;
  /// Smallest side, in vertices, over all largest bonds.
  int min_bond_side_size = 0;
  bool hypothesis_long_cycle = false;  // circumference >= n - 3
  bool hypothesis_large_bond = false;  // largest bond >= m - n - 1
  /// A pair sharing no edge iff the cycle sits inside one bond side,
  /// confirmed for every pair.
  bool side_containment_consistent = false;
  std::optional<std::pair<Cycle, Bond>> disjoint_witness;
};

/// Full cross-check of all longest cycles against all largest bonds.
/// Requires a connected graph containing a cycle.
ConjectureReport check_conjecture(const Graph& g);

struct HypothesisFlags {
  bool long_cycle = false;
  bool large_bond = false;
};

HypothesisFlags classify_hypotheses(const ConjectureReport& report);

enum class ScopeVerdict { consistent, theorem_contradiction };

/// For a 3-connected graph's report: satisfying either hypothesis while
/// some pair fails to meet contradicts a proved theorem and means an
/// implementation bug. Throws on reports of non-3-connected graphs.
ScopeVerdict verify_hypothesis_consistency(const ConjectureReport& report);

struct SweepSummary {
  long graphs_checked = 0;
  long three_connected_count = 0;
  long reports_computed = 0;
  long conjecture_violations = 0;
  std::vector<std::string> violation_graphs;  // graph6, in input order
  long hypothesis_long_cycle = 0;
  long hypothesis_large_bond = 0;
  long hypothesis_both = 0;
  long hypothesis_neither = 0;
  long failures = 0;
  /// Reports with an odd cycle/bond shared count (always 0; see
  /// ConjectureReport::all_shared_counts_even).
  long parity_failures = 0;
  /// 3-connected reports where some largest bond has a side smaller than
  /// 2 vertices (always 0 for 3-connected graphs).
  long small_side_bonds = 0;
};

struct BatchOptions {
  /// Also check graphs that are 2-connected but not 3-connected.
  bool include_two_connected = false;
  int threads = 1;
  /// Throw TheoremContradiction instead of finishing the sweep.
  bool halt_on_contradiction = true;
};

/// Pull-based graph stream; nullopt ends the stream.
using GraphSource = std::function<std::optional<Graph>()>;

/// Runs check_conjecture on every 3-connected graph of the stream
/// (non-3-connected graphs are counted and skipped unless included via
/// options). Per-graph failures are counted and the stream continues.
/// The summary is identical for any worker count.
SweepSummary batch_verify(const GraphSource& source, const BatchOptions& options = {});

}  // namespace bondcycle
