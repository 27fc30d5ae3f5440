#include "bondcycle/conjecture.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>

#include "bondcycle/graph_io.hpp"

namespace bondcycle {

int cycle_meets_bond(const Cycle& cycle, const Bond& bond) {
  // both edge lists are sorted canonically
  int shared = 0;
  auto c = cycle.edges.begin();
  auto b = bond.cut.begin();
  while (c != cycle.edges.end() && b != bond.cut.end()) {
    if (*c < *b) {
      ++c;
    } else if (*b < *c) {
      ++b;
    } else {
      ++shared;
      ++c;
      ++b;
    }
  }
  return shared;
}

ConjectureReport check_conjecture(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("check_conjecture needs a connected graph");

  ConjectureReport report;
  report.n = g.vertex_count();
  report.m = g.edge_count();
  report.three_connected = vertex_connectivity_at_least(g, 3);

  std::vector<Cycle> cycles = all_longest_cycles(g);  // rejects acyclic input
  std::vector<Bond> bonds = all_largest_bonds(g);
  report.circumference = cycles.front().length();
  report.largest_bond_size = bonds.front().size();
  report.num_longest_cycles = static_cast<long>(cycles.size());
  report.num_largest_bonds = static_cast<long>(bonds.size());

  int min_shared = std::numeric_limits<int>::max();
  bool containment_consistent = true;
  bool all_even = true;
  for (const Cycle& cycle : cycles) {
    VertexSet on_cycle;
    for (int v : cycle.vertices) on_cycle = on_cycle.with(v);
    for (const Bond& bond : bonds) {
      const int shared = cycle_meets_bond(cycle, bond);
      min_shared = std::min(min_shared, shared);
      if (shared % 2 != 0) all_even = false;
      // disjoint exactly when the cycle sits inside one side
      const bool one_side =
          on_cycle.is_subset_of(bond.x) || on_cycle.is_subset_of(bond.y);
      if ((shared == 0) != one_side) containment_consistent = false;
      if (shared == 0 && !report.disjoint_witness)
        report.disjoint_witness = std::make_pair(cycle, bond);
    }
  }
  report.min_shared_edges = min_shared;
  report.all_pairs_meet = min_shared >= 1;
  report.all_shared_counts_even = all_even;
  report.side_containment_consistent = containment_consistent;

  int min_side = report.n;
  for (const Bond& bond : bonds)
    min_side = std::min({min_side, bond.x.count(), bond.y.count()});
  report.min_bond_side_size = min_side;

  HypothesisFlags flags = classify_hypotheses(report);
  report.hypothesis_long_cycle = flags.long_cycle;
  report.hypothesis_large_bond = flags.large_bond;
  return report;
}

HypothesisFlags classify_hypotheses(const ConjectureReport& report) {
  HypothesisFlags flags;
  flags.long_cycle = report.circumference >= report.n - 3;
  flags.large_bond = report.largest_bond_size >= report.m - report.n - 1;
  return flags;
}

ScopeVerdict verify_hypothesis_consistency(const ConjectureReport& report) {
  if (!report.three_connected)
    throw std::invalid_argument("verify_hypothesis_consistency applies to 3-connected graphs only");
  const bool covered = report.hypothesis_long_cycle || report.hypothesis_large_bond;
  if (covered && !report.all_pairs_meet) return ScopeVerdict::theorem_contradiction;
  return ScopeVerdict::consistent;
}

namespace {

struct WorkerTally {
  SweepSummary summary;
  // violations carry their input position so any worker count merges the same
  std::vector<std::pair<long, std::string>> violations;
  long first_contradiction = -1;
  std::string contradiction_graph6;
};

void process_graph(const Graph& g, long seq, const BatchOptions& options, WorkerTally& tally) {
  ++tally.summary.graphs_checked;
  const bool three = vertex_connectivity_at_least(g, 3);
  if (three) ++tally.summary.three_connected_count;
  const bool check =
      three || (options.include_two_connected && vertex_connectivity_at_least(g, 2));
  if (!check) return;
  try {
    ConjectureReport report = check_conjecture(g);
    ++tally.summary.reports_computed;
    if (report.hypothesis_long_cycle && report.hypothesis_large_bond)
      ++tally.summary.hypothesis_both;
    else if (report.hypothesis_long_cycle)
      ++tally.summary.hypothesis_long_cycle;
    else if (report.hypothesis_large_bond)
      ++tally.summary.hypothesis_large_bond;
    else
      ++tally.summary.hypothesis_neither;
    if (!report.all_shared_counts_even) ++tally.summary.parity_failures;
    if (three && report.min_bond_side_size < 2) ++tally.summary.small_side_bonds;
    if (!report.all_pairs_meet) {
      ++tally.summary.conjecture_violations;
      tally.violations.emplace_back(seq, write_graph6(g));
      if (three && verify_hypothesis_consistency(report) == ScopeVerdict::theorem_contradiction &&
          tally.first_contradiction < 0) {
        tally.first_contradiction = seq;
        tally.contradiction_graph6 = write_graph6(g);
      }
    }
  } catch (const InfeasibleError&) {
    ++tally.summary.failures;
  } catch (const std::invalid_argument&) {
    // acyclic or otherwise uncheckable graph in the stream
    ++tally.summary.failures;
  }
}

SweepSummary merge(std::vector<WorkerTally>& tallies, const BatchOptions& options) {
  SweepSummary total;
  std::vector<std::pair<long, std::string>> violations;
  long first_contradiction = std::numeric_limits<long>::max();
  std::string contradiction_graph6;
  for (WorkerTally& t : tallies) {
    total.graphs_checked += t.summary.graphs_checked;
    total.three_connected_count += t.summary.three_connected_count;
    total.reports_computed += t.summary.reports_computed;
    total.conjecture_violations += t.summary.conjecture_violations;
    total.hypothesis_long_cycle += t.summary.hypothesis_long_cycle;
    total.hypothesis_large_bond += t.summary.hypothesis_large_bond;
    total.hypothesis_both += t.summary.hypothesis_both;
    total.hypothesis_neither += t.summary.hypothesis_neither;
    total.failures += t.summary.failures;
    total.parity_failures += t.summary.parity_failures;
    total.small_side_bonds += t.summary.small_side_bonds;
    for (auto& v : t.violations) violations.push_back(std::move(v));
    if (t.first_contradiction >= 0 && t.first_contradiction < first_contradiction) {
      first_contradiction = t.first_contradiction;
      contradiction_graph6 = t.contradiction_graph6;
    }
  }
  if (options.halt_on_contradiction && first_contradiction != std::numeric_limits<long>::max())
    throw TheoremContradiction(
        "3-connected graph under a proved hypothesis has a disjoint longest-cycle/"
        "largest-bond pair (graph6 " +
        contradiction_graph6 + "); this indicates an implementation bug");
  std::sort(violations.begin(), violations.end());
  total.violation_graphs.reserve(violations.size());
  for (auto& [seq, g6] : violations) total.violation_graphs.push_back(std::move(g6));
  return total;
}

}  // namespace

SweepSummary batch_verify(const GraphSource& source, const BatchOptions& options) {
  const int threads = std::max(1, options.threads);

  if (threads == 1) {
    std::vector<WorkerTally> tally(1);
    long seq = 0;
    while (auto g = source()) process_graph(*g, seq++, options, tally[0]);
    return merge(tally, options);
  }

  std::vector<WorkerTally> tallies(static_cast<std::size_t>(threads));
  std::mutex source_mutex;
  std::atomic<bool> abort{false};
  long seq = 0;
  auto pull = [&]() -> std::optional<std::pair<long, Graph>> {
    if (abort.load(std::memory_order_relaxed)) return std::nullopt;
    std::lock_guard<std::mutex> lock(source_mutex);
    auto g = source();
    if (!g) return std::nullopt;
    return std::make_pair(seq++, std::move(*g));
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      WorkerTally& tally = tallies[static_cast<std::size_t>(t)];
      while (auto item = pull()) {
        process_graph(item->second, item->first, options, tally);
        if (options.halt_on_contradiction && tally.first_contradiction >= 0)
          abort.store(true, std::memory_order_relaxed);
      }
    });
  }
  for (auto& worker : pool) worker.join();
  return merge(tallies, options);
}

}  // namespace bondcycle
