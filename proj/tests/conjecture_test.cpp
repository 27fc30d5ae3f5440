#include <doctest.h>

#include <random>

#include "bondcycle/conjecture.hpp"
#include "bondcycle/generators.hpp"

using namespace bondcycle;

namespace {

Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) edges.push_back({u, v});
  return Graph(n, edges);
}

std::vector<Bond> every_bond(const Graph& g) {
  std::vector<Bond> bonds;
  const std::uint64_t full = g.vertices().bits();
  for (std::uint64_t side = 1; side < full; side += 2) {
    auto outcome = validate_bond(g, VertexSet(side));
    if (Bond* b = std::get_if<Bond>(&outcome)) bonds.push_back(std::move(*b));
  }
  return bonds;
}

}  // namespace

TEST_CASE("shared edge counting") {
  Graph k4 = complete_graph(4);
  Cycle ham = all_longest_cycles(k4).front();
  // two bonds cross the 4-cycle twice; the alternating split crosses 4 times
  int min_shared = 4;
  for (const Bond& b : all_largest_bonds(k4)) {
    const int shared = cycle_meets_bond(ham, b);
    CHECK(shared >= 2);
    CHECK(shared % 2 == 0);
    min_shared = std::min(min_shared, shared);
  }
  CHECK(min_shared == 2);

  // a cycle inside one side shares nothing with the cut
  Graph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
  Bond middle = std::get<Bond>(validate_bond(two_triangles, VertexSet::of({0, 1, 2})));
  Cycle left = make_cycle(two_triangles, {0, 1, 2});
  CHECK(cycle_meets_bond(left, middle) == 0);
}

TEST_CASE("shared counts are even for every cycle/bond pair") {
  std::mt19937 rng(808);
  std::bernoulli_distribution flip(0.5);
  int pairs = 0;
  while (pairs < 2000) {
    const int n = 4 + static_cast<int>(rng() % 4);
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v)
      for (int u = 0; u < v; ++u)
        if (flip(rng)) edges.push_back({u, v});
    Graph g(n, edges);
    if (!is_connected(g) || circumference(g) == 0) continue;
    auto cycles = all_longest_cycles(g);
    for (const Bond& b : every_bond(g))
      for (const Cycle& c : cycles) {
        CHECK(cycle_meets_bond(c, b) % 2 == 0);
        ++pairs;
      }
  }
}

TEST_CASE("check_conjecture on K4") {
  ConjectureReport r = check_conjecture(complete_graph(4));
  CHECK(r.three_connected);
  CHECK(r.all_pairs_meet);
  CHECK(r.min_shared_edges == 2);
  CHECK(r.all_shared_counts_even);
  CHECK(r.side_containment_consistent);
  CHECK(r.hypothesis_long_cycle);  // c = n
  CHECK_FALSE(r.disjoint_witness.has_value());
}

TEST_CASE("check_conjecture on the Petersen graph") {
  ConjectureReport r = check_conjecture(petersen(5, 2).graph);
  CHECK(r.three_connected);
  CHECK(r.circumference == 9);
  CHECK(r.largest_bond_size == 7);
  CHECK(r.all_pairs_meet);
  CHECK(r.hypothesis_long_cycle);  // 9 >= 10 - 3
  CHECK(r.hypothesis_large_bond);  // 7 >= 15 - 10 - 1
  CHECK(r.min_bond_side_size >= 2);
}

TEST_CASE("check_conjecture rejects unusable graphs") {
  CHECK_THROWS_AS(check_conjecture(Graph(4, {{0, 1}, {2, 3}})), std::invalid_argument);
  CHECK_THROWS_AS(check_conjecture(Graph(3, {{0, 1}, {1, 2}})), std::invalid_argument);
}

TEST_CASE("hypothesis classification") {
  ConjectureReport r = check_conjecture(petersen(8, 3).graph);
  HypothesisFlags flags = classify_hypotheses(r);
  // c*(P(8,3)) = 10 = m - n + 2 >= m - n - 1
  CHECK(flags.large_bond);
  CHECK(verify_hypothesis_consistency(r) == ScopeVerdict::consistent);
}

TEST_CASE("theorem scope verdicts") {
  ConjectureReport r = check_conjecture(complete_graph(4));
  CHECK(verify_hypothesis_consistency(r) == ScopeVerdict::consistent);

  ConjectureReport not_three;
  not_three.three_connected = false;
  CHECK_THROWS_AS(verify_hypothesis_consistency(not_three), std::invalid_argument);

  // a report shaped like a theorem violation (only reachable through a bug)
  ConjectureReport impossible;
  impossible.three_connected = true;
  impossible.hypothesis_long_cycle = true;
  impossible.all_pairs_meet = false;
  CHECK(verify_hypothesis_consistency(impossible) == ScopeVerdict::theorem_contradiction);
}

TEST_CASE("batch verify counts and filters") {
  auto single = [](Graph g) {
    bool done = false;
    return [g = std::move(g), done]() mutable -> std::optional<Graph> {
      if (done) return std::nullopt;
      done = true;
      return g;
    };
  };

  SweepSummary empty = batch_verify([]() -> std::optional<Graph> { return std::nullopt; }, {});
  CHECK(empty.graphs_checked == 0);
  CHECK(empty.conjecture_violations == 0);

  // 2-connected graphs are skipped by default, checked when included
  SweepSummary skipped = batch_verify(single(cycle_graph(5)), {});
  CHECK(skipped.graphs_checked == 1);
  CHECK(skipped.three_connected_count == 0);
  CHECK(skipped.reports_computed == 0);

  SweepSummary included =
      batch_verify(single(cycle_graph(5)), BatchOptions{.include_two_connected = true});
  CHECK(included.reports_computed == 1);
  CHECK(included.conjecture_violations == 0);
  CHECK(included.three_connected_count == 0);
}

TEST_CASE("batch verify sweeps 5-vertex graphs without violations") {
  GraphEnumerator stream(5);
  SweepSummary summary = batch_verify([&] { return stream.next(); }, {});
  CHECK(summary.graphs_checked == 1024);
  CHECK(summary.three_connected_count == 26);
  CHECK(summary.reports_computed == 26);
  CHECK(summary.conjecture_violations == 0);
  CHECK(summary.parity_failures == 0);
  CHECK(summary.small_side_bonds == 0);
}

TEST_CASE("batch verify is thread-count invariant") {
  auto run = [](int threads) {
    GraphEnumerator stream(5, GraphFilter{.connected = true});
    return batch_verify([&] { return stream.next(); },
                        BatchOptions{.include_two_connected = true, .threads = threads});
  };
  SweepSummary one = run(1);
  SweepSummary four = run(4);
  CHECK(one.graphs_checked == four.graphs_checked);
  CHECK(one.reports_computed == four.reports_computed);
  CHECK(one.conjecture_violations == four.conjecture_violations);
  CHECK(one.hypothesis_both == four.hypothesis_both);
  CHECK(one.hypothesis_neither == four.hypothesis_neither);
  CHECK(one.violation_graphs == four.violation_graphs);
}

TEST_CASE("the counterexample family violates the conjecture as a 2-connected stream entry") {
  auto cx = counterexample_two_connected(6);
  bool done = false;
  auto source = [&]() -> std::optional<Graph> {
    if (done) return std::nullopt;
    done = true;
    return cx.graph;
  };
  SweepSummary summary =
      batch_verify(source, BatchOptions{.include_two_connected = true});
  CHECK(summary.graphs_checked == 1);
  CHECK(summary.three_connected_count == 0);
  CHECK(summary.conjecture_violations == 1);
  REQUIRE(summary.violation_graphs.size() == 1);
}

TEST_CASE("every bond meets every hamiltonian cycle on hamiltonian graphs") {
  for (const Graph& g : {complete_graph(4), complete_graph(5), cycle_graph(6),
                         petersen(3, 1).graph}) {
    auto bonds = every_bond(g);
    auto cycles = all_longest_cycles(g);
    REQUIRE(cycles.front().length() == g.vertex_count());
    for (const Cycle& c : cycles)
      for (const Bond& b : bonds) CHECK(cycle_meets_bond(c, b) >= 2);
  }
}

TEST_CASE("disjointness equals side containment across random graphs") {
  std::mt19937 rng(5150);
  std::bernoulli_distribution flip(0.4);
  for (int i = 0; i < 60; ++i) {
    const int n = 4 + static_cast<int>(rng() % 4);
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v)
      for (int u = 0; u < v; ++u)
        if (flip(rng)) edges.push_back({u, v});
    Graph g(n, edges);
    if (!is_connected(g) || circumference(g) == 0) continue;
    CHECK(check_conjecture(g).side_containment_consistent);
  }
}
