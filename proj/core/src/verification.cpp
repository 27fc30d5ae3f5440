#include "bondcycle/verification.hpp"

#include <chrono>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

#include "bondcycle/bonds.hpp"
#include "bondcycle/conjecture.hpp"
#include "bondcycle/cycles.hpp"
#include "bondcycle/generators.hpp"
#include "bondcycle/graph_io.hpp"

namespace bondcycle {

namespace {

// ---------------------------------------------------------------------
// Naive oracles. Deliberately plain (adjacency queries, vector DFS, raw
// edge scans) and independent of the branch-and-bound engines they check.
// ---------------------------------------------------------------------

bool naive_connected_subset(const Graph& g, std::uint64_t members) {
  if (members == 0) return false;
  const int n = g.vertex_count();
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  int total = 0;
  int first = -1;
  for (int v = 0; v < n; ++v) {
    if ((members >> v) & 1) {
      in[static_cast<std::size_t>(v)] = 1;
      ++total;
      if (first < 0) first = v;
    }
  }
  std::vector<int> stack{first};
  seen[static_cast<std::size_t>(first)] = 1;
  int visited = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < n; ++w) {
      if (g.has_edge(v, w) && in[static_cast<std::size_t>(w)] &&
          !seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++visited;
        stack.push_back(w);
      }
    }
  }
  return visited == total;
}

int naive_cut_count(const Graph& g, std::uint64_t side) {
  int cut = 0;
  for (const auto& [u, v] : g.edges())
    if (((side >> u) & 1) != ((side >> v) & 1)) ++cut;
  return cut;
}

int naive_inside_count(const Graph& g, std::uint64_t side) {
  int inside = 0;
  for (const auto& [u, v] : g.edges())
    if (((side >> u) & 1) && ((side >> v) & 1)) ++inside;
  return inside;
}

// Maximum cut over all bipartitions with both sides inducing connected
// subgraphs, by checking all 2^(n-1) subsets containing vertex 0.
int naive_largest_bond_size(const Graph& g) {
  const int n = g.vertex_count();
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  int best = 0;
  for (std::uint64_t side = 1; side < full; side += 2) {
    if (!naive_connected_subset(g, side)) continue;
    if (!naive_connected_subset(g, full & ~side)) continue;
    best = std::max(best, naive_cut_count(g, side));
  }
  return best;
}

bool naive_two_tree_partition(const Graph& g) {
  const int n = g.vertex_count();
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t side = 1; side < full; side += 2) {
    const std::uint64_t other = full & ~side;
    if (naive_inside_count(g, side) != std::popcount(side) - 1) continue;
    if (naive_inside_count(g, other) != std::popcount(other) - 1) continue;
    if (!naive_connected_subset(g, side)) continue;
    if (!naive_connected_subset(g, other)) continue;
    return true;
  }
  return false;
}

// Longest simple cycle by enumerating every path from its minimum vertex.
int naive_circumference(const Graph& g) {
  const int n = g.vertex_count();
  int best = 0;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::vector<int> path;
  std::function<void(int)> grow = [&](int start) {
    const int head = path.back();
    for (int w = start + 1; w < n; ++w) {
      if (!g.has_edge(head, w) || used[static_cast<std::size_t>(w)]) continue;
      used[static_cast<std::size_t>(w)] = 1;
      path.push_back(w);
      if (path.size() >= 3 && g.has_edge(w, start))
        best = std::max(best, static_cast<int>(path.size()));
      grow(start);
      path.pop_back();
      used[static_cast<std::size_t>(w)] = 0;
    }
  };
  for (int s = 0; s < n; ++s) {
    std::fill(used.begin(), used.end(), 0);
    used[static_cast<std::size_t>(s)] = 1;
    path.assign(1, s);
    grow(s);
  }
  return best;
}

Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution flip(p);
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (flip(rng)) edges.push_back({u, v});
  return Graph(n, edges);
}

Graph random_connected_graph(std::mt19937& rng, int min_n, int max_n) {
  std::uniform_int_distribution<int> pick_n(min_n, max_n);
  std::uniform_real_distribution<double> pick_p(0.25, 0.75);
  for (;;) {
    Graph g = random_graph(rng, pick_n(rng), pick_p(rng));
    if (is_connected(g)) return g;
  }
}

std::vector<std::pair<int, int>> petersen_parameters(int min_n, int max_n) {
  std::vector<std::pair<int, int>> out;
  for (int n = min_n; n <= max_n; ++n)
    for (int k = 1; 2 * k < n; ++k) out.push_back({n, k});
  return out;
}

// ---------------------------------------------------------------------

using Clock = std::chrono::steady_clock;

CriterionResult timed(int id, const char* name, double budget_ms,
                      const std::function<void(CriterionResult&)>& body) {
  CriterionResult result;
  result.id = id;
  result.name = name;
  const auto start = Clock::now();
  try {
    result.passed = true;
    body(result);
  } catch (const std::exception& e) {
    result.passed = false;
    result.detail = std::string("exception: ") + e.what();
  }
  result.wall_time_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  if (result.passed && budget_ms > 0 && result.wall_time_ms > budget_ms) {
    result.passed = false;
    result.detail += " [exceeded time budget of " + std::to_string(budget_ms / 1000.0) + " s]";
  }
  return result;
}

void expect(CriterionResult& r, bool condition, const std::string& what) {
  if (!condition) {
    r.passed = false;
    if (!r.detail.empty()) r.detail += "; ";
    r.detail += "FAILED: " + what;
  }
}

}  // namespace

CriterionResult verify_petersen_bond_values() {
  return timed(1, "petersen-largest-bond-values", 10'000, [](CriterionResult& r) {
    const Bond b52 = largest_bond(petersen(5, 2).graph);
    expect(r, b52.size() == 7, "largest bond of P(5,2) is " + std::to_string(b52.size()));
    const Bond b83 = largest_bond(petersen(8, 3).graph);
    expect(r, b83.size() == 10, "largest bond of P(8,3) is " + std::to_string(b83.size()));
    const PetersenGraph p204 = petersen(20, 4);
    const Bond candidate = petersen_bond_step2(p204, 4);
    expect(r, candidate.size() == 22,
           "constructed P(20,4) bond has size " + std::to_string(candidate.size()));
    expect(r,
           certified_largest_bond(p204.graph, candidate) == BondCertificate::certified_optimal,
           "size-22 bond of P(20,4) not certified optimal");
    if (r.passed) r.detail = "P(5,2): 7, P(8,3): 10, P(20,4): 22 certified";
  });
}

CriterionResult verify_co_spectrum_exhaustive() {
  return timed(2, "petersen-co-spectrum-exhaustive", 120'000, [](CriterionResult& r) {
    int graphs = 0;
    for (const auto& [n, k] : petersen_parameters(3, 9)) {
      const CoSpectrum spectrum = co_spectrum(petersen(n, k).graph);
      std::vector<int> expected;
      for (int s = 3; s <= n + 2; ++s) expected.push_back(s);
      expect(r, spectrum.sizes() == expected,
             "co-spectrum of P(" + std::to_string(n) + "," + std::to_string(k) +
                 ") differs from {3..n+2}");
      ++graphs;
    }
    if (r.passed)
      r.detail = "co-spectrum equals {3..n+2} on all " + std::to_string(graphs) +
                 " generalized Petersen graphs with n <= 9";
  });
}

CriterionResult verify_co_spectrum_constructive() {
  return timed(3, "petersen-co-spectrum-constructive", 30'000, [](CriterionResult& r) {
    long bonds = 0;
    for (const auto& [n, k] : petersen_parameters(3, 30)) {
      const PetersenGraph pg = petersen(n, k);
      for (int size = 3; size <= n + 2; ++size) {
        const Bond bond = petersen_bond_of_size(pg, size);
        expect(r, bond.size() == size,
               "constructed bond of P(" + std::to_string(n) + "," + std::to_string(k) +
                   ") missed size " + std::to_string(size));
        ++bonds;
      }
    }
    if (r.passed)
      r.detail = std::to_string(bonds) + " constructed bonds validated, every size 3..n+2, n <= 30";
  });
}

CriterionResult verify_dual_hamiltonian() {
  return timed(4, "dual-hamiltonian-two-tree", 0, [](CriterionResult& r) {
    // two-tree witnesses on every generalized Petersen graph that fits
    for (const auto& [n, k] : petersen_parameters(3, 12)) {
      const PetersenGraph pg = petersen(n, k);
      const auto witness = dual_hamiltonian_witness(pg.graph);
      expect(r, witness.has_value(),
             "P(" + std::to_string(n) + "," + std::to_string(k) + ") has no two-tree witness");
      if (!witness) continue;
      for (VertexSet side : {witness->x, witness->y}) {
        const bool tree = naive_connected_subset(pg.graph, side.bits()) &&
                          naive_inside_count(pg.graph, side.bits()) == side.count() - 1;
        expect(r, tree,
               "witness side of P(" + std::to_string(n) + "," + std::to_string(k) +
                   ") does not induce a tree");
      }
    }

    // equality c* = m-n+2 iff a two-tree partition exists, on every
    // connected labeled graph with up to 6 vertices
    long graphs = 0;
    for (int n = 1; n <= 6; ++n) {
      enumerate_graphs(n, GraphFilter{.connected = true}, [&](const Graph& g) {
        const int cstar = n >= 2 ? largest_bond(g).size() : 0;
        const bool reaches_bound = cstar == g.edge_count() - g.vertex_count() + 2;
        const bool two_tree = naive_two_tree_partition(g);
        if (reaches_bound != two_tree) {
          expect(r, false, "equivalence fails on graph6 " + write_graph6(g));
          return false;
        }
        ++graphs;
        return true;
      });
    }
    if (r.passed)
      r.detail = "two-tree witnesses on P(n,k) up to 2n = 24; equivalence exact on " +
                 std::to_string(graphs) + " connected labeled graphs, n <= 6";
  });
}

CriterionResult verify_bond_upper_bound() {
  return timed(5, "bond-size-upper-bound", 0, [](CriterionResult& r) {
    long graphs = 0;
    // exhaustive small graphs against the naive oracle
    for (int n = 2; n <= 6; ++n) {
      enumerate_graphs(n, GraphFilter{.connected = true}, [&](const Graph& g) {
        if (naive_largest_bond_size(g) > g.edge_count() - g.vertex_count() + 2) {
          expect(r, false, "bound violated on graph6 " + write_graph6(g));
          return false;
        }
        ++graphs;
        return true;
      });
    }
    // generated families and random graphs against the search engine
    std::vector<Graph> family;
    for (const auto& [n, k] : petersen_parameters(3, 9)) family.push_back(petersen(n, k).graph);
    family.push_back(counterexample_two_connected(5).graph);
    std::mt19937 rng(20230517);
    for (int i = 0; i < 200; ++i) family.push_back(random_connected_graph(rng, 2, 10));
    for (const Graph& g : family) {
      if (largest_bond(g).size() > bond_upper_bound(g)) {
        expect(r, false, "bound violated on graph6 " + write_graph6(g));
        break;
      }
      ++graphs;
    }
    if (r.passed)
      r.detail = "c* <= m - n + 2 on all " + std::to_string(graphs) + " graphs checked";
  });
}

CriterionResult verify_dirac_bound() {
  return timed(6, "dirac-circumference-bound", 0, [](CriterionResult& r) {
    long graphs = 0;
    for (int n = 3; n <= 7 && r.passed; ++n) {
      enumerate_graphs(n, GraphFilter{.two_connected = true}, [&](const Graph& g) {
        if (circumference(g) < dirac_bound(g)) {
          expect(r, false, "Dirac bound violated on graph6 " + write_graph6(g));
          return false;
        }
        ++graphs;
        return true;
      });
    }
    std::vector<Graph> family;
    for (const auto& [n, k] : petersen_parameters(3, 10)) family.push_back(petersen(n, k).graph);
    for (int s = 5; s <= 8; ++s) family.push_back(counterexample_two_connected(s).graph);
    for (const Graph& g : family) {
      if (circumference(g) < dirac_bound(g)) {
        expect(r, false, "Dirac bound violated on graph6 " + write_graph6(g));
        break;
      }
      ++graphs;
    }
    if (r.passed)
      r.detail = "circumference >= min(n, 2*min_degree) on all " + std::to_string(graphs) +
                 " two-connected graphs checked";
  });
}

CriterionResult verify_conjecture_sweep() {
  return timed(7, "three-connected-conjecture-sweep", 900'000, [](CriterionResult& r) {
    long checked = 0;
    long three_connected = 0;
    for (int n = 4; n <= 7; ++n) {
      GraphEnumerator stream(n);
      const SweepSummary summary =
          batch_verify([&] { return stream.next(); }, BatchOptions{.threads = 1});
      checked += summary.graphs_checked;
      three_connected += summary.three_connected_count;
      expect(r, summary.conjecture_violations == 0,
             "violations at n = " + std::to_string(n) + ": " +
                 std::to_string(summary.conjecture_violations));
      expect(r, summary.parity_failures == 0,
             "odd shared count at n = " + std::to_string(n));
      expect(r, summary.small_side_bonds == 0,
             "largest bond with a side below 2 vertices at n = " + std::to_string(n));
      expect(r, summary.failures == 0, "per-graph failures at n = " + std::to_string(n));
    }
    if (r.passed)
      r.detail = "no violation among " + std::to_string(three_connected) +
                 " labeled 3-connected graphs (of " + std::to_string(checked) +
                 " graphs enumerated, n <= 7); all shared counts even, all reports consistent";
  });
}

CriterionResult verify_counterexample_family() {
  return timed(8, "two-connected-counterexample", 120'000, [](CriterionResult& r) {
    const CounterexampleGraph cx = counterexample_two_connected(6);
    expect(r, cx.graph.vertex_count() == 25, "vertex count");
    expect(r, cx.graph.edge_count() == 34, "edge count");
    expect(r, vertex_connectivity_at_least(cx.graph, 2), "should be 2-connected");
    expect(r, !vertex_connectivity_at_least(cx.graph, 3), "should not be 3-connected");
    const ConjectureReport report = check_conjecture(cx.graph);
    expect(r, report.circumference == 21,
           "circumference is " + std::to_string(report.circumference) + ", expected 21");
    expect(r, report.num_longest_cycles == 1,
           std::to_string(report.num_longest_cycles) + " longest cycles, expected 1");
    expect(r, report.largest_bond_size == 10,
           "largest bond is " + std::to_string(report.largest_bond_size) + ", expected 10");
    expect(r, !report.all_pairs_meet, "longest cycle unexpectedly meets every largest bond");
    expect(r, report.disjoint_witness.has_value(), "missing disjoint witness pair");
    if (report.disjoint_witness) {
      expect(r,
             cycle_meets_bond(report.disjoint_witness->first, report.disjoint_witness->second) ==
                 0,
             "witness pair is not disjoint");
    }
    if (r.passed)
      r.detail =
          "s=6: 25 vertices, 34 edges, 2-connected not 3-connected, circumference 21 "
          "(unique longest cycle), largest bond 10, disjoint pair found";
  });
}

CriterionResult verify_oracle_equivalence() {
  return timed(9, "oracle-equivalence", 0, [](CriterionResult& r) {
    std::mt19937 rng(46290811);
    int bond_checked = 0;
    for (int i = 0; i < 500 && r.passed; ++i) {
      const Graph g = random_connected_graph(rng, 2, 9);
      if (largest_bond(g).size() != naive_largest_bond_size(g)) {
        expect(r, false, "largest bond mismatch on graph6 " + write_graph6(g));
        break;
      }
      ++bond_checked;
    }
    int cycle_checked = 0;
    for (int i = 0; i < 500 && r.passed; ++i) {
      const Graph g = random_connected_graph(rng, 2, 9);
      if (circumference(g) != naive_circumference(g)) {
        expect(r, false, "circumference mismatch on graph6 " + write_graph6(g));
        break;
      }
      ++cycle_checked;
    }
    if (r.passed)
      r.detail = "search equals naive enumeration on " + std::to_string(bond_checked) +
                 " + " + std::to_string(cycle_checked) + " random connected graphs, n <= 9";
  });
}

CriterionResult verify_graph6_fidelity() {
  return timed(10, "graph6-fidelity", 0, [](CriterionResult& r) {
    const Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    const Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    expect(r, write_graph6(k4) == "C~", "K4 does not encode to C~");
    expect(r, write_graph6(c5) == "Dhc", "C5 does not encode to Dhc");
    expect(r, parse_graph6("C~") == k4, "C~ does not decode to K4");
    expect(r, parse_graph6("Dhc") == c5, "Dhc does not decode to C5");
    expect(r, write_graph6(Graph(1, {})) == "@", "single vertex does not encode to @");

    long round_trips = 0;
    auto check_round_trip = [&](const Graph& g) {
      if (!(parse_graph6(write_graph6(g)) == g)) {
        expect(r, false, "round trip failed on " + write_graph6(g));
        return;
      }
      ++round_trips;
    };
    for (const auto& [n, k] : petersen_parameters(3, 20)) check_round_trip(petersen(n, k).graph);
    for (int s = 5; s <= 12; ++s) check_round_trip(counterexample_two_connected(s).graph);
    std::mt19937 rng(62);
    std::uniform_int_distribution<int> pick_n(1, 62);
    std::uniform_real_distribution<double> pick_p(0.05, 0.95);
    for (int i = 0; i < 1000; ++i) check_round_trip(random_graph(rng, pick_n(rng), pick_p(rng)));
    if (r.passed)
      r.detail = "C~/Dhc bit-exact; " + std::to_string(round_trips) +
                 " round trips over generated and random graphs";
  });
}

std::vector<CriterionResult> run_verification(std::ostream* progress) {
  using Check = CriterionResult (*)();
  constexpr Check checks[] = {
      verify_petersen_bond_values,    verify_co_spectrum_exhaustive,
      verify_co_spectrum_constructive, verify_dual_hamiltonian,
      verify_bond_upper_bound,        verify_dirac_bound,
      verify_conjecture_sweep,        verify_counterexample_family,
      verify_oracle_equivalence,      verify_graph6_fidelity,
  };
  std::vector<CriterionResult> results;
  for (Check check : checks) {
    CriterionResult result = check();
    if (progress != nullptr) {
      std::ostringstream line;
      line << (result.passed ? "[PASS] " : "[FAIL] ") << "criterion " << result.id << " "
           << result.name << ": " << result.detail << " ("
           << static_cast<long>(result.wall_time_ms) << " ms)";
      *progress << line.str() << std::endl;
    }
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace bondcycle
