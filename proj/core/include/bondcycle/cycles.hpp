#pragma once

#include <map>
#include <optional>
#include <vector>

#include "bondcycle/graph.hpp"

namespace bondcycle {

/// Simple cycle as an ordered vertex sequence; the closing edge from the
/// last vertex back to the first is implicit. Lengths are counted in
/// edges, which equals the number of vertices on the cycle.
struct Cycle {
  std::vector<int> vertices;
  EdgeSet edges;

  int length() const { return static_cast<int>(vertices.size()); }
};

/// Builds and validates a Cycle against a graph: at least 3 distinct
/// vertices, every consecutive pair and the closing pair an edge.
Cycle make_cycle(const Graph& g, std::vector<int> vertices);

/// One longest cycle, or nullopt when the graph is acyclic. Exact
/// depth-first search over anchored paths: each cycle is explored from
/// its minimum vertex only, pruned by a reachable-vertex bound, with an
/// early exit once a Hamiltonian cycle appears.
std::optional<Cycle> longest_cycle(const Graph& g);

/// Length of a longest cycle; 0 when acyclic.
int circumference(const Graph& g);

/// Every cycle of maximum length, deduplicated as unordered edge sets.
/// Runs a second exact-length pass at the known optimum. Throws on
/// acyclic input.
std::vector<Cycle> all_longest_cycles(const Graph& g);

/// All realized cycle lengths with one witness each.
struct CycleSpectrum {
  std::map<int, Cycle> witnesses;

  std::vector<int> lengths() const;
  bool contains(int length) const { return witnesses.count(length) > 0; }
};

/// Exact cycle spectrum via one existence search per candidate length.
/// Guarded at n <= 24; odd lengths are skipped outright on bipartite
/// graphs.
CycleSpectrum cycle_spectrum(const Graph& g);

std::optional<Cycle> hamiltonian_cycle(const Graph& g);
bool is_hamiltonian(const Graph& g);

/// min(n, 2 * min_degree): a lower bound on the circumference of a
/// 2-connected graph. Throws when the graph is not 2-connected.
int dirac_bound(const Graph& g);

}  // namespace bondcycle
