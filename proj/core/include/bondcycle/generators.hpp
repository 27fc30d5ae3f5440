#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "bondcycle/graph.hpp"

namespace bondcycle {

/// Vertex ids of the two rims of a generalized Petersen graph.
/// outer[i] is the id of the i-th outer-rim vertex, inner[i] of the
/// i-th inner-rim vertex (0-based; the traditional labels x_{i+1}, y_{i+1}).
struct PetersenLabels {
  std::vector<int> outer;
  std::vector<int> inner;
};

struct PetersenGraph {
  int n;
  int k;
  Graph graph;
  PetersenLabels labels;
};

/// Generalized Petersen graph P(n,k): outer n-cycle, spokes, inner rim
/// stepping by k (indices mod n). Requires n >= 3 and 1 <= k < n/2,
/// strictly; 2n must fit the 62-vertex cap.
PetersenGraph petersen(int n, int k);

/// Label map for the two-connected family below.
struct CounterexampleLabels {
  std::array<int, 3> hubs;                      // triangle corners
  std::array<std::vector<int>, 3> side_paths;   // subdivision vertices per side
  std::array<int, 4> y_path;                    // the attached 4-vertex path
  int subdivisions = 0;
};

struct CounterexampleGraph {
  Graph graph;
  CounterexampleLabels labels;
};

/// Two-connected, not three-connected graph whose longest cycle avoids a
/// largest bond: a triangle with each side subdivided s times, plus a
/// 4-vertex path tied to the corners by ten cross edges. Requires s >= 5,
/// the smallest subdivision count that makes the subdivided triangle the
/// strict unique longest cycle. Construction re-checks its own claims
/// (2-connected, not 3-connected, path-vs-rest cut of size 10).
CounterexampleGraph counterexample_two_connected(int s);

struct GraphFilter {
  bool connected = false;
  bool two_connected = false;
  bool three_connected = false;
  bool min_degree_three = false;

  bool admits(const Graph& g) const;
};

/// Streams every labeled simple graph on n vertices (all 2^(n(n-1)/2)
/// edge masks, no isomorphism reduction) passing the filter.
/// Supported range 1 <= n <= 7.
class GraphEnumerator {
 public:
  GraphEnumerator(int n, GraphFilter filter = {});

  /// Next matching graph, or nullopt when exhausted.
  std::optional<Graph> next();

 private:
  int n_;
  GraphFilter filter_;
  std::uint64_t mask_ = 0;
  std::uint64_t end_;
  std::vector<Edge> pair_order_;
};

/// Callback form; stop early by returning false from the visitor.
void enumerate_graphs(int n, GraphFilter filter,
                      const std::function<bool(const Graph&)>& visit);

}  // namespace bondcycle
