#include "bondcycle/generators.hpp"

#include <string>

namespace bondcycle {

PetersenGraph petersen(int n, int k) {
  if (n < 3) throw std::invalid_argument("petersen: n must be at least 3");
  if (k < 1 || 2 * k >= n)
    throw std::invalid_argument("petersen: k must satisfy 1 <= k < n/2 (got n=" +
                                std::to_string(n) + ", k=" + std::to_string(k) + ")");
  if (2 * n > Graph::kMaxVertices)
    throw std::invalid_argument("petersen: 2n exceeds the vertex cap");

  // Outer rim vertex i -> id i, inner rim vertex i -> id n+i (0-based).
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(3 * n));
  for (int i = 0; i < n; ++i) {
    edges.push_back(make_edge(i, (i + 1) % n));          // outer cycle
    edges.push_back(make_edge(i, n + i));                // spoke
    edges.push_back(make_edge(n + i, n + (i + k) % n));  // inner rim
  }

  PetersenLabels labels;
  labels.outer.resize(static_cast<std::size_t>(n));
  labels.inner.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    labels.outer[static_cast<std::size_t>(i)] = i;
    labels.inner[static_cast<std::size_t>(i)] = n + i;
  }
  return PetersenGraph{n, k, Graph(2 * n, edges), std::move(labels)};
}

CounterexampleGraph counterexample_two_connected(int s) {
  if (s < 5)
    throw std::invalid_argument(
        "counterexample: need at least 5 subdivisions per side to pin the longest cycle");
  const int n = 3 * s + 7;
  if (n > Graph::kMaxVertices)
    throw std::invalid_argument("counterexample: 3s+7 exceeds the vertex cap");

  CounterexampleLabels labels;
  labels.subdivisions = s;
  labels.hubs = {0, 1, 2};
  int next_id = 3;
  std::vector<Edge> edges;

  // Each triangle side hub j .. hub (j+1)%3 subdivided by s degree-2 vertices.
  for (int side = 0; side < 3; ++side) {
    int from = labels.hubs[static_cast<std::size_t>(side)];
    int to = labels.hubs[static_cast<std::size_t>((side + 1) % 3)];
    std::vector<int>& path = labels.side_paths[static_cast<std::size_t>(side)];
    int prev = from;
    for (int i = 0; i < s; ++i) {
      path.push_back(next_id);
      edges.push_back(make_edge(prev, next_id));
      prev = next_id;
      ++next_id;
    }
    edges.push_back(make_edge(prev, to));
  }

  // The attached path y0-y1-y2-y3.
  for (int i = 0; i < 4; ++i) labels.y_path[static_cast<std::size_t>(i)] = next_id + i;
  for (int i = 0; i < 3; ++i)
    edges.push_back(make_edge(labels.y_path[static_cast<std::size_t>(i)],
                              labels.y_path[static_cast<std::size_t>(i + 1)]));

  // Ten cross edges, 3+2+2+3 per path vertex, symmetric under swapping
  // y0<->y3 and under swapping hub0<->hub2. The middle path vertices must
  // skip the same hub: skipping different hubs lets one subdivided side
  // plus its end hubs plus a middle path vertex induce a tree against a
  // tree remainder, and that two-tree partition is a bond of size
  // m - n + 2 = 11 beating the intended maximum of 10.
  const auto& [h0, h1, h2] = labels.hubs;
  const auto& [y0, y1, y2, y3] = labels.y_path;
  for (int h : {h0, h1, h2}) edges.push_back(make_edge(y0, h));
  edges.push_back(make_edge(y1, h0));
  edges.push_back(make_edge(y1, h2));
  edges.push_back(make_edge(y2, h0));
  edges.push_back(make_edge(y2, h2));
  for (int h : {h0, h1, h2}) edges.push_back(make_edge(y3, h));

  Graph g(n, edges);

  // Validate the claimed properties instead of trusting the construction.
  if (g.edge_count() != 3 * s + 16)
    throw std::logic_error("counterexample: unexpected edge count");
  if (!vertex_connectivity_at_least(g, 2))
    throw std::logic_error("counterexample: construction is not 2-connected");
  if (vertex_connectivity_at_least(g, 3))
    throw std::logic_error("counterexample: construction is unexpectedly 3-connected");
  VertexSet path_side = VertexSet::of({y0, y1, y2, y3});
  if (cut_size(g, path_side) != 10)
    throw std::logic_error("counterexample: path-vs-rest cut is not 10");

  return CounterexampleGraph{std::move(g), std::move(labels)};
}

bool GraphFilter::admits(const Graph& g) const {
  if (min_degree_three && min_degree(g) < 3) return false;
  if (three_connected && !vertex_connectivity_at_least(g, 3)) return false;
  if (two_connected && !three_connected && !vertex_connectivity_at_least(g, 2)) return false;
  if (connected && !two_connected && !three_connected && !is_connected(g)) return false;
  return true;
}

GraphEnumerator::GraphEnumerator(int n, GraphFilter filter) : n_(n), filter_(filter) {
  if (n < 1 || n > 7)
    throw std::invalid_argument("enumeration supported for 1 <= n <= 7 only");
  const int pairs = n * (n - 1) / 2;
  end_ = std::uint64_t{1} << pairs;
  // Same pair order as the graph6 encoding: (0,1),(0,2),(1,2),(0,3),...
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) pair_order_.push_back({u, v});
}

std::optional<Graph> GraphEnumerator::next() {
  std::vector<Edge> edges;
  while (mask_ < end_) {
    std::uint64_t m = mask_++;
    edges.clear();
    for (std::uint64_t b = m; b != 0; b &= b - 1)
      edges.push_back(pair_order_[static_cast<std::size_t>(std::countr_zero(b))]);
    Graph g(n_, edges);
    if (filter_.admits(g)) return g;
  }
  return std::nullopt;
}

void enumerate_graphs(int n, GraphFilter filter,
                      const std::function<bool(const Graph&)>& visit) {
  GraphEnumerator stream(n, filter);
  while (auto g = stream.next())
    if (!visit(*g)) return;
}

}  // namespace bondcycle
