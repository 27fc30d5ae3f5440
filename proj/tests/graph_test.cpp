#include <doctest.h>

#include <random>

#include "bondcycle/graph.hpp"

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

Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution flip(p);
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (flip(rng)) edges.push_back({u, v});
  return Graph(n, edges);
}

// plain queue-based reachability, kept separate from the bitset flood
bool bfs_connected_subset(const Graph& g, const std::vector<int>& members) {
  if (members.empty()) return false;
  std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v : members) in[static_cast<std::size_t>(v)] = 1;
  std::vector<int> queue{members.front()};
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  seen[static_cast<std::size_t>(members.front())] = 1;
  std::size_t visited = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (int w = 0; w < g.vertex_count(); ++w) {
      if (g.has_edge(queue[i], w) && in[static_cast<std::size_t>(w)] &&
          !seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++visited;
        queue.push_back(w);
      }
    }
  }
  return visited == members.size();
}

}  // namespace

TEST_CASE("graph construction canonicalizes") {
  Graph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(triangle.edge_count() == 3);

  Graph k4 = complete_graph(4);
  CHECK(k4.edge_count() == 6);

  // duplicates collapse, (v,u) normalizes to (u,v)
  Graph single(2, {{0, 1}, {1, 0}});
  CHECK(single.edge_count() == 1);
  CHECK(single.edges() == EdgeSet{{0, 1}});
}

TEST_CASE("graph construction rejects bad input") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{-1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(63, {}), std::invalid_argument);
  CHECK_NOTHROW(Graph(62, {}));
}

TEST_CASE("induced connectivity") {
  Graph c5 = cycle_graph(5);
  CHECK(is_connected_induced(c5, VertexSet::of({0, 1, 2})));
  CHECK_FALSE(is_connected_induced(c5, VertexSet::of({0, 2})));
  for (int v = 0; v < 5; ++v) CHECK(is_connected_induced(c5, VertexSet::single(v)));
  CHECK_THROWS_AS(is_connected_induced(c5, VertexSet()), std::invalid_argument);
  CHECK_THROWS_AS(is_connected_induced(c5, VertexSet::of({0, 5})), std::invalid_argument);
}

TEST_CASE("vertex connectivity") {
  Graph k4 = complete_graph(4);
  CHECK(vertex_connectivity_at_least(k4, 3));
  Graph c5 = cycle_graph(5);
  CHECK(vertex_connectivity_at_least(c5, 2));
  CHECK_FALSE(vertex_connectivity_at_least(c5, 3));
  Graph path(3, {{0, 1}, {1, 2}});
  CHECK(vertex_connectivity_at_least(path, 1));
  CHECK_FALSE(vertex_connectivity_at_least(path, 2));
  CHECK_FALSE(vertex_connectivity_at_least(Graph(1, {}), 1));
  CHECK_THROWS_AS(vertex_connectivity_at_least(k4, 4), std::invalid_argument);

  // k-connectivity is monotone in k
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    Graph g = random_graph(rng, 2 + i % 8, 0.5);
    if (vertex_connectivity_at_least(g, 3)) CHECK(vertex_connectivity_at_least(g, 2));
    if (vertex_connectivity_at_least(g, 2)) CHECK(vertex_connectivity_at_least(g, 1));
  }
}

TEST_CASE("min degree") {
  CHECK(min_degree(complete_graph(4)) == 3);
  CHECK(min_degree(Graph(2, {{0, 1}})) == 1);
  CHECK(min_degree(Graph(3, {{0, 1}})) == 0);
}

TEST_CASE("cut edges") {
  Graph c5 = cycle_graph(5);
  CHECK(cut_edges(c5, VertexSet::single(0)).size() == 2);
  Graph k4 = complete_graph(4);
  CHECK(cut_edges(k4, VertexSet::of({0, 1})).size() == 4);
  CHECK_THROWS_AS(cut_edges(c5, VertexSet()), std::invalid_argument);
  CHECK_THROWS_AS(cut_edges(c5, c5.vertices()), std::invalid_argument);
}

TEST_CASE("degree sum and cut symmetry on random graphs") {
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    Graph g = random_graph(rng, 2 + i % 9, 0.4);
    int degree_sum = 0;
    for (int v = 0; v < g.vertex_count(); ++v) degree_sum += g.degree(v);
    CHECK(degree_sum == 2 * g.edge_count());

    std::uniform_int_distribution<std::uint64_t> pick(1, g.vertices().bits() - 1);
    VertexSet x(pick(rng));
    CHECK(cut_size(g, x) == cut_size(g, complement(g, x)));
    CHECK(static_cast<int>(cut_edges(g, x).size()) == cut_size(g, x));
  }
}

TEST_CASE("induced connectivity agrees with a queue-based oracle") {
  std::mt19937 rng(13);
  for (int i = 0; i < 1000; ++i) {
    const int n = 1 + i % 10;
    Graph g = random_graph(rng, n, 0.35);
    std::uniform_int_distribution<std::uint64_t> pick(1, g.vertices().bits());
    VertexSet s(pick(rng));
    CHECK(is_connected_induced(g, s) == bfs_connected_subset(g, s.to_vector()));
  }
}
