#include <doctest.h>

#include "bondcycle/generators.hpp"

using namespace bondcycle;

TEST_CASE("petersen graphs match the advertised counts") {
  auto p52 = petersen(5, 2);
  CHECK(p52.graph.vertex_count() == 10);
  CHECK(p52.graph.edge_count() == 15);

  auto p83 = petersen(8, 3);
  CHECK(p83.graph.vertex_count() == 16);
  CHECK(p83.graph.edge_count() == 24);

  auto p204 = petersen(20, 4);
  CHECK(p204.graph.vertex_count() == 40);
  CHECK(p204.graph.edge_count() == 60);
}

TEST_CASE("petersen graphs are cubic and connected for every valid parameter") {
  for (int n = 3; n <= 20; ++n) {
    for (int k = 1; 2 * k < n; ++k) {
      auto pg = petersen(n, k);
      CHECK(pg.graph.vertex_count() == 2 * n);
      CHECK(pg.graph.edge_count() == 3 * n);
      for (int v = 0; v < pg.graph.vertex_count(); ++v) CHECK(pg.graph.degree(v) == 3);
      CHECK(is_connected(pg.graph));
    }
  }
}

TEST_CASE("petersen graphs are 3-connected") {
  for (auto [n, k] : {std::pair{5, 2}, {8, 3}, {8, 2}, {7, 1}}) {
    auto pg = petersen(n, k);
    CHECK(vertex_connectivity_at_least(pg.graph, 3));
    // one outer vertex cuts off its three incident edges
    CHECK(cut_edges(pg.graph, VertexSet::single(pg.labels.outer[0])).size() == 3);
  }
}

TEST_CASE("petersen labels partition the vertices") {
  auto pg = petersen(7, 3);
  VertexSet outer;
  VertexSet inner;
  for (int v : pg.labels.outer) outer = outer.with(v);
  for (int v : pg.labels.inner) inner = inner.with(v);
  CHECK((outer & inner).empty());
  CHECK((outer | inner) == pg.graph.vertices());
}

TEST_CASE("petersen rejects out-of-range parameters") {
  CHECK_THROWS_AS(petersen(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(petersen(5, 0), std::invalid_argument);
  CHECK_THROWS_AS(petersen(4, 2), std::invalid_argument);  // k = n/2 excluded
  CHECK_THROWS_AS(petersen(6, 3), std::invalid_argument);
  CHECK_THROWS_AS(petersen(32, 1), std::invalid_argument);  // 2n over the cap
  CHECK_NOTHROW(petersen(31, 15));
}

TEST_CASE("inner rim may split into several cycles") {
  // gcd(8,2) = 2: two inner 4-cycles, spokes keep the graph connected
  auto pg = petersen(8, 2);
  CHECK(is_connected(pg.graph));
  VertexSet inner_rim;
  for (int v : pg.labels.inner) inner_rim = inner_rim.with(v);
  CHECK_FALSE(is_connected_induced(pg.graph, inner_rim));
}

TEST_CASE("counterexample family construction") {
  auto cx = counterexample_two_connected(6);
  CHECK(cx.graph.vertex_count() == 25);    // 3s + 7
  CHECK(cx.graph.edge_count() == 34);      // 3s + 16
  CHECK(vertex_connectivity_at_least(cx.graph, 2));
  CHECK_FALSE(vertex_connectivity_at_least(cx.graph, 3));
  CHECK(min_degree(cx.graph) == 2);

  for (const auto& side : cx.labels.side_paths) CHECK(side.size() == 6);
  VertexSet all;
  for (int h : cx.labels.hubs) all = all.with(h);
  for (const auto& side : cx.labels.side_paths)
    for (int v : side) all = all.with(v);
  for (int y : cx.labels.y_path) all = all.with(y);
  CHECK(all == cx.graph.vertices());
}

TEST_CASE("counterexample path-vs-rest cut is 10 for every tested size") {
  for (int s = 5; s <= 9; ++s) {
    auto cx = counterexample_two_connected(s);
    VertexSet path;
    for (int y : cx.labels.y_path) path = path.with(y);
    CHECK(cut_size(cx.graph, path) == 10);
    CHECK(min_degree(cx.graph) == 2);
  }
}

TEST_CASE("counterexample rejects small subdivision counts") {
  CHECK_THROWS_AS(counterexample_two_connected(4), std::invalid_argument);
  CHECK_THROWS_AS(counterexample_two_connected(19), std::invalid_argument);  // 3s+7 > 62
}

TEST_CASE("enumeration yields every labeled graph") {
  long count = 0;
  enumerate_graphs(4, {}, [&](const Graph&) {
    ++count;
    return true;
  });
  CHECK(count == 64);  // 2^6 edge masks

  for (int n = 1; n <= 5; ++n) {
    long total = 0;
    enumerate_graphs(n, {}, [&](const Graph&) {
      ++total;
      return true;
    });
    CHECK(total == (1L << (n * (n - 1) / 2)));
  }
}

TEST_CASE("enumeration filters") {
  long connected5 = 0;
  enumerate_graphs(5, GraphFilter{.connected = true}, [&](const Graph&) {
    ++connected5;
    return true;
  });
  CHECK(connected5 == 728);

  long three4 = 0;
  enumerate_graphs(4, GraphFilter{.three_connected = true}, [&](const Graph& g) {
    ++three4;
    CHECK(g.edge_count() == 6);  // only K4
    return true;
  });
  CHECK(three4 == 1);

  CHECK_THROWS_AS(GraphEnumerator(8), std::invalid_argument);
  CHECK_THROWS_AS(GraphEnumerator(0), std::invalid_argument);
}

TEST_CASE("enumeration stops when the visitor declines") {
  long seen = 0;
  enumerate_graphs(5, {}, [&](const Graph&) { return ++seen < 10; });
  CHECK(seen == 10);
}
