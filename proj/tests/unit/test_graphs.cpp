#include "gapcube/graphs.hpp"

#include "support/brute.hpp"

#include <doctest.h>

#include <algorithm>
#include <sstream>

using namespace gapcube;

TEST_SUITE("graphs") {

TEST_CASE("path power edges") {
  const GapGraph g(GraphKind::path, 4, 2);
  const EdgeList expected{{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}};
  CHECK(g.edges() == expected);
  CHECK(g.edges().size() == 5);
}

TEST_CASE("zeroth power is edgeless") {
  for (int n = 0; n <= 12; ++n) {
    CHECK(GapGraph(GraphKind::path, n, 0).edges().empty());
    CHECK(GapGraph(GraphKind::cycle, n, 0).edges().empty());
  }
}

TEST_CASE("cycle power edges") {
  const EdgeList five_cycle{{1, 2}, {1, 5}, {2, 3}, {3, 4}, {4, 5}};
  CHECK(build(GraphKind::cycle, 5, 1).edges() == five_cycle);
  CHECK(build(GraphKind::cycle, 5, 2).edges().size() == 10);
}

TEST_CASE("is_edge") {
  CHECK(GapGraph(GraphKind::cycle, 7, 2).is_edge(1, 6));
  CHECK_FALSE(GapGraph(GraphKind::path, 7, 2).is_edge(1, 6));
  CHECK_FALSE(GapGraph(GraphKind::path, 5, 1).is_edge(3, 3));
  CHECK_THROWS_AS(static_cast<void>(GapGraph(GraphKind::path, 5, 1).is_edge(0, 3)), std::out_of_range);
  CHECK_THROWS_AS(static_cast<void>(GapGraph(GraphKind::cycle, 5, 1).is_edge(2, 6)), std::out_of_range);
}

TEST_CASE("adjacency matches circular distance and is symmetric") {
  for (int n = 0; n <= 40; ++n) {
    for (int h = 0; h <= 10; ++h) {
      const GapGraph p(GraphKind::path, n, h);
      const GapGraph c(GraphKind::cycle, n, h);
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          const int d = std::abs(i - j);
          CHECK(c.is_edge(i, j) == (i != j && std::min(d, n - d) <= h));
          CHECK(p.is_edge(i, j) == brute::adjacent(false, n, h, i, j));
          CHECK(p.is_edge(i, j) == p.is_edge(j, i));
          CHECK(c.is_edge(i, j) == c.is_edge(j, i));
          if (p.is_edge(i, j)) CHECK(c.is_edge(i, j));
        }
      }
    }
  }
}

TEST_CASE("path edge count closed form") {
  for (int n = 0; n <= 50; ++n) {
    for (int h = 0; h <= 10; ++h) {
      const auto edges = GapGraph(GraphKind::path, n, h).edges().size();
      if (n >= 2 * h + 1) {
        CHECK(edges == static_cast<std::size_t>(n * h - h * (h + 1) / 2));
      }
      // Each vertex i links forward to min(h, n - i) vertices.
      std::size_t forward = 0;
      for (int i = 1; i <= n; ++i) forward += static_cast<std::size_t>(std::min(h, n - i));
      CHECK(edges == forward);
    }
  }
}

TEST_CASE("small cycle powers are complete") {
  for (int h = 0; h <= 10; ++h) {
    for (int n = 0; n <= 2 * h + 1; ++n) {
      CHECK(GapGraph(GraphKind::cycle, n, h).edges().size() == static_cast<std::size_t>(n * (n - 1) / 2));
    }
  }
}

TEST_CASE("names, parsing and validation") {
  CHECK(GapGraph(GraphKind::path, 5, 2).name() == "P_5^2");
  CHECK(GapGraph(GraphKind::cycle, 7, 1).name() == "C_7^1");
  CHECK(parse_graph_kind("path") == GraphKind::path);
  CHECK(parse_graph_kind("cycle") == GraphKind::cycle);
  CHECK(to_string(GraphKind::cycle) == "cycle");
  CHECK_THROWS_AS(parse_graph_kind("star"), std::invalid_argument);
  CHECK_THROWS_AS(GapGraph(GraphKind::path, -1, 1), std::invalid_argument);
  CHECK_THROWS_AS(GapGraph(GraphKind::cycle, 3, -2), std::invalid_argument);
}

TEST_CASE("edge list and DOT export") {
  const GapGraph g(GraphKind::path, 4, 2);
  std::ostringstream el;
  write_edge_list(el, g);
  CHECK(el.str() == "1 2\n1 3\n2 3\n2 4\n3 4\n");

  std::ostringstream dot;
  write_dot(dot, GapGraph(GraphKind::cycle, 3, 1));
  CHECK(dot.str() ==
        "graph \"C_3^1\" {\n"
        "  1 [label=\"v1\"];\n"
        "  2 [label=\"v2\"];\n"
        "  3 [label=\"v3\"];\n"
        "  1 -- 2;\n"
        "  1 -- 3;\n"
        "  2 -- 3;\n"
        "}\n");
}

}  // TEST_SUITE
