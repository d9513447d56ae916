#include "gapcube/counting.hpp"
#include "gapcube/cube.hpp"

#include "support/brute.hpp"

#include <doctest.h>
#include <json.hpp>

#include <bit>
#include <set>
#include <sstream>

using namespace gapcube;

namespace {

std::map<int, Nat> histogram(std::initializer_list<std::pair<const int, int>> entries) {
  std::map<int, Nat> out;
  for (const auto& [k, v] : entries) out.emplace(k, Nat{v});
  return out;
}

CubeGraph cube(GraphKind kind, int n, int h) { return build_cube(GapGraph(kind, n, h)); }

}  // namespace

TEST_SUITE("cube") {

TEST_CASE("vertex and cover counts of small cubes") {
  const auto g = cube(GraphKind::path, 4, 2);
  CHECK(g.vertices().size() == 6);
  CHECK(g.covers().size() == 6);
  const auto l = cube(GraphKind::cycle, 4, 1);
  CHECK(l.vertices().size() == 7);
  CHECK(l.covers().size() == 8);
  const auto g41 = cube(GraphKind::path, 4, 1);
  CHECK(g41.vertices().size() == 8);
  CHECK(g41.covers().size() == 10);
  const auto empty = cube(GraphKind::path, 0, 2);
  CHECK(empty.vertices().size() == 1);
  CHECK(empty.covers().empty());
}

TEST_CASE("zeroth power gives the Boolean lattice") {
  for (int n = 0; n <= 12; ++n) {
    const auto b = cube(GraphKind::path, n, 0);
    CHECK(b.vertices().size() == (std::size_t{1} << n));
    CHECK(b.covers().size() == (n == 0 ? 0 : static_cast<std::size_t>(n) << (n - 1)));
  }
}

TEST_CASE("rank_profile") {
  CHECK(rank_profile(cube(GraphKind::path, 5, 1)) == histogram({{0, 1}, {1, 5}, {2, 6}, {3, 1}}));
  CHECK(rank_profile(cube(GraphKind::cycle, 6, 2)) == histogram({{0, 1}, {1, 6}, {2, 3}}));
  for (int h = 0; h <= 4; ++h) CHECK(rank_profile(cube(GraphKind::path, 0, h)) == histogram({{0, 1}}));
}

TEST_CASE("hamming_pairs") {
  CHECK(hamming_pairs(cube(GraphKind::path, 6, 1)) == 38);
  CHECK(hamming_pairs(cube(GraphKind::cycle, 5, 1)) == 15);
  CHECK(hamming_pairs(cube(GraphKind::path, 1, 0)) == 1);
}

TEST_CASE("vertex_filter_count") {
  const auto g = cube(GraphKind::path, 5, 1);
  CHECK(vertex_filter_count(g, 2, 1) == Nat{3});
  CHECK(vertex_filter_count(g, 1, 4) == Nat{1});
  CHECK(vertex_filter_count(g, 9, 1) == Nat{0});
  CHECK(vertex_filter_count(cube(GraphKind::path, 9, 2), 2, 5) == t_count(9, 2, 2, 5));
  CHECK_THROWS_AS(vertex_filter_count(g, 1, 6), std::out_of_range);
  CHECK_THROWS_AS(vertex_filter_count(g, -1, 1), std::invalid_argument);
}

TEST_CASE("structure against brute force and closed forms") {
  for (int n = 0; n <= 14; ++n) {
    for (int h = 0; h <= 5; ++h) {
      for (const bool is_cycle : {false, true}) {
        const GraphKind kind = is_cycle ? GraphKind::cycle : GraphKind::path;
        const auto c = cube(kind, n, h);
        const auto ref = brute::counts_by_size(is_cycle, n, h);
        CHECK(c.vertices().size() == brute::sum(ref));
        CHECK(c.covers().size() == brute::weighted_sum(ref));
        CHECK(hamming_pairs(c) == c.covers().size());
        CHECK(Nat{c.vertices().size()} == (is_cycle ? cycle_count(n, h) : path_count(n, h)));
        CHECK(Nat{c.covers().size()} == (is_cycle ? cycle_edges(n, h) : path_edges(n, h)));

        std::set<std::pair<std::uint32_t, std::uint32_t>> distinct;
        for (const auto& e : c.covers()) {
          const auto lo = c.vertices()[e.lower].bits();
          const auto hi = c.vertices()[e.upper].bits();
          CHECK((lo & hi) == lo);
          CHECK(std::popcount(hi ^ lo) == 1);
          distinct.emplace(e.lower, e.upper);
        }
        CHECK(distinct.size() == c.covers().size());

        // Vertex ids run rank by rank, numeric inside a rank, and find() inverts them.
        for (std::size_t id = 0; id < c.vertices().size(); ++id) {
          const auto& v = c.vertices()[id];
          CHECK(c.find(v) == static_cast<std::uint32_t>(id));
          if (id > 0) {
            const auto& prev = c.vertices()[id - 1];
            CHECK((prev.size() < v.size() || (prev.size() == v.size() && prev.bits() < v.bits())));
          }
        }
      }
    }
  }
}

TEST_CASE("small cycle powers give a star") {
  for (int h = 1; h <= 5; ++h) {
    for (int n = 1; n <= 2 * h + 1; ++n) {
      const auto c = cube(GraphKind::cycle, n, h);
      CHECK(c.vertices().size() == static_cast<std::size_t>(n) + 1);
      CHECK(c.covers().size() == static_cast<std::size_t>(n));
      CHECK(c.max_rank() == 1);
    }
  }
}

TEST_CASE("find rejects foreign masks") {
  const auto c = cube(GraphKind::path, 4, 1);
  CHECK_FALSE(c.find(VertexMask::from_string("1100")).has_value());
  CHECK_FALSE(c.find(VertexMask::from_string("101")).has_value());
  CHECK(c.rank(7).empty());
  CHECK(c.rank(-1).empty());
}

TEST_CASE("capacity") {
  CHECK_THROWS_AS(build_cube(GapGraph(GraphKind::path, 25, 3)), CapacityError);
  CHECK_THROWS_AS(build_cube(GapGraph(GraphKind::cycle, 10, 3), 9), CapacityError);
}

TEST_CASE("exports") {
  const auto c = cube(GraphKind::path, 2, 1);
  std::ostringstream dot;
  write_dot(dot, c);
  CHECK(dot.str() ==
        "graph \"Gamma_2^1\" {\n"
        "  0 [label=\"00\"];\n"
        "  1 [label=\"10\"];\n"
        "  2 [label=\"01\"];\n"
        "  0 -- 1;\n"
        "  0 -- 2;\n"
        "}\n");

  std::ostringstream el;
  write_edge_list(el, c);
  CHECK(el.str() == "0 1\n0 2\n");

  std::ostringstream js;
  write_json(js, cube(GraphKind::cycle, 4, 1));
  const auto doc = nlohmann::json::parse(js.str());
  CHECK(doc["kind"] == "cycle");
  CHECK(doc["n"] == 4);
  CHECK(doc["h"] == 1);
  CHECK(doc["vertex_count"] == 7);
  CHECK(doc["cover_count"] == 8);
  CHECK(doc["ranks"].size() == 3);
  CHECK(doc["ranks"][2] == nlohmann::json::array({"1010", "0101"}));
  CHECK(doc["covers"].size() == 8);

  std::ostringstream lambda;
  write_dot(lambda, cube(GraphKind::cycle, 3, 1));
  CHECK(lambda.str().rfind("graph \"Lambda_3^1\" {\n", 0) == 0);
}

}  // TEST_SUITE
