#include <doctest.h>

#include <algorithm>
#include <random>

#include "lq/graph.hpp"

using namespace lq;

TEST_CASE("families") {
  CHECK(antipath(4).edges() == std::vector<Edge>{{0, 2}, {0, 3}, {1, 3}});
  CHECK(anticycle(6).num_edges() == 9);
  CHECK(cycle(5).num_edges() == 5);
  CHECK(complete(5).num_edges() == 10);
  CHECK_THROWS(path(1));
  CHECK_THROWS(cycle(2));
  CHECK_THROWS(SimpleGraph(3, {{0, 0}}));
  CHECK_THROWS(SimpleGraph(3, {{0, 1}, {1, 0}}));
  CHECK_THROWS(SimpleGraph(3, {{0, 3}}));
}

TEST_CASE("delete_vertex") {
  // Removing x (vertex 0) from the anticycle leaves the antipath on z1, y1..yn, z2.
  CHECK(delete_vertex(anticycle(6), 0) == antipath(5));
  CHECK(delete_vertex(path(4), 1).edges() == std::vector<Edge>{{1, 2}});
  CHECK_THROWS(delete_vertex(path(3), 3));
}

TEST_CASE("edge_ideal") {
  auto i = edge_ideal(antipath(4));
  std::vector<std::string> shown;
  for (const auto& g : i.gens()) shown.push_back(to_string(g));
  CHECK(shown == std::vector<std::string>{"x1*x3", "x1*x4", "x2*x4"});
  CHECK(edge_ideal(anticycle(6)).size() == 9);
  CHECK(edge_ideal(complement(complete(2))).is_zero());
  auto a7 = edge_ideal(anticycle(7));
  for (const auto& g : a7.gens()) {
    CHECK(degree(g) == 2);
    for (auto e : g.exponents()) CHECK(e <= 1);
  }
}

TEST_CASE("chordality") {
  CHECK(is_chordal(path(7)));
  CHECK_FALSE(is_chordal(cycle(6)));
  CHECK(is_chordal(complement(antipath(8))));
  CHECK(is_chordal(SimpleGraph(4)));
  CHECK(is_chordal(cycle(3)));
  for (std::size_t n = 4; n <= 10; ++n) {
    CHECK_FALSE(is_chordal(cycle(n)));
    auto res = chordality(path(n));
    REQUIRE(res.chordal);
    CHECK(is_perfect_elimination_order(path(n), *res.elimination_order));
  }
  // C4 with one chord is chordal; the witness must check out.
  SimpleGraph diamond(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
  auto res = chordality(diamond);
  CHECK(res.chordal);
  CHECK(is_perfect_elimination_order(diamond, *res.elimination_order));
  CHECK_FALSE(is_perfect_elimination_order(cycle(4), {0, 1, 2, 3}));
}

TEST_CASE("chordality agrees with brute force on small random graphs") {
  // Oracle: a graph is chordal iff some vertex order is a perfect
  // elimination order; try them all.
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng() % 2) edges.emplace_back(u, v);
    SimpleGraph g(n, edges);
    std::vector<Vertex> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    bool any = false;
    do {
      any = is_perfect_elimination_order(g, order);
    } while (!any && std::next_permutation(order.begin(), order.end()));
    CHECK(is_chordal(g) == any);
  }
}

TEST_CASE("Froberg classification") {
  CHECK(has_linear_resolution_by_froeberg(antipath(8)));
  CHECK_FALSE(has_linear_resolution_by_froeberg(anticycle(8)));
  CHECK(has_linear_resolution_by_froeberg(complete(5)));
}

TEST_CASE("complement is an involution") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 9;
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) edges.emplace_back(u, v);
    SimpleGraph g(n, edges);
    CHECK(complement(complement(g)) == g);
  }
}

TEST_CASE("anticycle labeling") {
  for (std::size_t n = 2; n <= 8; ++n) {
    AnticycleLabeling lab(n);
    auto g = lab.graph();
    REQUIRE(g.num_vertices() == n + 3);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (v == lab.x()) continue;
      CHECK(g.adjacent(lab.x(), v) == (lab.role(v) == AnticycleRole::Y));
    }
    CHECK_FALSE(g.adjacent(lab.z1(), lab.y(1)));
    CHECK_FALSE(g.adjacent(lab.z2(), lab.y(n)));
    CHECK(g.adjacent(lab.z1(), lab.z2()));
    CHECK(lab.name(lab.y(n)) == "y" + std::to_string(n));
  }
  auto names = AnticycleLabeling(3).names();
  CHECK(names == std::vector<std::string>{"x", "z1", "y1", "y2", "y3", "z2"});
  CHECK_THROWS(AnticycleLabeling(1));
  CHECK_THROWS(AnticycleLabeling(3).y(4));
}

TEST_CASE("edge list format") {
  auto g = parse_edge_list("# antipath\nn 5\n0 2\n0 3 # chord\n\n1 3\n");
  CHECK(g.num_vertices() == 5);
  CHECK(g.num_edges() == 3);
  CHECK(parse_edge_list("0 1\n1 2\n").num_vertices() == 3);
  CHECK(parse_edge_list(format_edge_list(anticycle(7))) == anticycle(7));
  CHECK_THROWS(parse_edge_list("0\n"));
  CHECK_THROWS(parse_edge_list("0 1 2\n"));
  CHECK_THROWS(parse_edge_list("a b\n"));
  CHECK_THROWS(parse_edge_list("n 2\n0 5\n"));
  CHECK_THROWS(parse_edge_list("1 1\n"));
}
