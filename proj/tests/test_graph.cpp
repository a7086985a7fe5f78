#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "strongedge/errors.hpp"

using namespace testing;

TEST_CASE("parse builds a path and merges duplicates") {
  auto g = parse_graph("0 1\n1 2\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  auto d = parse_graph("0 1\n0 1\n1 0\n");
  CHECK(d.edge_count() == 1);
}

TEST_CASE("parse rejects loops and junk with a line number") {
  CHECK_THROWS_AS(parse_graph("0 0\n"), ParseError);
  try {
    parse_graph("# header\n0 1\n1 x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_graph("0 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("-1 2\n"), ParseError);
}

TEST_CASE("parse keeps comments, isolated vertices and sparse labels") {
  auto g = parse_graph("# comment\n10 30  # trailing\n\n 7\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 1);
  CHECK(g.label(0) == 7);
  CHECK(g.degree(*g.vertex_of(7)) == 0);
  CHECK(edge_key(g, g.edge(0)) == "10-30");
  CHECK(parse_graph(format_edge_list(g)).labels().size() == 3);
}

TEST_CASE("girth of basic shapes") {
  CHECK(girth(cycle(6)) == 6u);
  CHECK_FALSE(girth(star(5)).has_value());
  CHECK(girth(complete(4)) == 3u);
  CHECK(to_string(girth(path(4))) == "acyclic");
}

TEST_CASE("girth agrees with cycle enumeration") {
  for (const auto& g : small_planar_zoo()) CHECK(girth(g) == oracle::girth(g));
  for (std::uint64_t s = 1; s <= 10; ++s) {
    auto g = generate({"random-planar-triangulation", {7}, s, 1});
    CHECK(girth(g) == oracle::girth(g));
  }
}

TEST_CASE("vertex classes") {
  auto spider = generate({"star", {4}, 1, 1});
  auto centre = classify_vertex(spider, 0);
  CHECK(centre.is(4, 4));

  auto p5 = path(5);  // 0-1-2-3-4
  auto v3 = classify_vertex(p5, 3);
  CHECK(v3.degree == 2);
  CHECK(v3.two_neighbours == 1);

  auto p3 = path(3);
  auto mid = classify_vertex(p3, 1);
  CHECK(mid.degree == 2);
  CHECK_FALSE(mid.bad_two);
  CHECK(classify_vertex(p5, 2).bad_two);
}

TEST_CASE("second neighbourhood") {
  auto p4 = path(4);
  auto mid = *p4.edge_index(make_edge(1, 2));
  auto n2 = n2_indices(p4, mid, false);
  CHECK(n2.size() == 2);

  auto m = make(6, {{0, 1}, {2, 3}, {4, 5}});
  CHECK(n2_indices(m, 0, false).empty());

  auto c6 = cycle(6);
  auto e1 = cycle_edge(c6, 0);
  std::vector<std::uint32_t> want;
  for (std::size_t i : {1, 2, 4, 5}) want.push_back(static_cast<std::uint32_t>(cycle_edge(c6, i)));
  std::sort(want.begin(), want.end());
  CHECK(n2_indices(c6, e1, false) == want);
  auto closed = n2_indices(c6, e1, true);
  CHECK(closed.size() == 5);
}

TEST_CASE("second neighbourhood agrees with brute-force distance") {
  for (const auto& g : small_planar_zoo())
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      std::vector<std::uint32_t> want;
      for (std::size_t f = 0; f < g.edge_count(); ++f)
        if (oracle::conflict(g, g.edge(e), g.edge(f))) want.push_back(static_cast<std::uint32_t>(f));
      CHECK(n2_indices(g, e, false) == want);
    }
}

TEST_CASE("components, connectivity, bipartiteness") {
  auto g = make(7, {{0, 1}, {1, 2}, {3, 4}});
  CHECK(edge_components(g).size() == 2);
  CHECK_FALSE(is_connected(g));
  CHECK(is_connected(cycle(5)));
  CHECK(is_bipartite(cycle(6)));
  CHECK_FALSE(is_bipartite(cycle(5)));
}

TEST_CASE("derived graphs keep the vertex set") {
  auto c = cycle(5);
  std::vector<Edge> drop{make_edge(0, 1)};
  auto h = c.without_edges(drop);
  CHECK(h.vertex_count() == 5);
  CHECK(h.edge_count() == 4);
  CHECK(h.plus_edges(drop).edges().size() == 5);
  CHECK_THROWS_AS(make_edge(3, 3), PreconditionError);
}
