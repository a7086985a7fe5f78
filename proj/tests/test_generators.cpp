#include <doctest.h>

#include "helpers.hpp"
#include "strongedge/embedding.hpp"
#include "strongedge/errors.hpp"

using namespace testing;

TEST_CASE("family examples") {
  auto c = generate({"cycle", {6}});
  CHECK(girth(c) == 6u);
  CHECK(c.max_degree() == 2);

  auto w = generate({"wheel", {5}});
  CHECK(girth(w) == 3u);
  CHECK(w.max_degree() == 5);
  CHECK(is_planar(w));

  auto h = generate({"hex-patch", {2, 2}});
  CHECK(girth(h) == 6u);
  CHECK(h.max_degree() == 3);
  CHECK(is_planar(h));
  CHECK(is_connected(h));

  auto grid = generate({"grid", {3, 4}});
  CHECK(grid.edge_count() == 17);
  CHECK(girth(grid) == 4u);
}

TEST_CASE("hex patches are hexagonal") {
  // Embeddings of thin strips are not unique, so count independent cycles instead of faces.
  for (std::size_t r = 1; r <= 4; ++r)
    for (std::size_t c = 1; c <= 4; ++c) {
      auto h = generate({"hex-patch", {r, c}});
      CHECK(h.edge_count() + 1 == h.vertex_count() + r * c);
      CHECK(girth(h) == 6u);
      CHECK(is_connected(h));
      for (Vertex v = 0; v < h.vertex_count(); ++v) CHECK(h.degree(v) >= 2);
    }
}

TEST_CASE("subdivision") {
  auto k4 = subdivide(complete(4), 1);
  CHECK(girth(k4) == 6u);
  CHECK(k4.max_degree() == 3);

  auto w5 = subdivide(generate({"wheel", {5}}), 1);
  CHECK(girth(w5) == 6u);
  CHECK(w5.max_degree() == 5);
  CHECK(is_planar(w5));

  auto c18 = subdivide(cycle(6), 2);
  CHECK(c18.vertex_count() == 18);
  CHECK(girth(c18) == 18u);
  CHECK(c18.max_degree() == 2);

  CHECK(subdivide(path(3), 0).edge_count() == 2);
}

TEST_CASE("subdivision multiplies girth and keeps degrees") {
  for (std::uint64_t s = 1; s <= 20; ++s) {
    auto g = generate({"random-planar-triangulation", {8 + s}, s});
    for (std::size_t t = 1; t <= 2; ++t) {
      auto h = subdivide(g, t);
      CHECK(*girth(h) == (t + 1) * *girth(g));
      CHECK(h.max_degree() == g.max_degree());
      for (Vertex v = 0; v < g.vertex_count(); ++v) CHECK(h.degree(*h.vertex_of(g.label(v))) == g.degree(v));
    }
  }
}

TEST_CASE("triangulations: deterministic, planar, maximal") {
  for (std::uint64_t s = 1; s <= 30; ++s) {
    GeneratorSpec spec{"random-planar-triangulation", {5 + s}, s, 0};
    auto a = generate(spec);
    auto b = generate(spec);
    CHECK(format_edge_list(a) == format_edge_list(b));
    CHECK(is_planar(a));
    CHECK(a.edge_count() == 3 * a.vertex_count() - 6);
  }
  auto x = generate({"random-planar-triangulation", {30}, 1});
  auto y = generate({"random-planar-triangulation", {30}, 2});
  CHECK(format_edge_list(x) != format_edge_list(y));
}

TEST_CASE("corpus shape") {
  auto corpus = girth6_corpus(1, 100);
  CHECK(corpus.size() >= 100);
  for (const auto& e : corpus) {
    CHECK(is_connected(e.graph));
    CHECK(is_planar(e.graph));
    CHECK(girth(e.graph) >= 6u);
    CHECK(e.graph.max_degree() >= 4);
  }
}

TEST_CASE("bad parameters") {
  CHECK_THROWS_AS(generate({"cycle", {2}}), PreconditionError);
  CHECK_THROWS_AS(generate({"wheel", {}}), PreconditionError);
  CHECK_THROWS_AS(generate({"grid", {3}}), PreconditionError);
  CHECK_THROWS_AS(generate({"moebius", {3}}), PreconditionError);
}
