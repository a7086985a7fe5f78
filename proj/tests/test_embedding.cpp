#include <doctest.h>

#include <numeric>

#include "helpers.hpp"
#include "strongedge/embedding.hpp"

using namespace testing;

namespace {

std::vector<std::size_t> lengths(const Graph& g) {
  auto e = std::get<Embedding>(planar_embed(g));
  std::vector<std::size_t> out;
  for (auto f : faces(e)) out.push_back(f.length);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("face lengths of small planar graphs") {
  CHECK(lengths(cycle(6)) == std::vector<std::size_t>{6, 6});
  CHECK(lengths(complete(4)) == std::vector<std::size_t>{3, 3, 3, 3});
  CHECK(lengths(path(5)) == std::vector<std::size_t>{8});
  CHECK(lengths(star(3)) == std::vector<std::size_t>{6});
}

TEST_CASE("K5 and K33 are not planar") {
  auto k5 = planar_embed(complete(5));
  REQUIRE(std::holds_alternative<NonPlanar>(k5));
  CHECK_FALSE(std::get<NonPlanar>(k5).witness.empty());
  auto k33 = make(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  CHECK_FALSE(is_planar(k33));
}

TEST_CASE("witness edges belong to the graph") {
  auto g = complete(5);
  auto res = planar_embed(g);
  const auto& w = std::get<NonPlanar>(res).witness;
  CHECK(w.size() == 10);
  for (auto e : w) CHECK(g.has_edge(e.u, e.v));
}

TEST_CASE("Euler per component and face length sum") {
  for (const auto& g : small_planar_zoo()) {
    auto e = std::get<Embedding>(planar_embed(g));
    CHECK(euler_holds(e));
    std::size_t total = 0;
    for (const auto& f : e.faces()) total += f.length();
    CHECK(total == 2 * g.edge_count());
  }
}

TEST_CASE("every dart lies on exactly one face walk") {
  auto g = generate({"random-planar-triangulation", {12}, 3, 1});
  auto e = std::get<Embedding>(planar_embed(g));
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (Vertex w : g.neighbours(v)) CHECK(e.face_of_dart(v, w) < e.faces().size());
}

TEST_CASE("rotation must list each neighbour once") {
  auto g = cycle(3);
  std::vector<std::vector<Vertex>> bad{{1, 2}, {0, 2}, {0, 0}};
  CHECK_THROWS(Embedding(g, bad));
}
