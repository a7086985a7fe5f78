#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "strongedge/colouring.hpp"
#include "strongedge/generators.hpp"
#include "strongedge/graph.hpp"

namespace testing {

using namespace strongedge;

inline Graph make(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
  std::vector<Edge> e;
  for (auto [a, b] : pairs) e.push_back(make_edge(a, b));
  return Graph::from_edges(n, e);
}

inline Graph cycle(std::size_t n) { return generate({"cycle", {n}}); }
inline Graph path(std::size_t n) { return generate({"path", {n}}); }
inline Graph star(std::size_t leaves) { return generate({"star", {leaves}}); }
inline Graph wheel(std::size_t spokes, std::size_t t = 0) { return generate({"wheel", {spokes}, 1, t}); }
inline Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) e.push_back({a, b});
  return Graph::from_edges(n, e);
}

// Colours listed in edge-index order.
inline PartialColouring colouring(const Graph& g, Colour palette, std::initializer_list<Colour> cs) {
  PartialColouring c(g, Palette(palette), PartialColouring::Mode::unchecked);
  std::size_t i = 0;
  for (Colour x : cs) c.assign_at(i++, x);
  return c;
}

// Edge index of the i-th cycle edge {i, i+1 mod n} on a generated cycle.
inline std::size_t cycle_edge(const Graph& g, std::size_t i) {
  const auto n = g.vertex_count();
  return *g.edge_index(make_edge(static_cast<Vertex>(i % n), static_cast<Vertex>((i + 1) % n)));
}

// Small planar graphs of assorted shapes, used by property tests.
inline std::vector<Graph> small_planar_zoo() {
  std::vector<Graph> out;
  for (std::size_t n = 3; n <= 9; ++n) out.push_back(cycle(n));
  for (std::size_t n = 2; n <= 6; ++n) out.push_back(path(n));
  for (std::size_t k = 1; k <= 5; ++k) out.push_back(star(k));
  for (std::size_t k = 3; k <= 6; ++k) out.push_back(wheel(k));
  out.push_back(complete(4));
  out.push_back(generate({"grid", {2, 3}}));
  out.push_back(generate({"grid", {3, 3}}));
  out.push_back(generate({"hex-patch", {1, 1}}));
  out.push_back(generate({"hex-patch", {1, 2}}));
  out.push_back(wheel(4, 1));
  out.push_back(generate({"star", {4}, 1, 1}));
  for (std::uint64_t s = 1; s <= 6; ++s) out.push_back(generate({"random-planar-triangulation", {6 + s % 3}, s}));
  out.push_back(make(7, {{0, 1}, {2, 3}, {4, 5}, {5, 6}}));
  return out;
}

}  // namespace testing
