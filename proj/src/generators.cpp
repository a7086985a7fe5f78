#include "strongedge/generators.hpp"

#include <algorithm>
#include <array>
#include <random>

#include "strongedge/errors.hpp"

namespace strongedge {

namespace {

void need(const GeneratorSpec& s, std::size_t count) {
  if (s.params.size() != count)
    throw PreconditionError(s.family + " takes " + std::to_string(count) + " parameter(s)");
}

void at_least(std::size_t value, std::size_t lo, const std::string& what) {
  if (value < lo) throw PreconditionError(what + " must be at least " + std::to_string(lo));
}

Graph cycle(std::size_t n) {
  at_least(n, 3, "cycle length");
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back(make_edge(i, (i + 1) % n));
  return Graph::from_edges(n, e);
}

Graph path(std::size_t n) {
  at_least(n, 1, "path vertex count");
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.push_back(make_edge(i, i + 1));
  return Graph::from_edges(n, e);
}

Graph star(std::size_t leaves) {
  at_least(leaves, 1, "star leaf count");
  std::vector<Edge> e;
  for (std::size_t i = 1; i <= leaves; ++i) e.push_back(make_edge(0, i));
  return Graph::from_edges(leaves + 1, e);
}

// Hub 0, rim 1..spokes.
Graph wheel(std::size_t spokes) {
  at_least(spokes, 3, "wheel spoke count");
  std::vector<Edge> e;
  for (std::size_t i = 1; i <= spokes; ++i) {
    e.push_back(make_edge(0, i));
    e.push_back(make_edge(i, i % spokes + 1));
  }
  return Graph::from_edges(spokes + 1, e);
}

Graph grid(std::size_t rows, std::size_t cols) {
  at_least(rows, 1, "grid rows");
  at_least(cols, 1, "grid columns");
  std::vector<Edge> e;
  auto id = [&](std::size_t r, std::size_t c) { return static_cast<Vertex>(r * cols + c); };
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) e.push_back(make_edge(id(r, c), id(r, c + 1)));
      if (r + 1 < rows) e.push_back(make_edge(id(r, c), id(r + 1, c)));
    }
  return Graph::from_edges(rows * cols, e);
}

// Brick-wall drawing of the hexagonal lattice: rows x cols hexagons.
// Lattice points (r, c) for r in 0..rows, c in 0..2*cols+1; vertical rungs
// where r + c is even.
Graph hex_patch(std::size_t rows, std::size_t cols) {
  at_least(rows, 1, "hex-patch rows");
  at_least(cols, 1, "hex-patch columns");
  const std::size_t width = 2 * cols + 2;
  auto id = [&](std::size_t r, std::size_t c) { return static_cast<Vertex>(r * width + c); };
  std::vector<Edge> e;
  for (std::size_t r = 0; r <= rows; ++r)
    for (std::size_t c = 0; c + 1 < width; ++c) e.push_back(make_edge(id(r, c), id(r, c + 1)));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < width; ++c)
      if ((r + c) % 2 == 0) e.push_back(make_edge(id(r, c), id(r + 1, c)));
  // Drop the degree-1 corner stubs and renumber.
  Graph full = Graph::from_edges((rows + 1) * width, e);
  std::vector<Vertex> keep(full.vertex_count(), no_vertex);
  std::vector<Edge> trimmed;
  for (;;) {
    bool changed = false;
    std::vector<Edge> next;
    for (auto ed : full.edges())
      if (full.degree(ed.u) > 1 && full.degree(ed.v) > 1) next.push_back(ed);
      else changed = true;
    if (!changed) break;
    full = full.with_edges(next);
  }
  Vertex n = 0;
  for (Vertex v = 0; v < full.vertex_count(); ++v)
    if (full.degree(v) > 0) keep[v] = n++;
  for (auto ed : full.edges()) trimmed.push_back(make_edge(keep[ed.u], keep[ed.v]));
  return Graph::from_edges(n, trimmed);
}

// Stacked triangulation: start from a triangle and repeatedly insert a
// vertex into a face chosen uniformly at random.
Graph stacked_triangulation(std::size_t n, std::uint64_t seed) {
  at_least(n, 3, "triangulation vertex count");
  std::mt19937_64 rng(seed);
  std::vector<std::array<Vertex, 3>> faces{{0, 1, 2}, {0, 2, 1}};
  std::vector<Edge> e{make_edge(0, 1), make_edge(1, 2), make_edge(0, 2)};
  for (Vertex v = 3; v < n; ++v) {
    const std::size_t pick = rng() % faces.size();
    const auto [a, b, c] = faces[pick];
    e.push_back(make_edge(v, a));
    e.push_back(make_edge(v, b));
    e.push_back(make_edge(v, c));
    faces[pick] = {a, b, v};
    faces.push_back({b, c, v});
    faces.push_back({c, a, v});
  }
  return Graph::from_edges(n, e);
}

}  // namespace

std::vector<std::string> generator_families() {
  return {"cycle", "path", "star", "wheel", "grid", "hex-patch", "random-planar-triangulation"};
}

Graph generate(const GeneratorSpec& s) {
  Graph g;
  if (s.family == "cycle") need(s, 1), g = cycle(s.params[0]);
  else if (s.family == "path") need(s, 1), g = path(s.params[0]);
  else if (s.family == "star") need(s, 1), g = star(s.params[0]);
  else if (s.family == "wheel") need(s, 1), g = wheel(s.params[0]);
  else if (s.family == "grid") need(s, 2), g = grid(s.params[0], s.params[1]);
  else if (s.family == "hex-patch") need(s, 2), g = hex_patch(s.params[0], s.params[1]);
  else if (s.family == "random-planar-triangulation") need(s, 1), g = stacked_triangulation(s.params[0], s.seed);
  else throw PreconditionError("unknown generator family '" + s.family + "'");
  return s.subdivide ? subdivide(g, s.subdivide) : g;
}

std::vector<CorpusEntry> girth6_corpus(std::uint64_t first_seed, std::uint64_t last_seed) {
  std::vector<CorpusEntry> out;
  auto add = [&](std::string name, GeneratorSpec spec) {
    Graph g = generate(spec);
    out.push_back({std::move(name), std::move(spec), std::move(g)});
  };
  for (std::size_t spokes = 4; spokes <= 12; ++spokes)
    add("wheel-" + std::to_string(spokes) + "-s1", {"wheel", {spokes}, 1, 1});
  for (auto seed = first_seed; seed <= last_seed; ++seed) {
    const std::size_t n = 8 + seed % 30;
    add("rpt-" + std::to_string(n) + "-seed" + std::to_string(seed) + "-s1",
        {"random-planar-triangulation", {n}, seed, 1});
  }
  return out;
}

Graph subdivide(const Graph& g, std::size_t t) {
  if (t == 0) return g;
  std::vector<Label> vertices(g.labels().begin(), g.labels().end());
  Label next = vertices.empty() ? 0 : *std::max_element(vertices.begin(), vertices.end()) + 1;
  std::vector<std::pair<Label, Label>> edges;
  for (auto [u, v] : g.edges()) {
    Label prev = g.label(u);
    for (std::size_t i = 0; i < t; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
    edges.emplace_back(prev, g.label(v));
  }
  return Graph::from_labelled(std::move(vertices), edges);
}

}  // namespace strongedge
