#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "strongedge/graph.hpp"

namespace strongedge {

// family: cycle(n) | path(n) | star(leaves) | wheel(spokes) | grid(rows, cols)
//       | hex-patch(rows, cols) | random-planar-triangulation(n)
struct GeneratorSpec {
  std::string family;
  std::vector<std::size_t> params;
  std::uint64_t seed = 1;
  std::size_t subdivide = 0;
};

// Deterministic in (spec, seed). Throws PreconditionError on bad parameters.
Graph generate(const GeneratorSpec& spec);

// Every edge becomes a path with t interior vertices. New vertices take
// labels above the current maximum, in edge order.
Graph subdivide(const Graph& g, std::size_t t);

std::vector<std::string> generator_families();

struct CorpusEntry {
  std::string name;
  GeneratorSpec spec;
  Graph graph;
};

// Planar, girth 6, Δ >= 4: once-subdivided wheels W4..W12 and
// once-subdivided stacked triangulations on 8 + seed % 30 vertices for the
// given seeds.
std::vector<CorpusEntry> girth6_corpus(std::uint64_t first_seed = 1, std::uint64_t last_seed = 100);

}  // namespace strongedge
