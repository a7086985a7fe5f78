#pragma once

#include <optional>
#include <string>
#include <vector>

#include "strongedge/budget.hpp"
#include "strongedge/colouring.hpp"
#include "strongedge/graph.hpp"

namespace strongedge {

// Proper edge colouring into matchings. Classes are 0-based and dense.
struct EdgeColouring {
  std::vector<std::uint32_t> class_of;  // by edge index
  std::size_t class_count = 0;

  std::vector<std::vector<std::uint32_t>> classes() const;
};

bool is_proper(const Graph& g, const EdgeColouring& ec);

// Misra-Gries fan / alternating path recolouring; at most Δ+1 classes.
EdgeColouring vizing_edge_colour(const Graph& g);

// Exactly Δ classes, or nullopt when none was found within the budget.
// Bipartite graphs are handled by alternating paths (always succeeds).
std::optional<EdgeColouring> class1_edge_colour(const Graph& g, const Budget& budget = Budget::seconds(2));

// Regimes where planar graphs are known to be class 1. Forests count as
// having every girth.
bool corollary1_applies(std::size_t delta, Girth g);

// Nodes are the matching edges (in the given order, as host edge indices);
// node i and node j are linked when the two edges are at distance 2.
struct ConflictGraph {
  std::vector<std::uint32_t> nodes;
  Graph graph;
};

ConflictGraph conflict_graph(const Graph& g, std::span<const std::uint32_t> matching);

struct NodeColouring {
  std::vector<Colour> colour;  // 1-based, by node
  Colour count = 0;            // largest colour used
  std::string method;          // exact (proven minimum) | search | greedy | five-colour
};

// Minimum-degree elimination with alternating-chain repair; at most 5
// colours on any planar graph. Throws InternalInconsistency if the repair
// gets stuck, which only a non-planar input can cause.
NodeColouring five_colour(const Graph& g);

// Exact search for at most 4 colours, falling back to five_colour once the
// budget runs out. Throws PreconditionError on non-planar input.
NodeColouring colour_planar_nodes(const Graph& cg, const Budget& budget = Budget::seconds(2));

// Flat colour (i * maxC) + c for an edge in class i with node colour c.
// Throws PreconditionError if a node colouring is improper.
PartialColouring compose(const Graph& g, const EdgeColouring& ec,
                         const std::vector<NodeColouring>& per_class);

struct PipelineResult {
  PartialColouring colouring;
  EdgeColouring classes;
  std::vector<NodeColouring> per_class;
  bool corollary_applies = false;
  std::string regime{};  // class1 | vizing
  std::size_t class_count = 0;
  std::size_t max_c = 0;
  std::size_t bound_claimed = 0;
  std::string bound_name{};  // 4*delta | 4*(delta+1) | 5*classCount
  std::size_t colours_used = 0;
};

PipelineResult colour_pipeline(const Graph& g, const Budget& budget = Budget::seconds(2));

}  // namespace strongedge
