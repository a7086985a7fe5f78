#pragma once

// The (3Δ+1)-colouring algorithm for planar graphs of girth at least 6:
// find one of nine reducible configurations, delete its edges, colour the
// rest recursively, then extend greedily in a prescribed order.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "strongedge/budget.hpp"
#include "strongedge/colouring.hpp"
#include "strongedge/graph.hpp"

namespace strongedge {

enum class ConfigKind { c1 = 1, c2, c3, c4, c5, c6, c7, c8, c9 };

std::string to_string(ConfigKind k);

// How the far end of the first constrained spoke looks (C7, C8, C9).
enum class FarEnd {
  none,        // not applicable
  pendant,     // C7 with u1 a 1-vertex
  small,       // a 3⁻-vertex
  four_three,  // a 4_3-vertex
};

// Degrees are those of the graph the configuration was found in.
struct Configuration {
  ConfigKind kind = ConfigKind::c1;
  // C1: the 1-vertex. C2–C4: the 2-vertex. C5–C9: the k-vertex.
  Vertex u = no_vertex;
  // C1: the 4⁻ neighbour. C2: the smaller 3⁻ neighbour. C3: the 4_2 or 4_3
  // neighbour. C4: the 4_3 neighbour.
  Vertex v = no_vertex;
  // C2: the larger 3⁻ neighbour. C3: the 3⁻ neighbour. C4: the 4_2 one.
  Vertex w = no_vertex;
  // Neighbours of u in plan order. C4: v1, v2 (2-neighbours of v).
  // C5: u1. C6: all k. C7: u1 … u_{k-1}. C8/C9: the k-3-α constrained
  // 2-neighbours followed by one more 2-neighbour.
  std::vector<Vertex> spokes;
  // Far ends of constrained spokes (C7: v1 when u1 is a 2-vertex; C8/C9:
  // v_1 … v_{k-3-α}).
  std::vector<Vertex> far;
  std::vector<Vertex> pendants;  // C9: the α 1-neighbours
  Vertex x = no_vertex;          // C7: the remaining neighbour
  Vertex relay = no_vertex;      // C8/C9 with a 4_3 far end: its other 2-neighbour
  FarEnd far_end = FarEnd::none;
  std::size_t k = 0;
  std::size_t alpha = 0;

  // Named anchors for traces, e.g. {"u", 3}, {"u1", 7}.
  std::vector<std::pair<std::string, Vertex>> anchors() const;
};

// First configuration in kind order C1 … C9; within a kind, the
// lexicographically smallest anchor tuple. `centre_filter`, when given,
// restricts the primary anchor u.
std::optional<Configuration> find_configuration(
    const Graph& g, const std::function<bool(Vertex)>& centre_filter = {});

// The configuration of one kind centred at u (u is the 1-vertex for C1,
// the 2-vertex for C2-C4, the k-vertex otherwise), if its pattern holds.
std::optional<Configuration> match_at(const Graph& g, ConfigKind kind, Vertex u);

// Re-checks the configuration's degree and adjacency pattern.
bool configuration_holds(const Graph& g, const Configuration& cfg);

struct PlanStep {
  Edge edge;
  long guarantee = 0;   // lower bound on free colours at this step
  std::string bound;    // the counting expression, D = palette Δ
};

struct ExtensionPlan {
  std::vector<Edge> removed;     // H' = H - removed
  std::vector<Edge> uncoloured;  // coloured in H', cleared before extending
  std::vector<PlanStep> steps;   // colouring order
};

// `palette_delta` is the Δ behind the palette ⟦3Δ+1⟧. Throws
// PreconditionError if cfg no longer holds in g.
ExtensionPlan plan_reduction(const Graph& g, const Configuration& cfg, std::size_t palette_delta);

struct StepAudit {
  Edge edge;
  long guarantee = 0;
  long actual = 0;
  std::string bound;
  Colour chosen = uncoloured;

  bool ok() const { return actual >= guarantee; }
};

// Clears plan.uncoloured, then colours each step edge with its lowest free
// colour (N2 taken in `current`, the graph before removal). Throws
// ExtensionInfeasible when a step has no free colour.
std::vector<StepAudit> extend(PartialColouring& c, const Graph& current, const ExtensionPlan& plan);

struct ReductionRecord {
  std::size_t depth = 0;
  std::size_t component = 0;
  std::optional<Configuration> config;  // empty for the greedy base
  std::size_t current_delta = 0;
  std::vector<StepAudit> steps;
};

struct Girth6Result {
  PartialColouring colouring;
  std::size_t delta = 0;
  std::size_t palette = 0;
  std::string method;  // "reduction" or "exact" (whole input with Δ <= 3)
  std::vector<ReductionRecord> trace;

  std::size_t audit_failures() const;
  std::size_t steps() const;
};

// Total strong colouring of a planar graph with girth >= 6 (or a forest).
// Δ >= 4: palette ⟦3Δ+1⟧ via reductions. Δ <= 3: exact search under
// `small_budget`, falling back to greedy if it runs out.
Girth6Result colour_girth6(const Graph& g, const Budget& small_budget = Budget::seconds(10));

}  // namespace strongedge
