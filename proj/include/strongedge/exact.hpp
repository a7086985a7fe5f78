#pragma once

#include <optional>

#include "strongedge/budget.hpp"
#include "strongedge/colouring.hpp"
#include "strongedge/graph.hpp"

namespace strongedge {

struct SolveStats {
  std::uint64_t nodes = 0;
  double seconds = 0;
};

enum class SolveOutcome { found, unsat, budget_exhausted };

struct Decision {
  SolveOutcome outcome = SolveOutcome::unsat;
  std::optional<PartialColouring> witness;  // set iff outcome == found
  SolveStats stats;
};

// Branch and bound over the distance-2 conflict structure: fail-first edge
// selection, at most one fresh colour per branch point.
Decision is_strong_k_colourable(const Graph& g, Colour k, const Budget& budget = {});

struct SolveResult {
  std::size_t chi_s = 0;
  PartialColouring witness;
  SolveStats stats;
};

// Smallest k with a strong k-edge-colouring, searching upward from the
// trivial lower bound. Throws BudgetExhausted if the budget runs out.
SolveResult strong_chromatic_index(const Graph& g, const Budget& budget = {});

}  // namespace strongedge
