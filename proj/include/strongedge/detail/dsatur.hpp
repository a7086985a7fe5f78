#pragma once

#include <vector>

#include "strongedge/budget.hpp"
#include "strongedge/colouring.hpp"
#include "strongedge/kernels.hpp"

namespace strongedge::detail {

enum class SearchStatus { found, unsat, exhausted };

// Proper k-colouring of the conflict structure (node i clashes with every
// node in adj.of(i)). Fail-first selection, at most one fresh colour per
// branch point; deterministic. On `found`, out holds colours 1..k.
SearchStatus k_colour(const ConflictLists& adj, Colour k, BudgetClock& clock, std::vector<Colour>& out);

// Saturation-ordered greedy colouring (colours from 1).
std::vector<Colour> greedy_dsatur(const ConflictLists& adj);

// CSR view of a graph's vertex adjacency.
ConflictLists adjacency_lists(const Graph& g);

}  // namespace strongedge::detail
