#include "strongedge/exact.hpp"

#include <algorithm>

#include "strongedge/detail/dsatur.hpp"
#include "strongedge/kernels.hpp"

namespace strongedge {

namespace {

Decision decide(const Graph& g, const ConflictLists& conflicts, Colour k, BudgetClock& clock) {
  Decision d;
  if (g.edge_count() == 0) {
    d.outcome = SolveOutcome::found;
    d.witness.emplace(g, Palette(std::max<Colour>(k, 1)), PartialColouring::Mode::unchecked);
    return d;
  }
  std::vector<Colour> colours;
  switch (detail::k_colour(conflicts, k, clock, colours)) {
    case detail::SearchStatus::found:
      d.outcome = SolveOutcome::found;
      d.witness.emplace(g, Palette(k), PartialColouring::Mode::unchecked);
      for (std::size_t e = 0; e < g.edge_count(); ++e) d.witness->assign_at(e, colours[e]);
      break;
    case detail::SearchStatus::unsat: d.outcome = SolveOutcome::unsat; break;
    case detail::SearchStatus::exhausted: d.outcome = SolveOutcome::budget_exhausted; break;
  }
  return d;
}

}  // namespace

Decision is_strong_k_colourable(const Graph& g, Colour k, const Budget& budget) {
  BudgetClock clock(budget);
  auto conflicts = conflict_lists_parallel(g);
  Decision d = decide(g, conflicts, k, clock);
  d.stats = {clock.nodes(), clock.elapsed()};
  return d;
}

SolveResult strong_chromatic_index(const Graph& g, const Budget& budget) {
  BudgetClock clock(budget);
  if (g.edge_count() == 0)
    return SolveResult{0, PartialColouring(g, Palette(1), PartialColouring::Mode::unchecked), {}};

  auto conflicts = conflict_lists_parallel(g);
  auto greedy = detail::greedy_dsatur(conflicts);
  const Colour upper = *std::max_element(greedy.begin(), greedy.end());
  const auto lower = static_cast<Colour>(trivial_lower_bound(g));

  for (Colour k = lower; k < upper; ++k) {
    Decision d = decide(g, conflicts, k, clock);
    if (d.outcome == SolveOutcome::found)
      return SolveResult{k, std::move(*d.witness), {clock.nodes(), clock.elapsed()}};
    if (d.outcome == SolveOutcome::budget_exhausted)
      throw BudgetExhausted("exact search budget exhausted while testing k = " + std::to_string(k));
  }
  PartialColouring witness(g, Palette(upper), PartialColouring::Mode::unchecked);
  for (std::size_t e = 0; e < g.edge_count(); ++e) witness.assign_at(e, greedy[e]);
  return SolveResult{upper, std::move(witness), {clock.nodes(), clock.elapsed()}};
}

}  // namespace strongedge
