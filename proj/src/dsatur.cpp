#include "strongedge/detail/dsatur.hpp"

#include <algorithm>

namespace strongedge::detail {

namespace {

class Search {
 public:
  Search(const ConflictLists& adj, Colour k, BudgetClock& clock)
      : adj_(adj), m_(adj.size()), k_(k), clock_(clock),
        colour_(m_, uncoloured), forbid_(m_ * (k + 1), 0), free_(m_, k) {}

  bool run() { return dfs(0); }
  const std::vector<Colour>& colours() const { return colour_; }

 private:
  bool dfs(std::size_t coloured) {
    if (coloured == m_) return true;
    if (clock_.tick()) return false;

    // Fewest free colours, then most conflicts, then lowest index.
    std::size_t best = m_;
    for (std::size_t e = 0; e < m_; ++e) {
      if (colour_[e] != uncoloured) continue;
      if (best == m_ || free_[e] < free_[best] ||
          (free_[e] == free_[best] && adj_.of(e).size() > adj_.of(best).size()))
        best = e;
    }
    if (free_[best] == 0) return false;

    const Colour limit = std::min<Colour>(k_, max_used_ + 1);
    for (Colour c = 1; c <= limit; ++c) {
      if (forbid_[best * (k_ + 1) + c]) continue;
      const Colour saved = max_used_;
      assign(best, c);
      if (dfs(coloured + 1)) return true;
      unassign(best, c);
      max_used_ = saved;
      if (clock_.exhausted()) return false;
    }
    return false;
  }

  void assign(std::size_t e, Colour c) {
    colour_[e] = c;
    max_used_ = std::max(max_used_, c);
    for (auto f : adj_.of(e))
      if (forbid_[f * (k_ + 1) + c]++ == 0) --free_[f];
  }

  void unassign(std::size_t e, Colour c) {
    colour_[e] = uncoloured;
    for (auto f : adj_.of(e))
      if (--forbid_[f * (k_ + 1) + c] == 0) ++free_[f];
  }

  const ConflictLists& adj_;
  std::size_t m_;
  Colour k_;
  BudgetClock& clock_;
  std::vector<Colour> colour_;
  std::vector<std::uint32_t> forbid_;
  std::vector<Colour> free_;
  Colour max_used_ = 0;
};

}  // namespace

SearchStatus k_colour(const ConflictLists& adj, Colour k, BudgetClock& clock, std::vector<Colour>& out) {
  if (adj.size() == 0) {
    out.clear();
    return SearchStatus::found;
  }
  if (k == 0) return SearchStatus::unsat;
  Search search(adj, k, clock);
  if (search.run()) {
    out = search.colours();
    return SearchStatus::found;
  }
  return clock.exhausted() ? SearchStatus::exhausted : SearchStatus::unsat;
}

std::vector<Colour> greedy_dsatur(const ConflictLists& adj) {
  const std::size_t m = adj.size();
  std::vector<Colour> colour(m, uncoloured);
  std::vector<std::vector<char>> seen(m);
  std::vector<std::size_t> saturation(m, 0);
  for (std::size_t step = 0; step < m; ++step) {
    std::size_t best = m;
    for (std::size_t e = 0; e < m; ++e) {
      if (colour[e] != uncoloured) continue;
      if (best == m || saturation[e] > saturation[best] ||
          (saturation[e] == saturation[best] && adj.of(e).size() > adj.of(best).size()))
        best = e;
    }
    Colour c = 1;
    while (c < seen[best].size() && seen[best][c]) ++c;
    colour[best] = c;
    for (auto f : adj.of(best)) {
      if (seen[f].size() <= c) seen[f].resize(c + 1, 0);
      if (!seen[f][c]) {
        seen[f][c] = 1;
        ++saturation[f];
      }
    }
  }
  return colour;
}

ConflictLists adjacency_lists(const Graph& g) {
  ConflictLists out;
  out.offsets.assign(g.vertex_count() + 1, 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) out.offsets[v + 1] = out.offsets[v] + g.degree(v);
  out.targets.reserve(out.offsets.back());
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (Vertex w : g.neighbours(v)) out.targets.push_back(w);
  return out;
}

}  // namespace strongedge::detail
