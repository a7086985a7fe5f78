#include "strongedge/colouring.hpp"

#include <algorithm>

#include "strongedge/errors.hpp"
#include "strongedge/kernels.hpp"

namespace strongedge {

Palette::Palette(Colour k) : size(k) {
  if (k < 1) throw PreconditionError("palette must have at least one colour");
}

PartialColouring::PartialColouring(const Graph& host, Palette palette, Mode mode)
    : host_(&host), palette_(palette), mode_(mode), colours_(host.edge_count(), uncoloured) {}

std::size_t PartialColouring::index_of(Edge e) const {
  auto idx = host_->edge_index(e);
  if (!idx) throw PreconditionError("edge is not in the host graph");
  return *idx;
}

Colour PartialColouring::colour(Edge e) const { return colours_[index_of(e)]; }

void PartialColouring::assign(Edge e, Colour c) { assign_at(index_of(e), c); }

void PartialColouring::assign_at(std::size_t edge_index, Colour c) {
  if (mode_ == Mode::maintained) {
    if (!palette_.contains(c)) throw PreconditionError("colour " + std::to_string(c) + " is off the palette");
    for (auto f : n2_indices(*host_, edge_index, false))
      if (colours_[f] == c)
        throw PreconditionError("colour " + std::to_string(c) + " already used within distance 2 of " +
                                edge_key(*host_, host_->edge(edge_index)));
  }
  colours_[edge_index] = c;
}

void PartialColouring::clear(Edge e) { colours_[index_of(e)] = uncoloured; }

std::size_t PartialColouring::coloured_count() const {
  return static_cast<std::size_t>(
      std::count_if(colours_.begin(), colours_.end(), [](Colour c) { return c != uncoloured; }));
}

std::size_t PartialColouring::colours_used() const {
  std::vector<Colour> used;
  for (Colour c : colours_)
    if (c != uncoloured) used.push_back(c);
  std::sort(used.begin(), used.end());
  return static_cast<std::size_t>(std::unique(used.begin(), used.end()) - used.begin());
}

std::vector<Colour> free_colours(const Graph& within, const PartialColouring& c, Edge e) {
  auto idx = within.edge_index(e);
  if (!idx) throw PreconditionError("edge is not in the graph");
  if (c.is_coloured(e)) throw PreconditionError("edge " + edge_key(within, e) + " is already coloured");
  const Colour k = c.palette().size;
  std::vector<char> taken(k + 1, 0);
  const Graph& host = c.host();
  const bool same = &within == &host;
  for (auto f : n2_indices(within, *idx, false)) {
    Colour col = same ? c.at(f) : c.colour(within.edge(f));
    if (col >= 1 && col <= k) taken[col] = 1;
  }
  std::vector<Colour> out;
  for (Colour col = 1; col <= k; ++col)
    if (!taken[col]) out.push_back(col);
  return out;
}

std::vector<Colour> free_colours(const PartialColouring& c, Edge e) { return free_colours(c.host(), c, e); }

std::string to_string(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::adjacent_conflict: return "adjacent-conflict";
    case Violation::Kind::distance2_conflict: return "distance2-conflict";
    case Violation::Kind::off_palette: return "off-palette";
    case Violation::Kind::uncoloured: return "uncoloured";
  }
  return "unknown";
}

std::vector<Violation> verify_strong(const Graph& g, const PartialColouring& c, bool require_total) {
  if (c.host().edge_count() != g.edge_count())
    throw PreconditionError("colouring is keyed on a different graph");
  std::vector<Violation> out;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    Colour col = c.at(i);
    if (col == uncoloured) {
      if (require_total) out.push_back({Violation::Kind::uncoloured, g.edge(i), std::nullopt});
    } else if (!c.palette().contains(col)) {
      out.push_back({Violation::Kind::off_palette, g.edge(i), std::nullopt});
    }
  }
  for (auto [e, f] : colour_clashes_parallel(g, c.raw())) {
    Edge a = g.edge(e), b = g.edge(f);
    auto kind = adjacent(a, b) ? Violation::Kind::adjacent_conflict : Violation::Kind::distance2_conflict;
    out.push_back({kind, a, b});
  }
  return out;
}

std::size_t trivial_lower_bound(const Graph& g) {
  std::size_t best = 0;
  for (Edge e : g.edges()) best = std::max(best, g.degree(e.u) + g.degree(e.v) - 1);
  return best;
}

std::size_t known_bound(std::size_t delta, Girth g) {
  if (delta < 3) throw PreconditionError("the bound table starts at maximum degree 3");
  // Rows: no restriction, g >= 4, g >= 5, g >= 6, g >= 7.
  std::size_t row = 0;
  for (std::size_t threshold = 4; threshold <= 7; ++threshold)
    if (girth_at_least(g, threshold)) row = threshold - 3;
  // Columns: delta >= 7, delta in {5, 6}, delta == 4, delta == 3.
  std::size_t col = delta >= 7 ? 0 : delta >= 5 ? 1 : delta == 4 ? 2 : 3;

  enum Form { four_d, four_d_plus_4, three_d_plus_1, three_d };
  static constexpr Form table[5][4] = {
      {four_d, four_d_plus_4, four_d_plus_4, three_d_plus_1},
      {four_d, four_d, four_d_plus_4, three_d_plus_1},
      {four_d, four_d, four_d, three_d_plus_1},
      {three_d_plus_1, three_d_plus_1, three_d_plus_1, three_d},
      {three_d, three_d, three_d, three_d},
  };
  switch (table[row][col]) {
    case four_d: return 4 * delta;
    case four_d_plus_4: return 4 * delta + 4;
    case three_d_plus_1: return 3 * delta + 1;
    case three_d: return 3 * delta;
  }
  return 0;
}

}  // namespace strongedge
