#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "strongedge/graph.hpp"

namespace strongedge {

// 1-based colour; 0 means "not coloured".
using Colour = std::uint32_t;
inline constexpr Colour uncoloured = 0;

// The colour set {1, ..., size}.
struct Palette {
  Colour size = 1;

  explicit Palette(Colour k);
  bool contains(Colour c) const { return c >= 1 && c <= size; }
};

// An edge -> colour assignment over a palette, keyed by the host graph's
// edge indices. In maintained mode every assignment is checked against
// the distance-2 neighbourhood; unchecked mode skips that for solver
// internals. verify_strong is the authority either way.
class PartialColouring {
 public:
  enum class Mode { maintained, unchecked };

  PartialColouring(const Graph& host, Palette palette, Mode mode = Mode::maintained);
  PartialColouring(Graph&&, Palette, Mode = Mode::maintained) = delete;

  const Graph& host() const { return *host_; }
  Palette palette() const { return palette_; }
  Mode mode() const { return mode_; }
  void set_mode(Mode m) { mode_ = m; }

  Colour at(std::size_t edge_index) const { return colours_[edge_index]; }
  Colour colour(Edge e) const;
  bool is_coloured(Edge e) const { return colour(e) != uncoloured; }

  void assign(Edge e, Colour c);
  void assign_at(std::size_t edge_index, Colour c);
  void clear(Edge e);

  std::size_t coloured_count() const;
  bool is_total() const { return coloured_count() == colours_.size(); }
  // Number of distinct colours in use.
  std::size_t colours_used() const;
  const std::vector<Colour>& raw() const { return colours_; }

 private:
  std::size_t index_of(Edge e) const;

  const Graph* host_;
  Palette palette_;
  Mode mode_;
  std::vector<Colour> colours_;
};

// L \ SC(N2(e)), with N2 taken in `within` (a subgraph of the host that
// contains e) and colours read from c. Throws if e is already coloured.
std::vector<Colour> free_colours(const Graph& within, const PartialColouring& c, Edge e);
std::vector<Colour> free_colours(const PartialColouring& c, Edge e);

struct Violation {
  enum class Kind { adjacent_conflict, distance2_conflict, off_palette, uncoloured };
  Kind kind;
  Edge first;
  std::optional<Edge> second;

  friend bool operator==(const Violation&, const Violation&) = default;
};

std::string to_string(Violation::Kind k);

// Empty result means valid.
std::vector<Violation> verify_strong(const Graph& g, const PartialColouring& c, bool require_total);

// max over edges uv of d(u) + d(v) - 1; 0 for an edgeless graph.
std::size_t trivial_lower_bound(const Graph& g);

// Table of known upper bounds on the strong chromatic index of planar
// graphs, indexed by maximum degree (>= 3) and girth.
std::size_t known_bound(std::size_t delta, Girth g);

}  // namespace strongedge
