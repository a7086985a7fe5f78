#pragma once

// Data-parallel kernels over the distance-2 edge conflict structure.
// Each has a serial reference twin; tests hold them equal and the bench
// target times them against each other.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "strongedge/colouring.hpp"
#include "strongedge/graph.hpp"

namespace strongedge {

// CSR adjacency of the square of the line graph: targets of edge e are the
// indices in N2(e), sorted.
struct ConflictLists {
  std::vector<std::size_t> offsets;  // size edge_count + 1
  std::vector<std::uint32_t> targets;

  std::span<const std::uint32_t> of(std::size_t e) const {
    return {targets.data() + offsets[e], offsets[e + 1] - offsets[e]};
  }
  std::size_t size() const { return offsets.empty() ? 0 : offsets.size() - 1; }

  friend bool operator==(const ConflictLists&, const ConflictLists&) = default;
};

ConflictLists conflict_lists_serial(const Graph& g);
ConflictLists conflict_lists_parallel(const Graph& g);

// Pairs (e, f), e < f, of equally coloured edges at distance <= 2,
// sorted. Uncoloured edges never clash.
using Clash = std::pair<std::uint32_t, std::uint32_t>;
std::vector<Clash> colour_clashes_serial(const Graph& g, std::span<const Colour> colours);
std::vector<Clash> colour_clashes_parallel(const Graph& g, std::span<const Colour> colours);

// Reads STRONGEDGE_THREADS (if set) and caps the OpenMP team size.
void configure_threads_from_env();
int max_threads();

}  // namespace strongedge
