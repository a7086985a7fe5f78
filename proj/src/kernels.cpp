#include "strongedge/kernels.hpp"

#include <algorithm>
#include <cstdlib>
#include <omp.h>
#include <string>

namespace strongedge {

namespace {

ConflictLists pack(std::vector<std::vector<std::uint32_t>>& lists) {
  ConflictLists out;
  out.offsets.assign(lists.size() + 1, 0);
  for (std::size_t e = 0; e < lists.size(); ++e) out.offsets[e + 1] = out.offsets[e] + lists[e].size();
  out.targets.resize(out.offsets.back());
  for (std::size_t e = 0; e < lists.size(); ++e)
    std::copy(lists[e].begin(), lists[e].end(), out.targets.begin() + static_cast<std::ptrdiff_t>(out.offsets[e]));
  return out;
}

void clashes_of(const Graph& g, std::span<const Colour> colours, std::size_t e,
                std::vector<Clash>& out) {
  const Colour c = colours[e];
  if (c == uncoloured) return;
  for (auto f : n2_indices(g, e, false))
    if (f > e && colours[f] == c) out.emplace_back(static_cast<std::uint32_t>(e), f);
}

}  // namespace

ConflictLists conflict_lists_serial(const Graph& g) {
  std::vector<std::vector<std::uint32_t>> lists(g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) lists[e] = n2_indices(g, e, false);
  return pack(lists);
}

ConflictLists conflict_lists_parallel(const Graph& g) {
  const auto m = static_cast<std::int64_t>(g.edge_count());
  std::vector<std::vector<std::uint32_t>> lists(g.edge_count());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t e = 0; e < m; ++e) lists[static_cast<std::size_t>(e)] = n2_indices(g, static_cast<std::size_t>(e), false);
  return pack(lists);
}

std::vector<Clash> colour_clashes_serial(const Graph& g, std::span<const Colour> colours) {
  std::vector<Clash> out;
  for (std::size_t e = 0; e < g.edge_count(); ++e) clashes_of(g, colours, e, out);
  return out;
}

std::vector<Clash> colour_clashes_parallel(const Graph& g, std::span<const Colour> colours) {
  const auto m = static_cast<std::int64_t>(g.edge_count());
  std::vector<std::vector<Clash>> per_edge(g.edge_count());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t e = 0; e < m; ++e)
    clashes_of(g, colours, static_cast<std::size_t>(e), per_edge[static_cast<std::size_t>(e)]);
  std::vector<Clash> out;
  for (auto& v : per_edge) out.insert(out.end(), v.begin(), v.end());
  return out;
}

void configure_threads_from_env() {
  if (const char* env = std::getenv("STRONGEDGE_THREADS")) {
    try {
      int n = std::stoi(env);
      if (n > 0) omp_set_num_threads(n);
    } catch (const std::exception&) {
      // ignore malformed values
    }
  }
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace strongedge
