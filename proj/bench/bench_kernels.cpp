// Serial vs OpenMP kernels on large subdivided triangulations.
// Usage: strongedge_bench [vertices...]   (default 500 2000 8000)

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "strongedge/generators.hpp"
#include "strongedge/kernels.hpp"

using namespace strongedge;

namespace {

template <typename F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  configure_threads_from_env();
  std::vector<std::size_t> sizes;
  for (int i = 1; i < argc; ++i) sizes.push_back(std::strtoull(argv[i], nullptr, 10));
  if (sizes.empty()) sizes = {500, 2000, 8000};

  std::printf("threads=%d\n", max_threads());
  std::printf("%-10s %8s %8s | %-14s %10s %10s %7s | %s\n", "kernel", "n", "m", "", "serial_ms", "omp_ms", "speedup",
              "agree");
  bool all_agree = true;
  for (auto n : sizes) {
    const Graph g = generate({"random-planar-triangulation", {n}, 42, 1});

    ConflictLists a, b;
    const double ts = best_of(3, [&] { a = conflict_lists_serial(g); });
    const double tp = best_of(3, [&] { b = conflict_lists_parallel(g); });
    const bool same_lists = a == b;
    std::printf("%-10s %8zu %8zu | %-14s %10.2f %10.2f %7.2f | %s\n", "conflicts", g.vertex_count(),
                g.edge_count(), "", ts * 1e3, tp * 1e3, ts / tp, same_lists ? "yes" : "NO");

    // A deliberately poor colouring (index mod 7) so the clash scan has work.
    std::vector<Colour> colours(g.edge_count());
    for (std::size_t e = 0; e < colours.size(); ++e) colours[e] = static_cast<Colour>(e % 7 + 1);
    std::vector<Clash> x, y;
    const double cs = best_of(3, [&] { x = colour_clashes_serial(g, colours); });
    const double cp = best_of(3, [&] { y = colour_clashes_parallel(g, colours); });
    const bool same_clashes = x == y;
    std::printf("%-10s %8zu %8zu | clashes=%-6zu %10.2f %10.2f %7.2f | %s\n", "clashes", g.vertex_count(),
                g.edge_count(), x.size(), cs * 1e3, cp * 1e3, cs / cp, same_clashes ? "yes" : "NO");
    all_agree = all_agree && same_lists && same_clashes;
  }
  return all_agree ? 0 : 1;
}
