#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "strongedge/exact.hpp"

using namespace testing;

TEST_CASE("frozen cycle table matches the exhaustive oracle") {
  for (std::size_t n = 3; n <= 12; ++n) CHECK(oracle::strong_chromatic_index(cycle(n)) == oracle::cycle_table[n - 3]);
}

TEST_CASE("decision examples") {
  auto c6 = cycle(6);
  auto d = is_strong_k_colourable(c6, 3);
  REQUIRE(d.outcome == SolveOutcome::found);
  REQUIRE(d.witness);
  CHECK(verify_strong(c6, *d.witness, true).empty());
  // up to renaming, the unique pattern is periodic with period 3
  for (std::size_t i = 0; i < 6; ++i)
    CHECK(d.witness->at(cycle_edge(c6, i)) == d.witness->at(cycle_edge(c6, i + 3)));

  CHECK(is_strong_k_colourable(cycle(5), 4).outcome == SolveOutcome::unsat);

  auto k14 = star(4);
  auto s = is_strong_k_colourable(k14, 4);
  REQUIRE(s.outcome == SolveOutcome::found);
  CHECK(s.witness->colours_used() == 4);
}

TEST_CASE("strong chromatic index examples") {
  CHECK(strong_chromatic_index(path(4)).chi_s == 3);
  CHECK(strong_chromatic_index(cycle(5)).chi_s == 5);
  CHECK(strong_chromatic_index(cycle(9)).chi_s == 3);
  CHECK(strong_chromatic_index(complete(4)).chi_s == 6);
  CHECK(strong_chromatic_index(make(3, {})).chi_s == 0);
}

TEST_CASE("exact agrees with the exhaustive oracle on small graphs") {
  for (const auto& g : small_planar_zoo()) {
    if (g.edge_count() > 12) continue;
    auto r = strong_chromatic_index(g);
    CHECK(r.chi_s == oracle::strong_chromatic_index(g));
    CHECK(oracle::strong_ok(g, r.witness.raw(), true));
    CHECK(r.chi_s >= trivial_lower_bound(g));
    if (r.chi_s > 0) CHECK(is_strong_k_colourable(g, static_cast<Colour>(r.chi_s - 1)).outcome == SolveOutcome::unsat);
  }
}

TEST_CASE("budget exhaustion is reported") {
  auto g = generate({"random-planar-triangulation", {14}, 3});
  auto d = is_strong_k_colourable(g, static_cast<Colour>(trivial_lower_bound(g)), Budget::nodes(5));
  CHECK(d.outcome != SolveOutcome::found);
  CHECK_THROWS_AS(strong_chromatic_index(g, Budget::nodes(5)), BudgetExhausted);
}
