#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "strongedge/errors.hpp"
#include "strongedge/girth6.hpp"

using namespace testing;

namespace {

// u=0 is a 2-vertex between v=1 (4_3: 2-neighbours u, 3, 4; big neighbour 5)
// and w=2 (4_2: 2-neighbours u, 6; big neighbours 7, 8).
Graph c4_graph() {
  return make(18, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 6}, {2, 7}, {2, 8}, {3, 9}, {4, 10}, {6, 11},
                   {5, 12}, {5, 13}, {7, 14}, {7, 15}, {8, 16}, {8, 17}});
}

}  // namespace

TEST_CASE("detection examples") {
  auto s3 = star(3);
  auto c1 = find_configuration(s3);
  REQUIRE(c1);
  CHECK(c1->kind == ConfigKind::c1);
  CHECK(s3.degree(c1->u) == 1);
  CHECK(c1->v == 0);

  auto k23 = make(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  auto c2 = find_configuration(k23);
  REQUIRE(c2);
  CHECK(c2->kind == ConfigKind::c2);
  CHECK(c2->u == 2);

  // The ordered search meets C5 first; the C6 pattern holds as well.
  auto k15 = star(5);
  auto first = find_configuration(k15);
  REQUIRE(first);
  CHECK(first->kind == ConfigKind::c5);
  auto six = match_at(k15, ConfigKind::c6, 0);
  REQUIRE(six);
  CHECK(six->k == 5);
  CHECK(six->spokes.size() == 5);
}

TEST_CASE("every vertex of a cycle is a C2 centre") {
  auto c8 = cycle(8);
  auto cfg = find_configuration(c8);
  REQUIRE(cfg);
  CHECK(cfg->kind == ConfigKind::c2);
  for (Vertex u = 0; u < 8; ++u) CHECK(match_at(c8, ConfigKind::c2, u).has_value());
}

TEST_CASE("a 2-vertex between two 5-vertices is no small configuration") {
  auto g = wheel(5, 1);
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (g.degree(u) != 2) continue;
    auto n = g.neighbours(u);
    if (g.degree(n[0]) < 5 && g.degree(n[1]) < 5) continue;
    for (auto k : {ConfigKind::c1, ConfigKind::c2, ConfigKind::c3, ConfigKind::c4})
      CHECK_FALSE(match_at(g, k, u).has_value());
  }
}

TEST_CASE("found configurations re-check and go stale after change") {
  auto g = c4_graph();
  auto cfg = match_at(g, ConfigKind::c4, 0);
  REQUIRE(cfg);
  CHECK(configuration_holds(g, *cfg));
  std::vector<Edge> drop{make_edge(1, 3)};
  auto h = g.without_edges(drop);
  CHECK_FALSE(configuration_holds(h, *cfg));
  CHECK_THROWS_AS(plan_reduction(h, *cfg, 4), PreconditionError);
}

TEST_CASE("plan for C1") {
  auto g = star(3);
  auto cfg = *match_at(g, ConfigKind::c1, 1);
  auto plan = plan_reduction(g, cfg, 3);
  CHECK(plan.removed == std::vector<Edge>{make_edge(0, 1)});
  REQUIRE(plan.steps.size() == 1);
  CHECK(plan.steps[0].edge == make_edge(0, 1));
  CHECK(plan.steps[0].guarantee >= 1);
  CHECK(plan.uncoloured.empty());
}

TEST_CASE("plan for C4 uncolours the two spokes and colours them last") {
  auto g = c4_graph();
  auto cfg = *match_at(g, ConfigKind::c4, 0);
  auto plan = plan_reduction(g, cfg, 4);
  std::vector<Edge> removed{make_edge(0, 1), make_edge(0, 2)};
  std::sort(plan.removed.begin(), plan.removed.end());
  CHECK(plan.removed == removed);
  std::vector<Edge> unc(plan.uncoloured);
  std::sort(unc.begin(), unc.end());
  CHECK(unc == std::vector<Edge>{make_edge(1, 3), make_edge(1, 4)});
  REQUIRE(plan.steps.size() == 4);
  CHECK(plan.steps[0].edge == make_edge(0, 1));
  CHECK(plan.steps[1].edge == make_edge(0, 2));
  CHECK(plan.steps[2].edge.u == 1);
  CHECK(plan.steps[3].edge.u == 1);
  for (const auto& s : plan.steps) CHECK(s.guarantee >= 1);
}

TEST_CASE("plan for C6 removes every spoke with guarantee 2D-2k+3") {
  auto g = star(4);
  auto cfg = *match_at(g, ConfigKind::c6, 0);
  const long D = 5;
  auto plan = plan_reduction(g, cfg, D);
  CHECK(plan.removed.size() == 4);
  REQUIRE(plan.steps.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(plan.steps[i].edge == make_edge(0, static_cast<Vertex>(i + 1)));
    CHECK(plan.steps[i].guarantee == 2 * D - 2 * 4 + 3);
  }
}

TEST_CASE("plans cover exactly removed plus uncoloured edges") {
  for (const auto& entry : girth6_corpus(1, 15)) {
    Graph g = entry.graph;
    const auto D = g.max_degree();
    // Walk the reduction sequence by hand.
    for (int guard = 0; guard < 500 && g.max_degree() >= 4; ++guard) {
      auto cfg = find_configuration(g);
      REQUIRE(cfg);
      auto plan = plan_reduction(g, *cfg, D);
      std::vector<Edge> want(plan.removed);
      want.insert(want.end(), plan.uncoloured.begin(), plan.uncoloured.end());
      std::vector<Edge> got;
      for (const auto& s : plan.steps) {
        got.push_back(s.edge);
        CHECK(s.guarantee > 0);
      }
      std::sort(want.begin(), want.end());
      std::sort(got.begin(), got.end());
      CHECK(want == got);
      g = g.without_edges(plan.removed);
    }
  }
}

TEST_CASE("extend picks the lowest free colour and reports counts") {
  auto g = star(3);
  auto cfg = *match_at(g, ConfigKind::c1, 1);
  auto plan = plan_reduction(g, cfg, 3);
  auto h = g.without_edges(plan.removed);
  PartialColouring c(g, Palette(10));
  c.assign(make_edge(0, 2), 1);
  c.assign(make_edge(0, 3), 2);
  auto audit = extend(c, g, plan);
  REQUIRE(audit.size() == 1);
  CHECK(audit[0].chosen == 3);
  CHECK(audit[0].actual == 8);
  CHECK(audit[0].ok());
  CHECK(c.colour(make_edge(0, 1)) == 3);
  CHECK(verify_strong(g, c, true).empty());

  PartialColouring d(g, Palette(10));
  d.assign(make_edge(0, 2), 4);
  auto before = d.raw();
  CHECK(extend(d, g, ExtensionPlan{}).empty());
  CHECK(d.raw() == before);
}

TEST_CASE("extend on C2 finds at least D-1 colours for the first edge") {
  auto g = make(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  auto cfg = *find_configuration(g);
  const std::size_t D = 4;
  auto plan = plan_reduction(g, cfg, D);
  PartialColouring c(g, Palette(3 * D + 1));
  Colour next = 1;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    auto ed = g.edge(e);
    if (std::find(plan.removed.begin(), plan.removed.end(), ed) == plan.removed.end()) c.assign_at(e, next++);
  }
  auto audit = extend(c, g, plan);
  REQUIRE(audit.size() == 2);
  CHECK(audit[0].actual >= static_cast<long>(D) - 1);
  for (const auto& a : audit) CHECK(a.ok());
  CHECK(verify_strong(g, c, true).empty());
}

TEST_CASE("extend throws when a step has no colour") {
  auto g = path(3);
  std::vector<Edge> removed{make_edge(1, 2)};
  ExtensionPlan plan{removed, {}, {{make_edge(1, 2), 1, "1"}}};
  PartialColouring c(g, Palette(1));
  c.assign(make_edge(0, 1), 1);
  CHECK_THROWS_AS(extend(c, g, plan), ExtensionInfeasible);
}

TEST_CASE("colour_girth6 examples") {
  auto w5 = wheel(5, 1);
  auto r = colour_girth6(w5);
  CHECK(verify_strong(w5, r.colouring, true).empty());
  CHECK(r.colouring.colours_used() <= 16);
  CHECK(r.palette == 16);
  CHECK(r.audit_failures() == 0);

  auto k16 = star(6);
  auto s = colour_girth6(k16);
  CHECK(verify_strong(k16, s.colouring, true).empty());
  CHECK(s.colouring.colours_used() == 6);

  auto c6 = cycle(6);
  auto t = colour_girth6(c6);
  CHECK(t.method == "exact");
  CHECK(t.colouring.colours_used() == 3);
}

TEST_CASE("colour_girth6 preconditions") {
  CHECK_THROWS_WITH_AS(colour_girth6(complete(5)), "not planar", PreconditionError);
  CHECK_THROWS_AS(colour_girth6(cycle(5)), PreconditionError);
  CHECK_THROWS_AS(colour_girth6(wheel(5)), PreconditionError);
}

TEST_CASE("colour_girth6 handles forests and disconnected inputs") {
  auto forest = make(12, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {6, 7}, {7, 8}, {9, 10}});
  auto r = colour_girth6(forest);
  CHECK(verify_strong(forest, r.colouring, true).empty());
  CHECK(r.colouring.colours_used() <= 16);

  // two subdivided wheels side by side
  auto a = wheel(6, 1);
  std::vector<Edge> both(a.edges().begin(), a.edges().end());
  const auto off = static_cast<Vertex>(a.vertex_count());
  for (auto e : a.edges()) both.push_back({e.u + off, e.v + off});
  auto g = Graph::from_edges(2 * a.vertex_count(), both);
  auto s = colour_girth6(g);
  CHECK(verify_strong(g, s.colouring, true).empty());
  CHECK(s.colouring.colours_used() <= 19);
  CHECK(s.audit_failures() == 0);
}

TEST_CASE("colour_girth6 output agrees with the pair oracle and stays in budget") {
  for (const auto& entry : girth6_corpus(1, 30)) {
    const auto& g = entry.graph;
    auto r = colour_girth6(g);
    CHECK(oracle::strong_ok(g, r.colouring.raw(), true));
    CHECK(r.colouring.colours_used() <= 3 * g.max_degree() + 1);
    CHECK(r.audit_failures() == 0);
    for (const auto& rec : r.trace)
      if (rec.current_delta >= 4) CHECK(rec.config.has_value());
  }
}

TEST_CASE("configuration kind names") {
  CHECK(to_string(ConfigKind::c1) == "C1");
  CHECK(to_string(ConfigKind::c9) == "C9");
}
