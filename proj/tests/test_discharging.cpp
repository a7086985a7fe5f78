#include <doctest.h>

#include "helpers.hpp"
#include "strongedge/discharging.hpp"
#include "strongedge/errors.hpp"

using namespace testing;

namespace {

Embedding embed(const Graph& g) { return std::get<Embedding>(planar_embed(g)); }

}  // namespace

TEST_CASE("initial charges") {
  auto e = embed(cycle(6));
  auto m = initial_charges(e);
  for (const auto& c : m.vertex) CHECK(c == Charge(-2));
  REQUIRE(m.face.size() == 2);
  for (const auto& c : m.face) CHECK(c == Charge(0));
  CHECK(m.total() == Charge(-12));

  auto s = initial_charges(embed(star(4)));
  CHECK(s.vertex[0] == Charge(2));

  auto c7 = initial_charges(embed(cycle(7)));
  CHECK(c7.face[0] == Charge(1));

  CHECK_THROWS_AS(initial_charges(embed(make(4, {{0, 1}, {2, 3}}))), PreconditionError);
}

TEST_CASE("4_3-vertex ends at zero") {
  // v=0: 2-neighbours 1, 2, 3 and a big neighbour 4 (degree 4 via leaves of paths).
  auto g = make(13, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {2, 6}, {3, 7}, {4, 8}, {4, 9}, {4, 10}, {8, 11}, {9, 12}});
  auto e = embed(g);
  auto out = apply_rules(e, initial_charges(e));
  CHECK(out.charges.vertex[0] == Charge(0));
}

TEST_CASE("1-vertex next to a 5-vertex ends at zero") {
  auto g = star(5);
  auto e = embed(g);
  auto out = apply_rules(e, initial_charges(e));
  for (Vertex leaf = 1; leaf <= 5; ++leaf) CHECK(out.charges.vertex[leaf] == Charge(0));
}

TEST_CASE("2-vertex between two plain 5-vertices ends at zero") {
  // 0 and 1 are 5-vertices joined through the 2-vertex 2; all other
  // neighbours are 3-vertices so nothing else reaches vertex 2.
  std::vector<Edge> e{make_edge(0, 2), make_edge(1, 2)};
  Vertex next = 3;
  for (Vertex hub : {0u, 1u})
    for (int i = 0; i < 4; ++i) {
      Vertex mid = next++;
      e.push_back(make_edge(hub, mid));
      e.push_back(make_edge(mid, next++));
      e.push_back(make_edge(mid, next++));
    }
  auto g = Graph::from_edges(next, e);
  auto emb = embed(g);
  auto out = apply_rules(emb, initial_charges(emb));
  CHECK(out.charges.vertex[2] == Charge(0));
  bool r63 = false;
  for (const auto& t : out.charges.ledger)
    if (t.target == Element{Element::Kind::vertex, 2}) r63 = r63 || t.rule == Rule::r6_3;
  CHECK(r63);
}

TEST_CASE("pendant path behind a 5-vertex fires R6.1 and is recorded") {
  // hub 0 with five 2-neighbours; one of them (1) ends in the leaf 6.
  auto g = make(11, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 10}});
  auto e = embed(g);
  auto out = apply_rules(e, initial_charges(e));
  CHECK_FALSE(out.pendant_rule_hits.empty());
  CHECK(out.charges.total() == Charge(-12));
}

TEST_CASE("C6 is out of scope with negatives") {
  auto r = discharge(embed(cycle(6)));
  CHECK(r.initial_total == Charge(-12));
  CHECK(r.final_total == Charge(-12));
  CHECK(r.verdict == Verdict::out_of_scope);
  CHECK_FALSE(r.negatives.empty());
}

TEST_CASE("subdivided W5 is consistent") {
  auto g = wheel(5, 1);
  auto r = discharge(embed(g));
  CHECK(r.final_total == Charge(-12));
  CHECK(r.verdict == Verdict::consistent);
  CHECK(find_configuration(g).has_value());
  CHECK(r.face_bound_violations.empty());
}

TEST_CASE("totals, ledger replay and order independence") {
  std::vector<Graph> graphs = small_planar_zoo();
  for (const auto& entry : girth6_corpus(1, 10)) graphs.push_back(entry.graph);
  for (const auto& g : graphs) {
    if (!is_connected(g)) continue;
    auto e = embed(g);
    auto init = initial_charges(e);
    CHECK(init.total() == Charge(-12));
    auto fwd = apply_rules(e, init);
    auto rev = apply_rules(e, init, true);
    CHECK(fwd.charges.total() == Charge(-12));
    CHECK(ledger_reconciles(init, fwd.charges));
    CHECK(ledger_reconciles(init, rev.charges));
    CHECK(fwd.charges.vertex == rev.charges.vertex);
    CHECK(fwd.charges.face == rev.charges.face);
  }
}

TEST_CASE("tampered ledger fails to reconcile") {
  auto e = embed(wheel(5, 1));
  auto init = initial_charges(e);
  auto out = apply_rules(e, init);
  REQUIRE_FALSE(out.charges.ledger.empty());
  out.charges.ledger.pop_back();
  CHECK_FALSE(ledger_reconciles(init, out.charges));
}

TEST_CASE("face inequality on girth-6 faces, trees exempt") {
  for (const auto& entry : girth6_corpus(1, 20)) {
    auto out = apply_rules(embed(entry.graph), initial_charges(embed(entry.graph)));
    CHECK(out.face_bound_violations.empty());
  }
  auto tree = embed(star(4));
  CHECK(apply_rules(tree, initial_charges(tree)).face_bound_violations.empty());
}

TEST_CASE("rule names") {
  CHECK(to_string(Rule::r6_2) == "R6.2");
  CHECK(to_string(Verdict::theorem_violation) == "theorem-violation");
}
