#include "strongedge/discharging.hpp"

#include <algorithm>

#include "strongedge/errors.hpp"

namespace strongedge {

std::string to_string(Rule r) {
  switch (r) {
    case Rule::r1: return "R1";
    case Rule::r2: return "R2";
    case Rule::r3: return "R3";
    case Rule::r4: return "R4";
    case Rule::r5: return "R5";
    case Rule::r6_1: return "R6.1";
    case Rule::r6_2: return "R6.2";
    case Rule::r6_3: return "R6.3";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::out_of_scope: return "out-of-scope";
    case Verdict::consistent: return "consistent";
    case Verdict::theorem_violation: return "theorem-violation";
  }
  return "?";
}

Charge ChargeMap::total() const {
  Charge t = 0;
  for (const auto& c : vertex) t += c;
  for (const auto& c : face) t += c;
  return t;
}

Charge ChargeMap::at(Element e) const {
  return e.kind == Element::Kind::vertex ? vertex.at(e.id) : face.at(e.id);
}

ChargeMap initial_charges(const Embedding& e) {
  const Graph& g = e.graph();
  if (!is_connected(g)) throw PreconditionError("discharging needs a connected graph");
  ChargeMap m;
  for (Vertex v = 0; v < g.vertex_count(); ++v) m.vertex.emplace_back(2 * static_cast<long long>(g.degree(v)) - 6);
  for (const Face& f : e.faces()) m.face.emplace_back(static_cast<long long>(f.length()) - 6);
  return m;
}

namespace {

Element vtx(Vertex v) { return {Element::Kind::vertex, v}; }

void apply(ChargeMap& m, const Transfer& t) {
  auto& src = t.source.kind == Element::Kind::vertex ? m.vertex[t.source.id] : m.face[t.source.id];
  auto& dst = t.target.kind == Element::Kind::vertex ? m.vertex[t.target.id] : m.face[t.target.id];
  src -= t.amount;
  dst += t.amount;
}

}  // namespace

RuleOutcome apply_rules(const Embedding& e, const ChargeMap& init, bool reverse_order) {
  const Graph& g = e.graph();
  if (init.vertex.size() != g.vertex_count() || init.face.size() != e.faces().size())
    throw PreconditionError("charge map does not match the embedding");

  auto deg = [&](Vertex v) { return g.degree(v); };
  std::vector<std::size_t> twos(g.vertex_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (Vertex w : g.neighbours(v))
      if (deg(w) == 2) ++twos[v];
  auto is_four = [&](Vertex v, std::size_t l) { return deg(v) == 4 && twos[v] == l; };

  RuleOutcome out;
  std::vector<std::vector<Transfer>> by_rule(6);
  const Girth gi = girth(g);
  const bool check_faces = gi && *gi >= 6;

  // R1: every face gives 2 to each incident 1-vertex.
  for (std::size_t f = 0; f < e.faces().size(); ++f) {
    const Face& face = e.faces()[f];
    std::size_t alpha = 0;
    for (Vertex x : face.walk)
      if (deg(x) == 1) {
        ++alpha;
        by_rule[0].push_back({{Element::Kind::face, f}, vtx(x), Charge(2), Rule::r1});
      }
    if (check_faces && face.length() < 6 + 2 * alpha) out.face_bound_violations.push_back({f, face.length(), alpha});
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto d = deg(v);
    for (Vertex w : g.neighbours(v)) {
      // R2: a 5⁺-vertex gives 2 to each adjacent 1-vertex.
      if (d >= 5 && deg(w) == 1) by_rule[1].push_back({vtx(v), vtx(w), Charge(2), Rule::r2});
      if (deg(w) != 2) continue;
      if (is_four(v, 3)) by_rule[2].push_back({vtx(v), vtx(w), Charge(2, 3), Rule::r3});
      if (is_four(v, 2)) by_rule[3].push_back({vtx(v), vtx(w), Charge(1), Rule::r4});
      if (is_four(v, 1)) by_rule[4].push_back({vtx(v), vtx(w), Charge(2), Rule::r5});
      if (d >= 5) {
        auto n = g.neighbours(w);
        Vertex other = n[0] == v ? n[1] : n[0];
        if (deg(other) <= 3) {
          if (deg(other) == 1) out.pendant_rule_hits.push_back(w);
          by_rule[5].push_back({vtx(v), vtx(w), Charge(2), Rule::r6_1});
        } else if (is_four(other, 3)) {
          by_rule[5].push_back({vtx(v), vtx(w), Charge(4, 3), Rule::r6_2});
        } else {
          by_rule[5].push_back({vtx(v), vtx(w), Charge(1), Rule::r6_3});
        }
      }
    }
  }
  std::sort(out.pendant_rule_hits.begin(), out.pendant_rule_hits.end());
  out.pendant_rule_hits.erase(std::unique(out.pendant_rule_hits.begin(), out.pendant_rule_hits.end()),
                              out.pendant_rule_hits.end());

  if (reverse_order) std::reverse(by_rule.begin(), by_rule.end());
  out.charges = init;
  out.charges.ledger.clear();
  for (const auto& group : by_rule)
    for (const Transfer& t : group) {
      apply(out.charges, t);
      out.charges.ledger.push_back(t);
    }
  return out;
}

bool ledger_reconciles(const ChargeMap& init, const ChargeMap& final_charges) {
  ChargeMap replay = init;
  for (const Transfer& t : final_charges.ledger) apply(replay, t);
  return replay.vertex == final_charges.vertex && replay.face == final_charges.face;
}

namespace {

std::vector<char> ball(const Graph& g, std::span<const Vertex> seeds, std::size_t radius) {
  std::vector<std::size_t> dist(g.vertex_count(), radius + 1);
  std::vector<Vertex> frontier;
  for (Vertex s : seeds) {
    if (dist[s] == 0) continue;
    dist[s] = 0;
    frontier.push_back(s);
  }
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    Vertex x = frontier[head];
    if (dist[x] == radius) continue;
    for (Vertex y : g.neighbours(x))
      if (dist[y] > dist[x] + 1) {
        dist[y] = dist[x] + 1;
        frontier.push_back(y);
      }
  }
  std::vector<char> in(g.vertex_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) in[v] = dist[v] <= radius;
  return in;
}

}  // namespace

DischargeReport audit(const Embedding& e, const ChargeMap& init, const RuleOutcome& outcome) {
  const Graph& g = e.graph();
  DischargeReport r;
  r.initial_total = init.total();
  r.final_total = outcome.charges.total();
  r.ledger_size = outcome.charges.ledger.size();
  r.face_bound_violations = outcome.face_bound_violations;
  r.pendant_rule_hits = outcome.pendant_rule_hits;

  auto annotate = [&](Element el, Charge c, std::span<const Vertex> seeds) {
    auto near = ball(g, seeds, 2);
    NegativeElement n{el, c, find_configuration(g, [&](Vertex u) { return near[u] != 0; })};
    r.negatives.push_back(std::move(n));
  };
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (outcome.charges.vertex[v] < 0) {
      Vertex seed[] = {v};
      annotate({Element::Kind::vertex, v}, outcome.charges.vertex[v], seed);
    }
  for (std::size_t f = 0; f < e.faces().size(); ++f)
    if (outcome.charges.face[f] < 0) annotate({Element::Kind::face, f}, outcome.charges.face[f], e.faces()[f].walk);

  const bool in_scope = girth_at_least(girth(g), 6) && g.max_degree() >= 4;
  if (!in_scope) {
    r.verdict = Verdict::out_of_scope;
    r.reason = "girth below 6 or maximum degree below 4; no contradiction claimed";
  } else if (auto cfg = find_configuration(g)) {
    r.verdict = Verdict::consistent;
    r.reason = "negative charge present and a reducible configuration (" + to_string(cfg->kind) + ") exists";
  } else {
    r.verdict = Verdict::theorem_violation;
    r.reason = "no reducible configuration although the graph is in scope";
  }
  return r;
}

DischargeReport discharge(const Embedding& e) {
  auto init = initial_charges(e);
  auto outcome = apply_rules(e, init);
  return audit(e, init, outcome);
}

}  // namespace strongedge
