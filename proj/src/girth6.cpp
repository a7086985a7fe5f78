#include "strongedge/girth6.hpp"

#include <algorithm>

#include "strongedge/embedding.hpp"
#include "strongedge/errors.hpp"
#include "strongedge/exact.hpp"

namespace strongedge {

std::string to_string(ConfigKind k) { return "C" + std::to_string(static_cast<int>(k)); }

std::vector<std::pair<std::string, Vertex>> Configuration::anchors() const {
  std::vector<std::pair<std::string, Vertex>> out{{"u", u}};
  if (v != no_vertex) out.emplace_back("v", v);
  if (w != no_vertex) out.emplace_back("w", w);
  for (std::size_t i = 0; i < spokes.size(); ++i)
    out.emplace_back((kind == ConfigKind::c4 ? "v" : "u") + std::to_string(i + 1), spokes[i]);
  for (std::size_t i = 0; i < far.size(); ++i) out.emplace_back("v" + std::to_string(i + 1), far[i]);
  for (std::size_t i = 0; i < pendants.size(); ++i) out.emplace_back("p" + std::to_string(i + 1), pendants[i]);
  if (x != no_vertex) out.emplace_back("x", x);
  if (relay != no_vertex) out.emplace_back("relay", relay);
  return out;
}

namespace {

// Local degree facts about the current graph.
class Local {
 public:
  explicit Local(const Graph& g) : g_(g), twos_(g.vertex_count(), 0), ones_(g.vertex_count(), 0) {
    for (Vertex a = 0; a < g.vertex_count(); ++a)
      for (Vertex b : g.neighbours(a)) {
        if (g.degree(b) == 2) ++twos_[a];
        if (g.degree(b) == 1) ++ones_[a];
      }
  }

  std::size_t deg(Vertex a) const { return g_.degree(a); }
  std::size_t twos(Vertex a) const { return twos_[a]; }
  std::size_t ones(Vertex a) const { return ones_[a]; }
  std::size_t at_most_two(Vertex a) const { return twos_[a] + ones_[a]; }
  bool four_three(Vertex a) const { return deg(a) == 4 && twos_[a] == 3; }
  bool four_two(Vertex a) const { return deg(a) == 4 && twos_[a] == 2; }

  // The neighbour of 2-vertex s other than `from`.
  Vertex other(Vertex s, Vertex from) const {
    auto n = g_.neighbours(s);
    return n[0] == from ? n[1] : n[0];
  }
  // A 2-vertex whose other neighbour is a 3⁻-vertex or a 4_3-vertex.
  bool constrained(Vertex s, Vertex from) const {
    if (deg(s) != 2) return false;
    Vertex o = other(s, from);
    return deg(o) <= 3 || four_three(o);
  }

  const Graph& graph() const { return g_; }

 private:
  const Graph& g_;
  std::vector<std::size_t> twos_;
  std::vector<std::size_t> ones_;
};

std::optional<Configuration> detect_c1(const Local& L, Vertex u) {
  if (L.deg(u) != 1) return std::nullopt;
  Vertex v = L.graph().neighbours(u)[0];
  if (L.deg(v) > 4) return std::nullopt;
  Configuration c;
  c.kind = ConfigKind::c1;
  c.u = u;
  c.v = v;
  return c;
}

std::optional<Configuration> detect_c2(const Local& L, Vertex u) {
  if (L.deg(u) != 2) return std::nullopt;
  auto n = L.graph().neighbours(u);
  if (L.deg(n[0]) > 3 || L.deg(n[1]) > 3) return std::nullopt;
  Configuration c;
  c.kind = ConfigKind::c2;
  c.u = u;
  c.v = n[0];
  c.w = n[1];
  return c;
}

std::optional<Configuration> detect_c3(const Local& L, Vertex u) {
  if (L.deg(u) != 2) return std::nullopt;
  auto n = L.graph().neighbours(u);
  for (int i = 0; i < 2; ++i) {
    Vertex v = n[i], w = n[1 - i];
    if ((L.four_two(v) || L.four_three(v)) && L.deg(w) <= 3) {
      Configuration c;
      c.kind = ConfigKind::c3;
      c.u = u;
      c.v = v;
      c.w = w;
      return c;
    }
  }
  return std::nullopt;
}

std::optional<Configuration> detect_c4(const Local& L, Vertex u) {
  if (L.deg(u) != 2) return std::nullopt;
  auto n = L.graph().neighbours(u);
  for (int i = 0; i < 2; ++i) {
    Vertex v = n[i], w = n[1 - i];
    if (L.four_three(v) && L.four_two(w)) {
      Configuration c;
      c.kind = ConfigKind::c4;
      c.u = u;
      c.v = v;
      c.w = w;
      for (Vertex y : L.graph().neighbours(v))
        if (y != u && L.deg(y) == 2) c.spokes.push_back(y);
      return c;
    }
  }
  return std::nullopt;
}

std::optional<Configuration> detect_c5(const Local& L, Vertex u) {
  const auto k = L.deg(u);
  if (k < 4 || L.ones(u) + 3 < k || L.at_most_two(u) + 2 < k) return std::nullopt;
  Configuration c;
  c.kind = ConfigKind::c5;
  c.u = u;
  c.k = k;
  for (Vertex y : L.graph().neighbours(u))
    if (L.deg(y) == 1) {
      c.spokes.push_back(y);
      break;
    }
  return c;
}

std::optional<Configuration> detect_c6(const Local& L, Vertex u) {
  const auto k = L.deg(u);
  if (k < 4 || L.at_most_two(u) != k) return std::nullopt;
  Configuration c;
  c.kind = ConfigKind::c6;
  c.u = u;
  c.k = k;
  auto n = L.graph().neighbours(u);
  c.spokes.assign(n.begin(), n.end());
  return c;
}

std::optional<Configuration> detect_c7(const Local& L, Vertex u) {
  const auto k = L.deg(u);
  if (k < 5 || L.at_most_two(u) + 1 < k) return std::nullopt;
  const auto n = L.graph().neighbours(u);
  Vertex first = no_vertex;
  for (Vertex y : n)
    if (L.deg(y) == 1 || L.constrained(y, u)) {
      first = y;
      break;
    }
  if (first == no_vertex) return std::nullopt;

  Configuration c;
  c.kind = ConfigKind::c7;
  c.u = u;
  c.k = k;
  c.spokes.push_back(first);
  for (Vertex y : n)
    if (y != first && L.deg(y) <= 2 && c.spokes.size() < k - 1) c.spokes.push_back(y);
  for (Vertex y : n)
    if (std::find(c.spokes.begin(), c.spokes.end(), y) == c.spokes.end()) c.x = y;
  if (L.deg(first) == 1) {
    c.far_end = FarEnd::pendant;
  } else {
    Vertex far = L.other(first, u);
    c.far.push_back(far);
    c.far_end = L.deg(far) <= 3 ? FarEnd::small : FarEnd::four_three;
  }
  return c;
}

// C8 (alpha == 0 pattern) and C9 (alpha >= 1): a k-vertex with `alpha`
// 1-neighbours, at least k-2-alpha 2-neighbours of which k-3-alpha are
// constrained.
std::optional<Configuration> detect_spider(const Local& L, Vertex u, ConfigKind kind) {
  const auto k = L.deg(u);
  if (k < 5) return std::nullopt;
  std::size_t alpha = 0;
  if (kind == ConfigKind::c9) {
    alpha = L.ones(u);
    if (alpha < 1 || alpha + 4 > k) return std::nullopt;
  }
  const std::size_t m = k - 3 - alpha;
  if (L.twos(u) < m + 1) return std::nullopt;

  const auto n = L.graph().neighbours(u);
  std::vector<Vertex> chosen;
  for (Vertex y : n)
    if (chosen.size() < m && L.constrained(y, u)) chosen.push_back(y);
  if (chosen.size() < m) return std::nullopt;
  Vertex extra = no_vertex;
  for (Vertex y : n)
    if (L.deg(y) == 2 && std::find(chosen.begin(), chosen.end(), y) == chosen.end()) {
      extra = y;
      break;
    }

  // A 3⁻ far end, if any, goes last.
  auto small = std::find_if(chosen.begin(), chosen.end(),
                            [&](Vertex s) { return L.deg(L.other(s, u)) <= 3; });
  Configuration c;
  c.kind = kind;
  c.u = u;
  c.k = k;
  c.alpha = alpha;
  if (small != chosen.end()) {
    Vertex s = *small;
    chosen.erase(small);
    chosen.push_back(s);
    c.far_end = FarEnd::small;
  } else {
    c.far_end = FarEnd::four_three;
  }
  for (Vertex s : chosen) c.far.push_back(L.other(s, u));
  c.spokes = chosen;
  c.spokes.push_back(extra);
  if (kind == ConfigKind::c9)
    for (Vertex y : n)
      if (L.deg(y) == 1) c.pendants.push_back(y);
  if (c.far_end == FarEnd::four_three) {
    Vertex last_far = c.far.back();
    for (Vertex y : L.graph().neighbours(last_far))
      if (y != chosen.back() && L.deg(y) == 2) {
        c.relay = y;
        break;
      }
  }
  return c;
}

std::optional<Configuration> detect(const Local& L, ConfigKind kind, Vertex u) {
  switch (kind) {
    case ConfigKind::c1: return detect_c1(L, u);
    case ConfigKind::c2: return detect_c2(L, u);
    case ConfigKind::c3: return detect_c3(L, u);
    case ConfigKind::c4: return detect_c4(L, u);
    case ConfigKind::c5: return detect_c5(L, u);
    case ConfigKind::c6: return detect_c6(L, u);
    case ConfigKind::c7: return detect_c7(L, u);
    case ConfigKind::c8:
    case ConfigKind::c9: return detect_spider(L, u, kind);
  }
  return std::nullopt;
}

bool same_configuration(const Configuration& a, const Configuration& b) {
  return a.kind == b.kind && a.u == b.u && a.v == b.v && a.w == b.w && a.spokes == b.spokes &&
         a.far == b.far && a.pendants == b.pendants && a.x == b.x && a.relay == b.relay &&
         a.far_end == b.far_end && a.k == b.k && a.alpha == b.alpha;
}

}  // namespace

std::optional<Configuration> find_configuration(const Graph& g,
                                                const std::function<bool(Vertex)>& centre_filter) {
  Local L(g);
  for (int kind = 1; kind <= 9; ++kind)
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      if (centre_filter && !centre_filter(u)) continue;
      if (auto c = detect(L, static_cast<ConfigKind>(kind), u)) return c;
    }
  return std::nullopt;
}

std::optional<Configuration> match_at(const Graph& g, ConfigKind kind, Vertex u) {
  if (u >= g.vertex_count()) return std::nullopt;
  Local L(g);
  return detect(L, kind, u);
}

bool configuration_holds(const Graph& g, const Configuration& cfg) {
  if (cfg.u >= g.vertex_count()) return false;
  Local L(g);
  auto again = detect(L, cfg.kind, cfg.u);
  return again && same_configuration(*again, cfg);
}

ExtensionPlan plan_reduction(const Graph& g, const Configuration& cfg, std::size_t palette_delta) {
  if (!configuration_holds(g, cfg))
    throw PreconditionError(to_string(cfg.kind) + " configuration no longer holds");
  const long D = static_cast<long>(palette_delta);
  const long k = static_cast<long>(cfg.k);
  ExtensionPlan plan;
  auto step = [&](Vertex a, Vertex b, long guarantee, std::string bound) {
    plan.steps.push_back({make_edge(a, b), guarantee, std::move(bound)});
  };
  const Vertex u = cfg.u;

  switch (cfg.kind) {
    case ConfigKind::c1:
      plan.removed = {make_edge(u, cfg.v)};
      step(u, cfg.v, 1, "1");
      break;
    case ConfigKind::c2:
      plan.removed = {make_edge(u, cfg.v), make_edge(u, cfg.w)};
      step(u, cfg.v, D - 1, "D-1");
      // D-1 before uv is coloured; uv itself lies in N2(uw).
      step(u, cfg.w, D - 2, "D-2");
      break;
    case ConfigKind::c3:
      plan.removed = {make_edge(u, cfg.v), make_edge(u, cfg.w)};
      step(u, cfg.v, D - 3, "D-3");
      step(u, cfg.w, D - 3, "D-3");
      break;
    case ConfigKind::c4: {
      Vertex v1 = cfg.spokes[0], v2 = cfg.spokes[1];
      plan.removed = {make_edge(u, cfg.v), make_edge(u, cfg.w)};
      plan.uncoloured = {make_edge(cfg.v, v1), make_edge(cfg.v, v2)};
      step(u, cfg.v, 2 * D - 4, "2D-4");
      step(u, cfg.w, D - 3, "D-3");
      step(cfg.v, v1, D - 2, "D-2");
      step(cfg.v, v2, D - 3, "D-3");
      break;
    }
    case ConfigKind::c5:
      plan.removed = {make_edge(u, cfg.spokes[0])};
      step(u, cfg.spokes[0], D - k + 3, "D-k+3");
      break;
    case ConfigKind::c6:
      for (Vertex s : cfg.spokes) plan.removed.push_back(make_edge(u, s));
      for (Vertex s : cfg.spokes) step(u, s, 2 * D - 2 * k + 3, "2D-2k+3");
      break;
    case ConfigKind::c7: {
      Vertex u1 = cfg.spokes[0];
      if (cfg.far_end == FarEnd::pendant) {
        plan.removed = {make_edge(u, u1)};
        step(u, u1, 1, "1");
      } else {
        Vertex v1 = cfg.far[0];
        plan.removed = {make_edge(u, u1), make_edge(u1, v1)};
        if (cfg.far_end == FarEnd::small) {
          step(u, u1, 2 * D - 2 * k + 3, "2D-2k+3");
          step(u1, v1, D - k + 1, "D-k+1");
        } else {
          step(u, u1, 2 * D - 2 * k + 2, "2D-2k+2");
          step(u1, v1, 2 * D - k - 3, "2D-k-3");
        }
      }
      break;
    }
    case ConfigKind::c8:
    case ConfigKind::c9: {
      const std::size_t m = cfg.far.size();
      const long alpha = static_cast<long>(cfg.alpha);
      for (std::size_t i = 0; i < m; ++i) {
        plan.removed.push_back(make_edge(u, cfg.spokes[i]));
        plan.removed.push_back(make_edge(cfg.spokes[i], cfg.far[i]));
      }
      // D-4-alpha free before any spoke is coloured, one fewer per spoke
      // already coloured.
      for (std::size_t i = 0; i + 1 < m; ++i)
        step(u, cfg.spokes[i], D - 4 - alpha - static_cast<long>(i), "D-a-3-i");
      step(u, cfg.spokes[m - 1], 1, "1");
      if (cfg.far_end == FarEnd::four_three) {
        plan.uncoloured = {make_edge(cfg.relay, cfg.far[m - 1])};
        step(cfg.relay, cfg.far[m - 1], 1, "1");
      }
      step(cfg.spokes[m - 1], cfg.far[m - 1], 1, "1");
      for (std::size_t i = 0; i + 1 < m; ++i) step(cfg.spokes[i], cfg.far[i], 1, "1");
      break;
    }
  }
  return plan;
}

std::vector<StepAudit> extend(PartialColouring& c, const Graph& current, const ExtensionPlan& plan) {
  for (Edge e : plan.uncoloured) c.clear(e);
  std::vector<StepAudit> audit;
  audit.reserve(plan.steps.size());
  for (const PlanStep& s : plan.steps) {
    auto free = free_colours(current, c, s.edge);
    if (free.empty())
      throw ExtensionInfeasible("no free colour for " + edge_key(current, s.edge));
    c.assign(s.edge, free.front());
    audit.push_back({s.edge, s.guarantee, static_cast<long>(free.size()), s.bound, free.front()});
  }
  return audit;
}

std::size_t Girth6Result::audit_failures() const {
  std::size_t n = 0;
  for (const auto& r : trace)
    for (const auto& s : r.steps)
      if (!s.ok()) ++n;
  return n;
}

std::size_t Girth6Result::steps() const {
  std::size_t n = 0;
  for (const auto& r : trace) n += r.steps.size();
  return n;
}

namespace {

// Lowest-free-colour greedy over the uncoloured edges of `within`, in
// edge order. With current Δ <= 3 every N2 has at most 12 edges.
std::vector<StepAudit> greedy_finish(PartialColouring& c, const Graph& within) {
  const long d = static_cast<long>(within.max_degree());
  const long guarantee = static_cast<long>(c.palette().size) - 2 * d * std::max(d - 1, 0L);
  std::vector<StepAudit> audit;
  for (Edge e : within.edges()) {
    if (c.is_coloured(e)) continue;
    auto free = free_colours(within, c, e);
    if (free.empty()) throw ExtensionInfeasible("greedy base found no colour for " + edge_key(within, e));
    c.assign(e, free.front());
    audit.push_back({e, guarantee, static_cast<long>(free.size()), "P-2d(d-1)", free.front()});
  }
  return audit;
}

void reduce_component(const Graph& comp, std::size_t component, std::size_t palette_delta,
                      PartialColouring& c, std::vector<ReductionRecord>& trace) {
  struct Pending {
    Configuration config;
    ExtensionPlan plan;
    std::size_t current_delta;
  };
  std::vector<Pending> stack;
  Graph current = comp;
  while (current.edge_count() > 0 && current.max_degree() >= 4) {
    auto cfg = find_configuration(current);
    if (!cfg)
      throw TheoremViolation("no reducible configuration in a planar girth>=6 graph with " +
                             std::to_string(current.edge_count()) + " edges and maximum degree " +
                             std::to_string(current.max_degree()));
    auto plan = plan_reduction(current, *cfg, palette_delta);
    const auto delta_now = current.max_degree();
    current = current.without_edges(plan.removed);
    stack.push_back({std::move(*cfg), std::move(plan), delta_now});
  }

  ReductionRecord base;
  base.depth = stack.size();
  base.component = component;
  base.current_delta = current.max_degree();
  base.steps = greedy_finish(c, current);
  trace.push_back(std::move(base));

  while (!stack.empty()) {
    Pending p = std::move(stack.back());
    stack.pop_back();
    current = current.plus_edges(p.plan.removed);
    ReductionRecord r;
    r.depth = stack.size();
    r.component = component;
    r.current_delta = p.current_delta;
    r.steps = extend(c, current, p.plan);
    r.config = std::move(p.config);
    trace.push_back(std::move(r));
  }
}

}  // namespace

Girth6Result colour_girth6(const Graph& g, const Budget& small_budget) {
  if (!is_planar(g)) throw PreconditionError("not planar");
  if (!girth_at_least(girth(g), 6)) throw PreconditionError("girth is below 6");

  const std::size_t delta = g.max_degree();
  const auto components = edge_components(g);

  if (delta <= 3) {
    // Outside the reduction argument; solve each component exactly.
    std::vector<std::pair<std::vector<std::uint32_t>, std::vector<Colour>>> parts;
    Colour palette = 1;
    std::string method = "exact";
    for (const auto& comp : components) {
      std::vector<Edge> edges;
      for (auto i : comp) edges.push_back(g.edge(i));
      Graph sub = g.with_edges(edges);
      std::vector<Colour> colours(sub.edge_count());
      try {
        auto r = strong_chromatic_index(sub, small_budget);
        for (std::size_t i = 0; i < sub.edge_count(); ++i) colours[i] = r.witness.at(i);
        palette = std::max<Colour>(palette, static_cast<Colour>(r.chi_s));
      } catch (const BudgetExhausted&) {
        method = "exact+greedy";
        PartialColouring tmp(sub, Palette(3 * 3 + 4), PartialColouring::Mode::unchecked);
        greedy_finish(tmp, sub);
        for (std::size_t i = 0; i < sub.edge_count(); ++i) colours[i] = tmp.at(i);
        palette = std::max<Colour>(palette, *std::max_element(colours.begin(), colours.end()));
      }
      std::vector<std::uint32_t> idx;
      for (Edge e : sub.edges()) idx.push_back(static_cast<std::uint32_t>(*g.edge_index(e)));
      parts.emplace_back(std::move(idx), std::move(colours));
    }
    Girth6Result result{PartialColouring(g, Palette(palette), PartialColouring::Mode::unchecked),
                        delta, palette, method, {}};
    for (const auto& [idx, colours] : parts)
      for (std::size_t i = 0; i < idx.size(); ++i) result.colouring.assign_at(idx[i], colours[i]);
    return result;
  }

  const auto palette = static_cast<Colour>(3 * delta + 1);
  Girth6Result result{PartialColouring(g, Palette(palette), PartialColouring::Mode::unchecked),
                      delta, palette, "reduction", {}};
  for (std::size_t ci = 0; ci < components.size(); ++ci) {
    std::vector<Edge> edges;
    for (auto i : components[ci]) edges.push_back(g.edge(i));
    reduce_component(g.with_edges(edges), ci, delta, result.colouring, result.trace);
  }
  return result;
}

}  // namespace strongedge
