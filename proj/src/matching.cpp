#include "strongedge/matching.hpp"

#include <algorithm>
#include <array>
#include <exception>
#include <numeric>

#include "strongedge/detail/dsatur.hpp"
#include "strongedge/embedding.hpp"
#include "strongedge/errors.hpp"

namespace strongedge {

namespace {

constexpr std::uint32_t no_class = std::numeric_limits<std::uint32_t>::max();

// at[v][c]: neighbour reached from v along the edge of class c.
class ClassTable {
 public:
  ClassTable(const Graph& g, std::size_t colours)
      : g_(g), colours_(colours), at_(g.vertex_count() * colours, no_vertex), class_of_(g.edge_count(), no_class) {}

  Vertex at(Vertex v, std::uint32_t c) const { return at_[v * colours_ + c]; }
  bool free(Vertex v, std::uint32_t c) const { return at(v, c) == no_vertex; }
  std::uint32_t of(Vertex a, Vertex b) const { return class_of_[*g_.edge_index(make_edge(a, b))]; }

  void set(Vertex a, Vertex b, std::uint32_t c) {
    class_of_[*g_.edge_index(make_edge(a, b))] = c;
    at_[a * colours_ + c] = b;
    at_[b * colours_ + c] = a;
  }
  void unset(Vertex a, Vertex b) {
    auto& slot = class_of_[*g_.edge_index(make_edge(a, b))];
    at_[a * colours_ + slot] = no_vertex;
    at_[b * colours_ + slot] = no_vertex;
    slot = no_class;
  }
  std::uint32_t lowest_free(Vertex v) const {
    std::uint32_t c = 0;
    while (!free(v, c)) ++c;
    return c;
  }

  // Swaps c and d along the maximal path leaving v on a d-edge.
  void invert(Vertex v, std::uint32_t c, std::uint32_t d) {
    std::vector<std::pair<Vertex, Vertex>> path;
    std::uint32_t want = d;
    for (Vertex x = v, y; (y = at(x, want)) != no_vertex; x = y) {
      path.emplace_back(x, y);
      want = want == d ? c : d;
      if (path.size() > g_.edge_count()) throw InternalInconsistency("alternating path does not terminate");
    }
    std::vector<std::uint32_t> old;
    for (auto [a, b] : path) old.push_back(of(a, b));
    for (auto [a, b] : path) unset(a, b);
    for (std::size_t i = 0; i < path.size(); ++i) set(path[i].first, path[i].second, old[i] == c ? d : c);
  }

  EdgeColouring finish() const {
    // Compact to dense class ids in order of first use by edge index.
    std::vector<std::uint32_t> remap(colours_, no_class);
    EdgeColouring ec;
    ec.class_of.resize(class_of_.size());
    for (std::size_t e = 0; e < class_of_.size(); ++e) {
      auto c = class_of_[e];
      if (c == no_class) throw InternalInconsistency("edge left without a class");
      if (remap[c] == no_class) remap[c] = static_cast<std::uint32_t>(ec.class_count++);
      ec.class_of[e] = remap[c];
    }
    return ec;
  }

 private:
  const Graph& g_;
  std::size_t colours_;
  std::vector<Vertex> at_;
  std::vector<std::uint32_t> class_of_;
};

ConflictLists line_graph_lists(const Graph& g) {
  ConflictLists out;
  out.offsets.assign(g.edge_count() + 1, 0);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    std::vector<std::uint32_t> row;
    for (auto f : g.incident(u)) if (f != e) row.push_back(f);
    for (auto f : g.incident(v)) if (f != e) row.push_back(f);
    std::sort(row.begin(), row.end());
    out.targets.insert(out.targets.end(), row.begin(), row.end());
    out.offsets[e + 1] = out.targets.size();
  }
  return out;
}

EdgeColouring konig(const Graph& g) {
  const std::size_t delta = g.max_degree();
  ClassTable t(g, delta);
  for (auto [u, v] : g.edges()) {
    const auto a = t.lowest_free(u);
    const auto b = t.lowest_free(v);
    if (!t.free(v, a)) t.invert(v, b, a);  // the a/b path from v cannot reach u
    t.set(u, v, a);
  }
  return t.finish();
}

}  // namespace

std::vector<std::vector<std::uint32_t>> EdgeColouring::classes() const {
  std::vector<std::vector<std::uint32_t>> out(class_count);
  for (std::size_t e = 0; e < class_of.size(); ++e) out[class_of[e]].push_back(static_cast<std::uint32_t>(e));
  return out;
}

bool is_proper(const Graph& g, const EdgeColouring& ec) {
  if (ec.class_of.size() != g.edge_count()) return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::vector<std::uint32_t> seen;
    for (auto e : g.incident(v)) {
      if (ec.class_of[e] >= ec.class_count) return false;
      seen.push_back(ec.class_of[e]);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  }
  return true;
}

EdgeColouring vizing_edge_colour(const Graph& g) {
  // Bipartite: alternating paths always reach delta classes.
  if (is_bipartite(g)) return konig(g);
  const std::size_t delta = g.max_degree();
  ClassTable t(g, delta + 1);
  std::vector<char> in_fan(g.vertex_count(), 0);

  for (auto [x, y] : g.edges()) {
    const Vertex u = x;
    std::vector<Vertex> fan{y};
    in_fan[y] = 1;
    for (bool grew = true; grew;) {
      grew = false;
      for (Vertex w : g.neighbours(u)) {
        if (in_fan[w]) continue;
        const auto c = t.of(u, w);
        if (c != no_class && t.free(fan.back(), c)) {
          fan.push_back(w);
          in_fan[w] = 1;
          grew = true;
          break;
        }
      }
    }
    for (Vertex w : fan) in_fan[w] = 0;

    const auto c = t.lowest_free(u);
    const auto d = t.lowest_free(fan.back());
    if (c != d) t.invert(u, c, d);

    // Longest prefix that is still a fan, and on it the first vertex with d free.
    std::size_t pick = fan.size();
    for (std::size_t i = 0; i < fan.size(); ++i) {
      if (i > 0) {
        const auto ci = t.of(u, fan[i]);
        if (ci == no_class || !t.free(fan[i - 1], ci)) break;
      }
      if (t.free(fan[i], d)) {
        pick = i;
        break;
      }
    }
    if (pick == fan.size()) throw InternalInconsistency("fan rotation found no target");

    for (std::size_t j = 0; j < pick; ++j) {
      const auto next = t.of(u, fan[j + 1]);
      t.unset(u, fan[j + 1]);
      t.set(u, fan[j], next);
    }
    t.set(u, fan[pick], d);
  }
  return t.finish();
}

std::optional<EdgeColouring> class1_edge_colour(const Graph& g, const Budget& budget) {
  const std::size_t delta = g.max_degree();
  if (g.edge_count() == 0) return EdgeColouring{};
  if (is_bipartite(g)) return konig(g);

  auto ec = vizing_edge_colour(g);
  if (ec.class_count == delta) return ec;

  BudgetClock clock(budget);
  std::vector<Colour> colours;
  if (detail::k_colour(line_graph_lists(g), static_cast<Colour>(delta), clock, colours) !=
      detail::SearchStatus::found)
    return std::nullopt;
  ec.class_count = delta;
  for (std::size_t e = 0; e < colours.size(); ++e) ec.class_of[e] = colours[e] - 1;
  return ec;
}

bool corollary1_applies(std::size_t delta, Girth g) {
  return delta >= 7 || (delta >= 5 && girth_at_least(g, 4)) || girth_at_least(g, 5);
}

ConflictGraph conflict_graph(const Graph& g, std::span<const std::uint32_t> matching) {
  std::vector<std::uint32_t> node_at(g.vertex_count(), no_class);
  for (std::uint32_t i = 0; i < matching.size(); ++i) {
    if (matching[i] >= g.edge_count()) throw PreconditionError("matching refers to a missing edge");
    for (Vertex x : {g.edge(matching[i]).u, g.edge(matching[i]).v}) {
      if (node_at[x] != no_class) throw PreconditionError("edge set is not a matching");
      node_at[x] = i;
    }
  }
  std::vector<Edge> links;
  for (std::uint32_t i = 0; i < matching.size(); ++i) {
    for (Vertex x : {g.edge(matching[i]).u, g.edge(matching[i]).v})
      for (Vertex y : g.neighbours(x)) {
        const auto j = node_at[y];
        if (j != no_class && j != i) links.push_back(make_edge(i, j));
      }
  }
  return ConflictGraph{{matching.begin(), matching.end()}, Graph::from_edges(matching.size(), links)};
}

NodeColouring five_colour(const Graph& g) {
  const std::size_t n = g.vertex_count();
  NodeColouring out{std::vector<Colour>(n, uncoloured), 0, "five-colour"};

  // Elimination order: repeatedly drop a vertex of minimum remaining degree.
  std::vector<std::size_t> deg(n);
  std::vector<char> gone(n, 0);
  std::vector<Vertex> order;
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = no_vertex;
    for (Vertex v = 0; v < n; ++v)
      if (!gone[v] && (best == no_vertex || deg[v] < deg[best])) best = v;
    gone[best] = 1;
    order.push_back(best);
    for (Vertex w : g.neighbours(best)) if (!gone[w]) --deg[w];
  }

  auto& col = out.colour;
  // Kempe chain from s over coloured vertices with colours a, b.
  auto chain = [&](Vertex s, Colour a, Colour b) {
    std::vector<Vertex> seen{s}, stack{s};
    std::vector<char> mark(n, 0);
    mark[s] = 1;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbours(x))
        if (!mark[y] && (col[y] == a || col[y] == b)) {
          mark[y] = 1;
          seen.push_back(y);
          stack.push_back(y);
        }
    }
    return std::pair{seen, mark};
  };

  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    std::vector<Vertex> around;
    std::array<bool, 7> used{};
    for (Vertex w : g.neighbours(v))
      if (col[w] != uncoloured) {
        around.push_back(w);
        if (col[w] <= 5) used[col[w]] = true;
      }
    Colour pick = uncoloured;
    for (Colour c = 1; c <= 5 && !pick; ++c) if (!used[c]) pick = c;
    for (std::size_t i = 0; i < around.size() && !pick; ++i)
      for (std::size_t j = i + 1; j < around.size() && !pick; ++j) {
        const Colour a = col[around[i]], b = col[around[j]];
        if (a == b) continue;
        auto [members, mark] = chain(around[i], a, b);
        if (mark[around[j]]) continue;
        for (Vertex x : members) col[x] = col[x] == a ? b : a;
        // a may still sit on another neighbour of v
        bool clear = true;
        for (Vertex w : around) clear = clear && col[w] != a;
        if (clear) pick = a;
      }
    if (!pick) throw InternalInconsistency("five-colour repair failed; graph is not planar");
    col[v] = pick;
    out.count = std::max(out.count, pick);
  }
  return out;
}

NodeColouring colour_planar_nodes(const Graph& cg, const Budget& budget) {
  if (!is_planar(cg)) throw PreconditionError("conflict graph is not planar");
  if (cg.vertex_count() == 0) return NodeColouring{{}, 0, "exact"};

  const auto adj = detail::adjacency_lists(cg);
  NodeColouring best{detail::greedy_dsatur(adj), 0, "greedy"};
  best.count = *std::max_element(best.colour.begin(), best.colour.end());
  const Colour lower = cg.edge_count() == 0 ? 1 : 2;

  // Downward from min(greedy - 1, 4): every success is a new best; the
  // first failure ends the search. "exact" marks a proven minimum.
  for (Colour k = std::min<Colour>(best.count - 1, 4); k >= lower; --k) {
    BudgetClock clock(budget);
    std::vector<Colour> found;
    const auto status = detail::k_colour(adj, k, clock, found);
    if (status == detail::SearchStatus::unsat && k + 1 == best.count) best.method = "exact";
    if (status != detail::SearchStatus::found) break;
    best = NodeColouring{std::move(found), 0, "search"};
    best.count = *std::max_element(best.colour.begin(), best.colour.end());
    k = best.count;
  }
  if (best.count == lower) best.method = "exact";
  if (best.count > 4) {
    auto fallback = five_colour(cg);
    if (fallback.count < best.count) best = std::move(fallback);
  }
  return best;
}

PartialColouring compose(const Graph& g, const EdgeColouring& ec, const std::vector<NodeColouring>& per_class) {
  if (per_class.size() != ec.class_count) throw PreconditionError("need one node colouring per class");
  const auto classes = ec.classes();
  Colour max_c = 0;
  for (const auto& nc : per_class) max_c = std::max(max_c, nc.count);

  PartialColouring out(g, Palette(std::max<Colour>(1, static_cast<Colour>(ec.class_count) * max_c)),
                       PartialColouring::Mode::unchecked);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto cg = conflict_graph(g, classes[i]);
    const auto& nc = per_class[i];
    if (nc.colour.size() != classes[i].size()) throw PreconditionError("node colouring size mismatch");
    for (Colour c : nc.colour)
      if (c == uncoloured || c > nc.count) throw PreconditionError("node colour out of range");
    for (auto [a, b] : cg.graph.edges())
      if (nc.colour[a] == nc.colour[b]) throw PreconditionError("node colouring is not proper");
    for (std::size_t j = 0; j < classes[i].size(); ++j)
      out.assign_at(classes[i][j], static_cast<Colour>(i) * max_c + nc.colour[j]);
  }
  return out;
}

PipelineResult colour_pipeline(const Graph& g, const Budget& budget) {
  if (!is_planar(g)) throw PreconditionError("not planar");
  const std::size_t delta = g.max_degree();
  const bool applies = corollary1_applies(delta, girth(g));

  std::optional<EdgeColouring> ec;
  if (applies) ec = class1_edge_colour(g, budget);
  const bool class1 = ec.has_value();
  if (!ec) ec = vizing_edge_colour(g);
  if (!is_proper(g, *ec)) throw InternalInconsistency("edge colouring is not proper");

  const auto classes = ec->classes();
  std::vector<NodeColouring> per_class(classes.size());
  std::vector<std::exception_ptr> errors(classes.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < classes.size(); ++i) {
    try {
      auto cg = conflict_graph(g, classes[i]);
      if (!is_planar(cg.graph)) throw InternalInconsistency("conflict graph of a planar host is not planar");
      per_class[i] = colour_planar_nodes(cg.graph, budget);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors) if (e) std::rethrow_exception(e);

  PipelineResult r{compose(g, *ec, per_class), *ec, per_class};
  r.corollary_applies = applies;
  r.regime = class1 ? "class1" : "vizing";
  r.class_count = ec->class_count;
  for (const auto& nc : per_class) r.max_c = std::max<std::size_t>(r.max_c, nc.count);
  if (r.max_c <= 4) {
    r.bound_claimed = 4 * (class1 ? delta : delta + 1);
    r.bound_name = class1 ? "4*delta" : "4*(delta+1)";
  } else {
    r.bound_claimed = 5 * r.class_count;
    r.bound_name = "5*classCount";
  }
  r.colours_used = r.colouring.colours_used();
  return r;
}

}  // namespace strongedge
