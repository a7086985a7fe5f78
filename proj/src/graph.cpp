#include "strongedge/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <queue>
#include <sstream>

#include "strongedge/errors.hpp"

namespace strongedge {

Edge make_edge(Vertex a, Vertex b) {
  if (a == b) throw PreconditionError("loop edge at vertex " + std::to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g;
  g.labels_.resize(n);
  for (std::size_t i = 0; i < n; ++i) g.labels_[i] = static_cast<Label>(i);
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (Edge e : edges) {
    if (e.u >= n || e.v >= n) throw PreconditionError("edge endpoint out of range");
    list.push_back(make_edge(e.u, e.v));
  }
  g.adjacency_.resize(n);
  g.incident_.resize(n);
  g.build(std::move(list));
  return g;
}

Graph Graph::from_labelled(std::vector<Label> vertices,
                           std::span<const std::pair<Label, Label>> edges) {
  for (auto [a, b] : edges) {
    vertices.push_back(a);
    vertices.push_back(b);
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());

  Graph g;
  g.labels_ = std::move(vertices);
  g.adjacency_.resize(g.labels_.size());
  g.incident_.resize(g.labels_.size());
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a == b) throw PreconditionError("loop edge at vertex " + std::to_string(a));
    list.push_back(make_edge(*g.vertex_of(a), *g.vertex_of(b)));
  }
  g.build(std::move(list));
  return g;
}

void Graph::build(std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  for (auto& a : adjacency_) a.clear();
  for (auto& a : incident_) a.clear();
  // Edges are sorted, so for each vertex the lower neighbours arrive in
  // order before the higher ones; a final sort keeps it simple.
  for (std::uint32_t i = 0; i < edges_.size(); ++i) {
    adjacency_[edges_[i].u].push_back(edges_[i].v);
    adjacency_[edges_[i].v].push_back(edges_[i].u);
  }
  max_degree_ = 0;
  for (Vertex v = 0; v < adjacency_.size(); ++v) {
    auto& adj = adjacency_[v];
    std::sort(adj.begin(), adj.end());
    incident_[v].resize(adj.size());
    for (std::size_t j = 0; j < adj.size(); ++j)
      incident_[v][j] = static_cast<std::uint32_t>(*edge_index(make_edge(v, adj[j])));
    max_degree_ = std::max(max_degree_, adj.size());
  }
}

std::optional<std::size_t> Graph::edge_index(Edge e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a == b || a >= adjacency_.size() || b >= adjacency_.size()) return false;
  return std::binary_search(adjacency_[a].begin(), adjacency_[a].end(), b);
}

std::optional<Vertex> Graph::vertex_of(Label l) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
  if (it == labels_.end() || *it != l) return std::nullopt;
  return static_cast<Vertex>(it - labels_.begin());
}

Graph Graph::with_edges(std::span<const Edge> edges) const {
  Graph g;
  g.labels_ = labels_;
  g.adjacency_.resize(labels_.size());
  g.incident_.resize(labels_.size());
  g.build(std::vector<Edge>(edges.begin(), edges.end()));
  return g;
}

Graph Graph::without_edges(std::span<const Edge> removed) const {
  std::vector<Edge> drop(removed.begin(), removed.end());
  std::sort(drop.begin(), drop.end());
  std::vector<Edge> keep;
  keep.reserve(edges_.size());
  std::set_difference(edges_.begin(), edges_.end(), drop.begin(), drop.end(),
                      std::back_inserter(keep));
  return with_edges(keep);
}

Graph Graph::plus_edges(std::span<const Edge> added) const {
  std::vector<Edge> all(edges_);
  all.insert(all.end(), added.begin(), added.end());
  return with_edges(all);
}

namespace {

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::vector<Label> isolated;
  std::vector<std::pair<Label, Label>> edges;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    std::vector<Label> values;
    while (!line.empty()) {
      auto end = line.find_first_of(" \t");
      auto token = line.substr(0, end);
      Label value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0)
        throw ParseError(line_no, "expected a nonnegative integer, got '" + std::string(token) + "'");
      values.push_back(value);
      line = end == std::string_view::npos ? std::string_view{} : trim(line.substr(end));
    }
    if (values.size() == 1) {
      isolated.push_back(values[0]);
    } else if (values.size() == 2) {
      if (values[0] == values[1])
        throw ParseError(line_no, "loop edge " + std::to_string(values[0]) + " " + std::to_string(values[1]));
      edges.emplace_back(values[0], values[1]);
    } else {
      throw ParseError(line_no, "expected 'u v'");
    }
  }
  return Graph::from_labelled(std::move(isolated), edges);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0) out << g.label(v) << '\n';
  for (Edge e : g.edges()) out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
  return out.str();
}

Girth girth(const Graph& g) {
  const auto n = g.vertex_count();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(n);
  std::vector<Vertex> parent(n);
  std::vector<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), std::numeric_limits<std::size_t>::max());
    dist[root] = 0;
    parent[root] = no_vertex;
    queue.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex x = queue[head];
      if (2 * dist[x] + 1 >= best) break;
      for (Vertex y : g.neighbours(x)) {
        if (dist[y] == std::numeric_limits<std::size_t>::max()) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (parent[x] != y) {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return best;
}

std::string to_string(Girth g) { return g ? std::to_string(*g) : std::string("acyclic"); }

VertexClass classify_vertex(const Graph& g, Vertex v) {
  if (v >= g.vertex_count()) throw PreconditionError("unknown vertex " + std::to_string(v));
  VertexClass c;
  c.degree = g.degree(v);
  for (Vertex w : g.neighbours(v))
    if (g.degree(w) == 2) ++c.two_neighbours;
  c.bad_two = c.degree == 2 && c.two_neighbours > 0;
  return c;
}

VertexClass classify_label(const Graph& g, Label v) {
  auto idx = g.vertex_of(v);
  if (!idx) throw PreconditionError("unknown vertex " + std::to_string(v));
  return classify_vertex(g, *idx);
}

std::vector<std::uint32_t> n2_indices(const Graph& g, std::size_t edge_index, bool closed) {
  const Edge e = g.edge(edge_index);
  std::vector<std::uint32_t> out;
  for (Vertex end : {e.u, e.v})
    for (Vertex x : g.neighbours(end))
      for (std::uint32_t f : g.incident(x)) out.push_back(f);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (!closed) out.erase(std::lower_bound(out.begin(), out.end(), static_cast<std::uint32_t>(edge_index)));
  return out;
}

std::vector<Edge> n2_edges(const Graph& g, Edge e, bool closed) {
  auto idx = g.edge_index(e);
  if (!idx) throw PreconditionError("edge not in graph");
  std::vector<Edge> out;
  for (auto f : n2_indices(g, *idx, closed)) out.push_back(g.edge(f));
  return out;
}

namespace {

std::vector<std::uint32_t> vertex_components(const Graph& g, std::size_t& count) {
  std::vector<std::uint32_t> comp(g.vertex_count(), std::numeric_limits<std::uint32_t>::max());
  count = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (comp[s] != std::numeric_limits<std::uint32_t>::max()) continue;
    comp[s] = static_cast<std::uint32_t>(count);
    stack.assign(1, s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbours(x))
        if (comp[y] == std::numeric_limits<std::uint32_t>::max()) {
          comp[y] = static_cast<std::uint32_t>(count);
          stack.push_back(y);
        }
    }
    ++count;
  }
  return comp;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> edge_components(const Graph& g) {
  std::size_t count = 0;
  auto comp = vertex_components(g, count);
  std::vector<std::vector<std::uint32_t>> by_comp(count);
  for (std::uint32_t i = 0; i < g.edge_count(); ++i) by_comp[comp[g.edge(i).u]].push_back(i);
  std::vector<std::vector<std::uint32_t>> out;
  for (auto& c : by_comp)
    if (!c.empty()) out.push_back(std::move(c));
  return out;
}

bool is_connected(const Graph& g) {
  std::size_t count = 0;
  vertex_components(g, count);
  return count <= 1;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.vertex_count(), -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    stack.assign(1, s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbours(x)) {
        if (side[y] < 0) {
          side[y] = 1 - side[x];
          stack.push_back(y);
        } else if (side[y] == side[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::string edge_key(const Graph& g, Edge e) {
  return std::to_string(g.label(e.u)) + "-" + std::to_string(g.label(e.v));
}

}  // namespace strongedge
