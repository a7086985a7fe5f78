#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace strongedge {

// Dense internal vertex index. Labels (the ids seen in files) are kept
// sorted, so index order and label order agree.
using Vertex = std::uint32_t;
using Label = std::int64_t;

inline constexpr Vertex no_vertex = std::numeric_limits<Vertex>::max();

// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

Edge make_edge(Vertex a, Vertex b);

// Shares an endpoint.
inline bool adjacent(Edge a, Edge b) {
  return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
}

// Simple undirected graph, immutable after construction.
class Graph {
 public:
  Graph() = default;

  // Vertices 0..n-1 labelled by their index. Duplicate edges are merged;
  // loops and out-of-range endpoints throw PreconditionError.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  // Vertex set is `vertices` plus every endpoint; labels need not be dense.
  static Graph from_labelled(std::vector<Label> vertices,
                             std::span<const std::pair<Label, Label>> edges);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const Vertex> neighbours(Vertex v) const { return adjacency_[v]; }
  // Edge indices parallel to neighbours(v).
  std::span<const std::uint32_t> incident(Vertex v) const { return incident_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  std::size_t max_degree() const { return max_degree_; }

  std::span<const Edge> edges() const { return edges_; }
  Edge edge(std::size_t index) const { return edges_[index]; }
  std::optional<std::size_t> edge_index(Edge e) const;
  bool has_edge(Vertex a, Vertex b) const;

  Label label(Vertex v) const { return labels_[v]; }
  std::span<const Label> labels() const { return labels_; }
  std::optional<Vertex> vertex_of(Label l) const;

  // Same vertex set (and labels), different edge set.
  Graph with_edges(std::span<const Edge> edges) const;
  Graph without_edges(std::span<const Edge> removed) const;
  Graph plus_edges(std::span<const Edge> added) const;

 private:
  void build(std::vector<Edge> edges);

  std::vector<Label> labels_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::vector<std::uint32_t>> incident_;
  std::vector<Edge> edges_;
  std::size_t max_degree_ = 0;
};

// Parses the edge-list format: one "u v" pair per line, '#' starts a
// comment, a line with a single id declares an isolated vertex.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);
std::string format_edge_list(const Graph& g);

// Length of a shortest cycle; nullopt for forests.
using Girth = std::optional<std::size_t>;
Girth girth(const Graph& g);
// True when the girth is at least n (forests qualify for every n).
inline bool girth_at_least(Girth g, std::size_t n) { return !g || *g >= n; }
std::string to_string(Girth g);

struct VertexClass {
  std::size_t degree = 0;
  std::size_t two_neighbours = 0;  // l in "k_l-vertex"
  bool bad_two = false;            // 2-vertex next to another 2-vertex

  bool is(std::size_t k, std::size_t l) const { return degree == k && two_neighbours == l; }
  bool at_least(std::size_t k) const { return degree >= k; }
  bool at_most(std::size_t k) const { return degree <= k; }
};

VertexClass classify_vertex(const Graph& g, Vertex v);
VertexClass classify_label(const Graph& g, Label v);

// Edges at distance at most 2 from e: every edge incident to N(u) ∪ N(v).
// Sorted by edge index; `closed` keeps e itself.
std::vector<std::uint32_t> n2_indices(const Graph& g, std::size_t edge_index, bool closed);
std::vector<Edge> n2_edges(const Graph& g, Edge e, bool closed);

// Connected components as sorted edge-index lists; isolated vertices are
// not reported.
std::vector<std::vector<std::uint32_t>> edge_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

// "u-v" using labels.
std::string edge_key(const Graph& g, Edge e);

}  // namespace strongedge
