#include "strongedge/embedding.hpp"

#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>

#include "strongedge/errors.hpp"

namespace strongedge {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

std::vector<std::uint32_t> components_of(const Graph& g, std::size_t& count) {
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

Embedding::Embedding(Graph g, std::vector<std::vector<Vertex>> rotation)
    : graph_(std::move(g)), rotation_(std::move(rotation)) {
  if (rotation_.size() != graph_.vertex_count())
    throw PreconditionError("rotation system does not match graph");
  for (Vertex v = 0; v < graph_.vertex_count(); ++v) {
    auto sorted = rotation_[v];
    std::sort(sorted.begin(), sorted.end());
    if (!std::equal(sorted.begin(), sorted.end(), graph_.neighbours(v).begin(),
                    graph_.neighbours(v).end()))
      throw PreconditionError("rotation at a vertex is not a permutation of its neighbours");
  }

  std::vector<std::uint32_t> comp = components_of(graph_, component_count_);
  constexpr std::size_t unset = std::numeric_limits<std::size_t>::max();
  dart_face_.resize(rotation_.size());
  for (Vertex v = 0; v < rotation_.size(); ++v) dart_face_[v].assign(rotation_[v].size(), unset);

  auto position = [&](Vertex at, Vertex nbr) {
    const auto& rot = rotation_[at];
    return static_cast<std::size_t>(std::find(rot.begin(), rot.end(), nbr) - rot.begin());
  };

  // Dart (u -> v) is followed by (v -> w), w the successor of u around v.
  for (Vertex u = 0; u < rotation_.size(); ++u) {
    for (std::size_t i = 0; i < rotation_[u].size(); ++i) {
      if (dart_face_[u][i] != unset) continue;
      Face face;
      face.component = comp[u];
      Vertex a = u;
      std::size_t ai = i;
      while (dart_face_[a][ai] == unset) {
        dart_face_[a][ai] = faces_.size();
        face.walk.push_back(a);
        Vertex b = rotation_[a][ai];
        std::size_t back = position(b, a);
        std::size_t next = (back + 1) % rotation_[b].size();
        a = b;
        ai = next;
      }
      faces_.push_back(std::move(face));
    }
  }
  // An isolated vertex is its own component with a single empty face.
  for (Vertex v = 0; v < rotation_.size(); ++v)
    if (rotation_[v].empty()) faces_.push_back(Face{{}, comp[v]});
}

std::size_t Embedding::face_of_dart(Vertex u, Vertex v) const {
  const auto& rot = rotation_[u];
  auto it = std::find(rot.begin(), rot.end(), v);
  if (it == rot.end()) throw PreconditionError("no such dart");
  return dart_face_[u][static_cast<std::size_t>(it - rot.begin())];
}

std::variant<Embedding, NonPlanar> planar_embed(const Graph& g) {
  const auto n = g.vertex_count();
  BoostGraph bg(n);
  for (Edge e : g.edges()) boost::add_edge(e.u, e.v, bg);
  int idx = 0;
  boost::graph_traits<BoostGraph>::edge_iterator ei, ee;
  for (boost::tie(ei, ee) = boost::edges(bg); ei != ee; ++ei) boost::put(boost::edge_index, bg, *ei, idx++);

  using EmbeddingStorage = std::vector<std::vector<BoostEdge>>;
  EmbeddingStorage storage(n);
  std::vector<BoostEdge> kuratowski;
  bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding = boost::make_iterator_property_map(
          storage.begin(), boost::get(boost::vertex_index, bg)),
      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));
  if (!planar) {
    NonPlanar np;
    for (const auto& be : kuratowski)
      np.witness.push_back(make_edge(static_cast<Vertex>(boost::source(be, bg)),
                                     static_cast<Vertex>(boost::target(be, bg))));
    std::sort(np.witness.begin(), np.witness.end());
    return np;
  }
  std::vector<std::vector<Vertex>> rotation(n);
  for (Vertex v = 0; v < n; ++v)
    for (const auto& be : storage[v]) {
      auto s = static_cast<Vertex>(boost::source(be, bg));
      auto t = static_cast<Vertex>(boost::target(be, bg));
      rotation[v].push_back(s == v ? t : s);
    }
  return Embedding(g, std::move(rotation));
}

bool is_planar(const Graph& g) { return std::holds_alternative<Embedding>(planar_embed(g)); }

std::vector<FaceSummary> faces(const Embedding& e) {
  std::vector<FaceSummary> out;
  for (std::size_t i = 0; i < e.faces().size(); ++i) out.push_back({i, e.faces()[i].length()});
  return out;
}

bool euler_holds(const Embedding& e) {
  const Graph& g = e.graph();
  std::size_t count = 0;
  auto comp = components_of(g, count);
  std::vector<long long> chi(count, 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) chi[comp[v]] += 1;
  for (Edge ed : g.edges()) chi[comp[ed.u]] -= 1;
  for (const Face& f : e.faces()) chi[f.component] += 1;
  return std::all_of(chi.begin(), chi.end(), [](long long c) { return c == 2; });
}

}  // namespace strongedge
