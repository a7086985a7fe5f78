#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "strongedge/graph.hpp"

namespace strongedge {

struct Face {
  std::vector<Vertex> walk;  // corners in traversal order; r(f) = walk.size()
  std::size_t component = 0;

  std::size_t length() const { return walk.size(); }
};

// Rotation system plus the faces it induces. Owns a copy of its graph.
class Embedding {
 public:
  Embedding(Graph g, std::vector<std::vector<Vertex>> rotation);

  const Graph& graph() const { return graph_; }
  std::span<const Vertex> rotation(Vertex v) const { return rotation_[v]; }
  const std::vector<Face>& faces() const { return faces_; }
  std::size_t component_count() const { return component_count_; }
  // Face on the left of the dart u -> v.
  std::size_t face_of_dart(Vertex u, Vertex v) const;

 private:
  Graph graph_;
  std::vector<std::vector<Vertex>> rotation_;
  std::vector<std::vector<std::size_t>> dart_face_;  // parallel to rotation_
  std::vector<Face> faces_;
  std::size_t component_count_ = 0;
};

struct NonPlanar {
  std::vector<Edge> witness;  // edges of a Kuratowski subdivision
};

std::variant<Embedding, NonPlanar> planar_embed(const Graph& g);
bool is_planar(const Graph& g);

struct FaceSummary {
  std::size_t id = 0;
  std::size_t length = 0;
};
std::vector<FaceSummary> faces(const Embedding& e);

// |V_c| - |E_c| + |F_c| == 2 for every connected component c.
bool euler_holds(const Embedding& e);

}  // namespace strongedge
