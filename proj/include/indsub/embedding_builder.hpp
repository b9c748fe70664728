#pragma once

#include <array>
#include <utility>
#include <vector>

#include "indsub/plane_graph.hpp"

namespace indsub {

// Grows a PlaneGraph one primitive at a time; faces are retraced after each.
// Face indices refer to current() and change after every primitive.
class EmbeddingBuilder {
 public:
  explicit EmbeddingBuilder(PlaneGraph base);
  static EmbeddingBuilder start_from(PlaneGraph base) { return EmbeddingBuilder(std::move(base)); }
  // A single triangle 0,1,2.
  static EmbeddingBuilder triangle();

  const PlaneGraph& current() const { return pg_; }
  int order() const { return pg_.order(); }

  // Splits face f along a new edge uv. Throws VertexNotOnFace.
  void add_edge_in_face(int f, int u, int v);
  // New vertex in face f joined to `attach` (all on one boundary walk of f,
  // or a single isolated vertex of f). Empty `attach` adds an isolated vertex.
  int insert_vertex_in_face(int f, const std::vector<int>& attach);
  // Replaces triangular face f by the interior of gadget. `ident` maps the
  // three vertices of the gadget's triangular face gadget_face to f's
  // boundary; the orders must be mirror images. Returns the gadget-to-host map.
  // Throws VertexNotOnFace / OrientationMismatch.
  std::vector<int> paste_into_face(int f, const PlaneGraph& gadget, int gadget_face,
                                   const std::array<std::pair<int, int>, 3>& ident);
  // Places a disjoint copy of gadget in face f, its face gadget_face merging with f.
  std::vector<int> add_component_in_face(int f, const PlaneGraph& gadget, int gadget_face);

 private:
  struct Slot {
    int walk = -1;      // -1 for an isolated vertex
    int prev = -1;      // walk predecessor
    int position = -1;  // index in the walk
  };
  Slot locate(int f, int v) const;
  void absorb_isolated(int v, FaceAnchor replacement);
  void insert_after(int v, int after, int w);
  void rebuild();

  Graph g_;
  std::vector<std::vector<int>> rot_;
  std::vector<NestLink> nest_;
  PlaneGraph pg_;
};

}  // namespace indsub
