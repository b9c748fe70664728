#pragma once

#include <span>
#include <vector>

#include "indsub/graph.hpp"

namespace indsub {

struct Dart {
  int tail = 0;
  int head = 0;
  bool operator==(const Dart&) const = default;
};

// A dart tail->head, or the isolated vertex `tail` when head == -1.
struct FaceAnchor {
  int tail = 0;
  int head = -1;
  bool operator==(const FaceAnchor&) const = default;
};

// The face at `inner` (of one component) lies in the face at `outer`.
struct NestLink {
  FaceAnchor inner;
  FaceAnchor outer;
  bool operator==(const NestLink&) const = default;
};

// One face: a boundary walk per component touching it, plus isolated
// vertices lying in it.
struct Face {
  std::vector<std::vector<Dart>> walks;
  std::vector<int> isolated;

  int length() const;
  std::vector<int> vertices() const;
};

// Graph with a rotation system on the sphere. Immutable once built.
class PlaneGraph {
 public:
  PlaneGraph() = default;
  // rotation[v] is the cyclic order of v's neighbours. Without nesting links,
  // every later component sits in the face of component 0 at its lowest
  // vertex's first dart. Throws MalformedRotation / EulerViolation.
  PlaneGraph(Graph g, std::vector<std::vector<int>> rotation,
             std::vector<NestLink> nesting = {});

  const Graph& graph() const { return g_; }
  int order() const { return g_.order(); }
  int size() const { return g_.size(); }
  const std::vector<int>& rotation(int v) const { return rot_[v]; }
  const std::vector<std::vector<int>>& rotations() const { return rot_; }
  const std::vector<NestLink>& nesting() const { return nest_; }
  const std::vector<Face>& faces() const { return faces_; }
  int face_count() const { return static_cast<int>(faces_.size()); }
  int components() const { return components_; }

  int face_of_dart(int u, int v) const;
  int face_of_anchor(const FaceAnchor& a) const;
  // Distinct faces incident to v, sorted.
  std::vector<int> faces_at(int v) const;
  // Neighbour after / before u in v's rotation.
  int successor(int v, int u) const;
  int predecessor(int v, int u) const;
  // Anchor naming face f: its first dart, else its first isolated vertex.
  FaceAnchor anchor_of_face(int f) const;

  // Reflection: every rotation reversed.
  PlaneGraph mirrored() const;
  // new_id[v] is v's id in the result; must be a permutation.
  PlaneGraph relabeled(const std::vector<int>& new_id) const;
  // Throws BadParameter if removal disconnects a component.
  PlaneGraph without_edge(int u, int v) const;

 private:
  int rot_pos(int v, int u) const;
  void trace();

  Graph g_;
  std::vector<std::vector<int>> rot_;
  std::vector<NestLink> nest_;
  std::vector<Face> faces_;
  int components_ = 0;
  // rot_index_[v][i]: position in rot_[v] of the i-th sorted neighbour.
  std::vector<std::vector<int>> rot_index_;
  // dart_face_[v][p]: face of dart v -> rot_[v][p].
  std::vector<std::vector<int>> dart_face_;
  std::vector<int> iso_face_;
};

inline const std::vector<Face>& trace_faces(const PlaneGraph& pg) { return pg.faces(); }

// First face bounded by one walk whose vertex set is exactly `vertices`
// and whose length equals its vertex count; -1 if none.
int find_face(const PlaneGraph& pg, std::vector<int> vertices);

struct CycleSides {
  std::vector<int> side_a;      // faces; contains the face of dart c0->c1
  std::vector<int> side_b;
  std::vector<int> strictly_a;  // vertices off the cycle with all faces in side_a
  std::vector<int> strictly_b;
};

// Throws NotACycle.
CycleSides cycle_sides(const PlaneGraph& pg, std::span<const int> cycle);

// Some face of pg[s], with pg's embedding, meets every vertex of s.
bool is_outerplane(const PlaneGraph& pg, const VertexSet& s);

}  // namespace indsub
