#include "indsub/plane_graph.hpp"

#include <algorithm>
#include <string>

#include "dsu.hpp"
#include "indsub/errors.hpp"

namespace indsub {

int Face::length() const {
  int len = 0;
  for (const auto& w : walks) len += static_cast<int>(w.size());
  return len;
}

std::vector<int> Face::vertices() const {
  std::vector<int> vs(isolated);
  for (const auto& w : walks)
    for (const Dart& d : w) vs.push_back(d.tail);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

PlaneGraph::PlaneGraph(Graph g, std::vector<std::vector<int>> rotation,
                       std::vector<NestLink> nesting)
    : g_(std::move(g)), rot_(std::move(rotation)), nest_(std::move(nesting)) {
  int n = g_.order();
  if (static_cast<int>(rot_.size()) != n) throw MalformedRotation("rotation count differs from n");
  rot_index_.assign(n, {});
  for (int v = 0; v < n; ++v) {
    std::vector<int> sorted = rot_[v];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != g_.neighbors(v))
      throw MalformedRotation("rotation at " + std::to_string(v) + " disagrees with edges");
    rot_index_[v].resize(rot_[v].size());
    for (int p = 0; p < static_cast<int>(rot_[v].size()); ++p) {
      auto it = std::lower_bound(g_.neighbors(v).begin(), g_.neighbors(v).end(), rot_[v][p]);
      rot_index_[v][it - g_.neighbors(v).begin()] = p;
    }
  }
  trace();
}

int PlaneGraph::rot_pos(int v, int u) const {
  const auto& nb = g_.neighbors(v);
  auto it = std::lower_bound(nb.begin(), nb.end(), u);
  if (it == nb.end() || *it != u)
    throw BadParameter("no edge " + std::to_string(v) + " " + std::to_string(u));
  return rot_index_[v][it - nb.begin()];
}

int PlaneGraph::successor(int v, int u) const {
  int p = rot_pos(v, u);
  return rot_[v][(p + 1) % rot_[v].size()];
}

int PlaneGraph::predecessor(int v, int u) const {
  int p = rot_pos(v, u);
  int d = static_cast<int>(rot_[v].size());
  return rot_[v][(p + d - 1) % d];
}

int PlaneGraph::face_of_dart(int u, int v) const {
  if (u < 0 || u >= order()) throw BadParameter("vertex out of range");
  return dart_face_[u][rot_pos(u, v)];
}

int PlaneGraph::face_of_anchor(const FaceAnchor& a) const {
  if (a.head < 0) {
    if (a.tail < 0 || a.tail >= order() || g_.degree(a.tail) != 0)
      throw BadParameter("anchor is not an isolated vertex");
    return iso_face_[a.tail];
  }
  return face_of_dart(a.tail, a.head);
}

std::vector<int> PlaneGraph::faces_at(int v) const {
  if (g_.degree(v) == 0) return {iso_face_[v]};
  std::vector<int> fs = dart_face_[v];
  std::sort(fs.begin(), fs.end());
  fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
  return fs;
}

FaceAnchor PlaneGraph::anchor_of_face(int f) const {
  const Face& face = faces_.at(f);
  if (!face.walks.empty()) return {face.walks[0][0].tail, face.walks[0][0].head};
  return {face.isolated.at(0), -1};
}

void PlaneGraph::trace() {
  int n = order();
  int comp_count = 0;
  std::vector<int> comp = component_ids(g_, &comp_count);
  components_ = comp_count;

  // Raw faces: one per walk, one per isolated vertex, in discovery order.
  std::vector<std::vector<Dart>> raw_walks;
  std::vector<int> raw_iso;  // -1 for walks
  std::vector<int> raw_comp;
  dart_face_.assign(n, {});
  iso_face_.assign(n, -1);
  for (int v = 0; v < n; ++v) dart_face_[v].assign(rot_[v].size(), -1);
  for (int v = 0; v < n; ++v) {
    if (rot_[v].empty()) {
      iso_face_[v] = static_cast<int>(raw_walks.size());
      raw_walks.push_back({});
      raw_iso.push_back(v);
      raw_comp.push_back(comp[v]);
      continue;
    }
    for (int p = 0; p < static_cast<int>(rot_[v].size()); ++p) {
      if (dart_face_[v][p] >= 0) continue;
      int id = static_cast<int>(raw_walks.size());
      std::vector<Dart> walk;
      int a = v, pa = p;
      while (dart_face_[a][pa] < 0) {
        dart_face_[a][pa] = id;
        int b = rot_[a][pa];
        walk.push_back({a, b});
        int pb = rot_pos(b, a);
        pa = (pb + 1) % static_cast<int>(rot_[b].size());
        a = b;
      }
      if (a != v || pa != p) throw MalformedRotation("face walk did not close");
      raw_walks.push_back(std::move(walk));
      raw_iso.push_back(-1);
      raw_comp.push_back(comp[v]);
    }
  }

  // Euler per component on its own sphere.
  std::vector<int> cv(comp_count, 0), ce(comp_count, 0), cf(comp_count, 0);
  for (int v = 0; v < n; ++v) {
    ++cv[comp[v]];
    ce[comp[v]] += g_.degree(v);
  }
  for (int c : raw_comp) ++cf[c];
  for (int c = 0; c < comp_count; ++c)
    if (cv[c] - ce[c] / 2 + cf[c] != 2)
      throw EulerViolation("rotation system of component " + std::to_string(c) +
                           " is not planar");

  auto raw_of = [&](const FaceAnchor& a) -> int {
    if (a.tail < 0 || a.tail >= n) throw EulerViolation("nesting anchor out of range");
    if (a.head < 0) {
      if (!rot_[a.tail].empty()) throw EulerViolation("nesting anchor is not isolated");
      return iso_face_[a.tail];
    }
    if (!g_.has_edge(a.tail, a.head)) throw EulerViolation("nesting anchor is not a dart");
    return dart_face_[a.tail][rot_pos(a.tail, a.head)];
  };
  auto component_anchor = [&](int c) -> FaceAnchor {
    for (int v = 0; v < n; ++v)
      if (comp[v] == c) return rot_[v].empty() ? FaceAnchor{v, -1} : FaceAnchor{v, rot_[v][0]};
    return {};
  };

  if (nest_.empty() && comp_count > 1) {
    FaceAnchor root = component_anchor(0);
    for (int c = 1; c < comp_count; ++c) nest_.push_back({component_anchor(c), root});
  }
  if (static_cast<int>(nest_.size()) != std::max(0, comp_count - 1))
    throw EulerViolation("nesting must link every component exactly once");

  detail::Dsu comps(comp_count), faces(static_cast<int>(raw_walks.size()));
  for (const NestLink& link : nest_) {
    int fi = raw_of(link.inner), fo = raw_of(link.outer);
    if (!comps.unite(raw_comp[fi], raw_comp[fo]))
      throw EulerViolation("nesting links form a cycle");
    faces.unite(fi, fo);
  }

  std::vector<int> final_id(raw_walks.size(), -1);
  faces_.clear();
  for (int r = 0; r < static_cast<int>(raw_walks.size()); ++r) {
    int root = faces.find(r);
    if (final_id[root] < 0) {
      final_id[root] = static_cast<int>(faces_.size());
      faces_.emplace_back();
    }
    Face& face = faces_[final_id[root]];
    if (raw_iso[r] >= 0)
      face.isolated.push_back(raw_iso[r]);
    else
      face.walks.push_back(std::move(raw_walks[r]));
  }
  for (int v = 0; v < n; ++v) {
    for (int& f : dart_face_[v]) f = final_id[faces.find(f)];
    if (iso_face_[v] >= 0) iso_face_[v] = final_id[faces.find(iso_face_[v])];
  }
}

PlaneGraph PlaneGraph::mirrored() const {
  auto rot = rot_;
  for (auto& r : rot) std::reverse(r.begin(), r.end());
  auto nest = nest_;
  // The reflected face of dart u->v is the one of dart v->u.
  for (auto& link : nest) {
    if (link.inner.head >= 0) std::swap(link.inner.tail, link.inner.head);
    if (link.outer.head >= 0) std::swap(link.outer.tail, link.outer.head);
  }
  return PlaneGraph(g_, std::move(rot), std::move(nest));
}

PlaneGraph PlaneGraph::relabeled(const std::vector<int>& new_id) const {
  int n = order();
  if (static_cast<int>(new_id.size()) != n) throw BadParameter("relabel size mismatch");
  std::vector<char> used(n, 0);
  for (int x : new_id) {
    if (x < 0 || x >= n || used[x]) throw BadParameter("relabel is not a permutation");
    used[x] = 1;
  }
  Graph h(n);
  for (auto [u, v] : g_.edges()) h.add_edge(new_id[u], new_id[v]);
  std::vector<std::vector<int>> rot(n);
  for (int v = 0; v < n; ++v)
    for (int w : rot_[v]) rot[new_id[v]].push_back(new_id[w]);
  auto map_anchor = [&](FaceAnchor a) {
    a.tail = new_id[a.tail];
    if (a.head >= 0) a.head = new_id[a.head];
    return a;
  };
  std::vector<NestLink> nest;
  for (const auto& link : nest_) nest.push_back({map_anchor(link.inner), map_anchor(link.outer)});
  return PlaneGraph(std::move(h), std::move(rot), std::move(nest));
}

PlaneGraph PlaneGraph::without_edge(int u, int v) const {
  Graph h = g_;
  if (!h.remove_edge(u, v)) throw BadParameter("no such edge");
  int c = 0;
  component_ids(h, &c);
  if (c != components_) throw BadParameter("edge removal disconnects a component");
  auto rot = rot_;
  rot[u].erase(std::find(rot[u].begin(), rot[u].end(), v));
  rot[v].erase(std::find(rot[v].begin(), rot[v].end(), u));
  auto nest = nest_;
  for (auto& link : nest)
    for (FaceAnchor* a : {&link.inner, &link.outer})
      if (a->head >= 0 && ((a->tail == u && a->head == v) || (a->tail == v && a->head == u)))
        throw BadParameter("edge carries a nesting anchor");
  return PlaneGraph(std::move(h), std::move(rot), std::move(nest));
}

int find_face(const PlaneGraph& pg, std::vector<int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  for (int f = 0; f < pg.face_count(); ++f) {
    const Face& face = pg.faces()[f];
    if (face.walks.size() != 1 || !face.isolated.empty()) continue;
    if (face.length() != static_cast<int>(vertices.size())) continue;
    if (face.vertices() == vertices) return f;
  }
  return -1;
}

CycleSides cycle_sides(const PlaneGraph& pg, std::span<const int> cycle) {
  const Graph& g = pg.graph();
  int len = static_cast<int>(cycle.size());
  if (len < 3) throw NotACycle("cycle needs at least 3 vertices");
  std::vector<char> on(g.order(), 0);
  for (int v : cycle) {
    if (v < 0 || v >= g.order()) throw NotACycle("vertex out of range");
    if (on[v]) throw NotACycle("repeated vertex " + std::to_string(v));
    on[v] = 1;
  }
  for (int i = 0; i < len; ++i)
    if (!g.has_edge(cycle[i], cycle[(i + 1) % len]))
      throw NotACycle("missing edge " + std::to_string(cycle[i]) + " " +
                      std::to_string(cycle[(i + 1) % len]));

  std::vector<Edge> cut;
  for (int i = 0; i < len; ++i) {
    int a = cycle[i], b = cycle[(i + 1) % len];
    cut.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(cut.begin(), cut.end());
  detail::Dsu dsu(pg.face_count());
  for (auto [u, v] : g.edges())
    if (!std::binary_search(cut.begin(), cut.end(), Edge{u, v}))
      dsu.unite(pg.face_of_dart(u, v), pg.face_of_dart(v, u));

  int ra = dsu.find(pg.face_of_dart(cycle[0], cycle[1]));
  int rb = dsu.find(pg.face_of_dart(cycle[1], cycle[0]));
  if (ra == rb) throw MalformedEmbedding("cycle does not separate the sphere");
  CycleSides out;
  std::vector<int> side(pg.face_count(), 0);
  for (int f = 0; f < pg.face_count(); ++f) {
    int r = dsu.find(f);
    if (r == ra) {
      side[f] = 1;
      out.side_a.push_back(f);
    } else if (r == rb) {
      side[f] = 2;
      out.side_b.push_back(f);
    } else {
      throw MalformedEmbedding("cycle cuts the dual into more than two parts");
    }
  }
  for (int v = 0; v < g.order(); ++v) {
    if (on[v]) continue;
    auto fs = pg.faces_at(v);
    int s = side[fs[0]];
    bool same = std::all_of(fs.begin(), fs.end(), [&](int f) { return side[f] == s; });
    if (!same) continue;
    (s == 1 ? out.strictly_a : out.strictly_b).push_back(v);
  }
  return out;
}

bool is_outerplane(const PlaneGraph& pg, const VertexSet& s) {
  if (s.empty()) return true;
  const Graph& g = pg.graph();
  if (s.universe() > g.order() || (!s.empty() && s.members().back() >= g.order()))
    throw BadParameter("vertex set exceeds graph");
  std::vector<char> in = s.mask();
  in.resize(g.order(), 0);
  detail::Dsu dsu(pg.face_count());
  for (auto [u, v] : g.edges())
    if (!(in[u] && in[v])) dsu.unite(pg.face_of_dart(u, v), pg.face_of_dart(v, u));
  std::vector<int> count(pg.face_count(), 0), last(pg.face_count(), -1);
  for (int x : s) {
    for (int f : pg.faces_at(x)) {
      int r = dsu.find(f);
      if (last[r] == x) continue;
      last[r] = x;
      if (++count[r] == s.size()) return true;
    }
  }
  return false;
}

}  // namespace indsub
