#include "indsub/embedding_builder.hpp"

#include <algorithm>
#include <string>

#include "indsub/errors.hpp"

namespace indsub {

EmbeddingBuilder::EmbeddingBuilder(PlaneGraph base)
    : g_(base.graph()), rot_(base.rotations()), nest_(base.nesting()), pg_(std::move(base)) {}

EmbeddingBuilder EmbeddingBuilder::triangle() {
  return EmbeddingBuilder(PlaneGraph(cycle_graph(3), {{1, 2}, {2, 0}, {0, 1}}));
}

void EmbeddingBuilder::rebuild() { pg_ = PlaneGraph(g_, rot_, nest_); }

EmbeddingBuilder::Slot EmbeddingBuilder::locate(int f, int v) const {
  if (f < 0 || f >= pg_.face_count()) throw BadParameter("face index out of range");
  const Face& face = pg_.faces()[f];
  for (int w = 0; w < static_cast<int>(face.walks.size()); ++w) {
    const auto& walk = face.walks[w];
    int len = static_cast<int>(walk.size());
    for (int i = 0; i < len; ++i)
      if (walk[i].tail == v) return {w, walk[(i + len - 1) % len].tail, i};
  }
  if (std::find(face.isolated.begin(), face.isolated.end(), v) != face.isolated.end())
    return {};
  throw VertexNotOnFace("vertex " + std::to_string(v) + " is not on face " + std::to_string(f));
}

void EmbeddingBuilder::insert_after(int v, int after, int w) {
  auto& r = rot_[v];
  if (after < 0) {
    r.push_back(w);
    return;
  }
  auto it = std::find(r.begin(), r.end(), after);
  r.insert(it + 1, w);
}

// v stops being isolated; links naming it now name `replacement`.
void EmbeddingBuilder::absorb_isolated(int v, FaceAnchor replacement) {
  std::vector<NestLink> kept;
  for (NestLink link : nest_) {
    if (link.inner == FaceAnchor{v, -1}) continue;  // v joins the host's component
    if (link.outer == FaceAnchor{v, -1}) link.outer = replacement;
    kept.push_back(link);
  }
  nest_ = std::move(kept);
}

void EmbeddingBuilder::add_edge_in_face(int f, int u, int v) {
  if (u == v || g_.has_edge(u, v)) throw BadParameter("edge already present or loop");
  Slot su = locate(f, u), sv = locate(f, v);
  if (su.walk < 0 && sv.walk < 0) throw BadParameter("cannot join two isolated vertices");
  if (su.walk >= 0 && sv.walk >= 0 && su.walk != sv.walk)
    throw BadParameter("endpoints lie on different boundary walks");
  if (su.walk < 0) {
    std::swap(u, v);
    std::swap(su, sv);
  }
  const Dart keep = pg_.faces()[f].walks[su.walk][su.position];
  g_.add_edge(u, v);
  insert_after(u, su.prev, v);
  insert_after(v, sv.prev, u);
  if (sv.walk < 0) absorb_isolated(v, {keep.tail, keep.head});
  rebuild();
}

int EmbeddingBuilder::insert_vertex_in_face(int f, const std::vector<int>& attach) {
  if (f < 0 || f >= pg_.face_count()) throw BadParameter("face index out of range");
  FaceAnchor host = pg_.anchor_of_face(f);
  std::vector<std::pair<int, Slot>> slots;
  for (int a : attach) slots.emplace_back(a, locate(f, a));
  for (std::size_t i = 0; i < slots.size(); ++i)
    for (std::size_t j = i + 1; j < slots.size(); ++j)
      if (slots[i].first == slots[j].first) throw BadParameter("repeated attach vertex");
  bool isolated_attach = !slots.empty() && slots[0].second.walk < 0;
  if (isolated_attach && slots.size() != 1)
    throw BadParameter("an isolated vertex can only be attached alone");
  for (const auto& [a, s] : slots)
    if (s.walk != slots[0].second.walk)
      throw BadParameter("attach vertices lie on different boundary walks");
  std::sort(slots.begin(), slots.end(),
            [](const auto& x, const auto& y) { return x.second.position < y.second.position; });

  int w = g_.order();
  Graph grown(w + 1);
  for (auto [a, b] : g_.edges()) grown.add_edge(a, b);
  g_ = std::move(grown);
  rot_.emplace_back();
  for (const auto& [a, s] : slots) {
    g_.add_edge(a, w);
    insert_after(a, s.prev, w);
  }
  for (auto it = slots.rbegin(); it != slots.rend(); ++it) rot_[w].push_back(it->first);
  if (slots.empty()) {
    nest_.push_back({{w, -1}, host});
  } else if (isolated_attach) {
    absorb_isolated(slots[0].first, {slots[0].first, w});
  }
  rebuild();
  return w;
}

std::vector<int> EmbeddingBuilder::paste_into_face(
    int f, const PlaneGraph& gadget, int gadget_face,
    const std::array<std::pair<int, int>, 3>& ident) {
  if (gadget.components() != 1) throw BadParameter("gadget must be connected");
  if (f < 0 || f >= pg_.face_count()) throw BadParameter("face index out of range");
  const Face& host = pg_.faces()[f];
  if (host.walks.size() != 1 || host.walks[0].size() != 3 || !host.isolated.empty())
    throw BadParameter("paste target must be a triangular face");
  const Face& gf = gadget.faces().at(gadget_face);
  if (gf.walks.size() != 1 || gf.walks[0].size() != 3)
    throw BadParameter("gadget face must be a triangle");

  // Gadget boundary a->b->c in walk order, mapped through ident.
  int n = g_.order();
  std::vector<int> map(gadget.order(), -1);
  for (auto [gv, hv] : ident) {
    if (gv < 0 || gv >= gadget.order()) throw BadParameter("gadget vertex out of range");
    locate(f, hv);
    map[gv] = hv;
  }
  const auto& gw = gf.walks[0];
  for (const Dart& d : gw)
    if (map[d.tail] < 0) throw VertexNotOnFace("identification misses a gadget boundary vertex");
  const auto& hw = host.walks[0];
  auto host_has = [&](int x, int y) {
    return std::any_of(hw.begin(), hw.end(), [&](const Dart& d) { return d.tail == x && d.head == y; });
  };
  int a = gw[0].tail, b = gw[0].head;
  if (host_has(map[a], map[b])) throw OrientationMismatch("gadget boundary has host orientation");
  if (!host_has(map[b], map[a])) throw VertexNotOnFace("identification is not the face boundary");

  int next = n;
  for (int v = 0; v < gadget.order(); ++v)
    if (map[v] < 0) map[v] = next++;
  Graph grown(next);
  for (auto [x, y] : g_.edges()) grown.add_edge(x, y);
  for (auto [x, y] : gadget.graph().edges()) grown.add_edge(map[x], map[y]);
  g_ = std::move(grown);
  rot_.resize(next);

  std::vector<char> boundary(gadget.order(), 0);
  for (const Dart& d : gw) boundary[d.tail] = 1;
  for (int v = 0; v < gadget.order(); ++v) {
    const auto& gr = gadget.rotation(v);
    if (!boundary[v]) {
      for (int x : gr) rot_[map[v]].push_back(map[x]);
      continue;
    }
    // Gadget rotation at a boundary vertex runs succ(c) = b, ..., c where
    // c -> v -> b on the gadget face; the interior sits between b and c.
    int d = static_cast<int>(gr.size());
    int bnext = -1, cprev = -1;
    for (const Dart& dd : gw) {
      if (dd.tail == v) bnext = dd.head;
      if (dd.head == v) cprev = dd.tail;
    }
    int pos = static_cast<int>(std::find(gr.begin(), gr.end(), bnext) - gr.begin());
    std::vector<int> interior;
    for (int i = 1; i < d; ++i) {
      int x = gr[(pos + i) % d];
      if (x == cprev) break;
      interior.push_back(map[x]);
    }
    auto& hr = rot_[map[v]];
    auto it = std::find(hr.begin(), hr.end(), map[bnext]);
    hr.insert(it + 1, interior.begin(), interior.end());
  }
  rebuild();
  return map;
}

std::vector<int> EmbeddingBuilder::add_component_in_face(int f, const PlaneGraph& gadget,
                                                         int gadget_face) {
  if (f < 0 || f >= pg_.face_count()) throw BadParameter("face index out of range");
  FaceAnchor host = pg_.anchor_of_face(f);
  FaceAnchor inner = gadget.anchor_of_face(gadget_face);
  int n = g_.order();
  std::vector<int> map(gadget.order());
  for (int v = 0; v < gadget.order(); ++v) map[v] = n + v;
  Graph grown(n + gadget.order());
  for (auto [x, y] : g_.edges()) grown.add_edge(x, y);
  for (auto [x, y] : gadget.graph().edges()) grown.add_edge(map[x], map[y]);
  g_ = std::move(grown);
  for (int v = 0; v < gadget.order(); ++v) {
    rot_.emplace_back();
    for (int x : gadget.rotation(v)) rot_.back().push_back(map[x]);
  }
  auto shift = [&](FaceAnchor a) {
    a.tail = map[a.tail];
    if (a.head >= 0) a.head = map[a.head];
    return a;
  };
  for (const NestLink& link : gadget.nesting()) nest_.push_back({shift(link.inner), shift(link.outer)});
  nest_.push_back({shift(inner), host});
  rebuild();
  return map;
}

}  // namespace indsub
