#include "indsub/extractors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

#include "indsub/errors.hpp"
#include "indsub/recognizers.hpp"
#include "indsub/solvers.hpp"
#include "indsub/treewidth.hpp"

namespace indsub {

int outerplanar_target(int n) { return (4 * n + 4) / 5; }

int outerplane_target(int n) { return std::min(n, (2 * n + 2 + 2) / 3); }

Partition ktree_partition(const Graph& g, int k) {
  auto order = is_ktree(g, k);
  if (!order) throw NotAKTree("input is not a " + std::to_string(k) + "-tree");
  int n = g.order();
  std::vector<int> colour(n, -1);
  for (int i = 0; i < k + 1; ++i) colour[order->base[i]] = i;
  std::vector<int> pos(n, n);
  for (int i = 0; i < static_cast<int>(order->elimination.size()); ++i) pos[order->elimination[i]] = i;
  for (auto it = order->elimination.rbegin(); it != order->elimination.rend(); ++it) {
    int v = *it;
    std::vector<char> used(k + 1, 0);
    for (int w : g.neighbors(v))
      if (pos[w] > pos[v]) used[colour[w]] = 1;
    colour[v] = static_cast<int>(std::find(used.begin(), used.end(), 0) - used.begin());
  }
  std::vector<std::vector<int>> cls(k + 1);
  for (int v = 0; v < n; ++v) cls[colour[v]].push_back(v);
  Partition p;
  for (auto& c : cls) p.classes.emplace_back(n, std::move(c));
  std::sort(p.classes.begin(), p.classes.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.members() < b.members();
  });
  return p;
}

VertexSet extract_bounded_tw(const Graph& g, int s, int t) {
  if (t < 1 || t > s) throw BadParameter("need 1 <= t <= s");
  int n = g.order();
  if (n <= s + 1) {
    // K_n completion: singleton classes, take the first t+1.
    std::vector<int> pick(std::min(n, t + 1));
    std::iota(pick.begin(), pick.end(), 0);
    return VertexSet(n, pick);
  }
  Graph h;
  if (is_ktree(g, s)) {
    h = g;
  } else {
    if (s <= 2 && !treewidth_at_most(g, s)) throw TreewidthExceeded("treewidth exceeds " + std::to_string(s));
    h = complete_to_ktree(g, s);
  }
  Partition p = ktree_partition(h, s);
  VertexSet out(n, std::vector<int>{});
  for (int i = 0; i < t + 1; ++i) out = out.united(p.classes[i]);

  // The union of t+1 classes of an s-tree is a t-tree, so g[out] has tw <= t.
  Graph sub = g.induced(out);
  bool ok = out.size() <= t + 1 || is_ktree(h.induced(out), t).has_value();
  if (ok && t == 1) ok = is_forest(sub);
  if (ok && t == 2) ok = is_k4_minor_free(sub);
  if (!ok) throw Error("bounded treewidth extraction failed its check");
  return out;
}

namespace {

VertexSet lift(const VertexSet& local, const std::vector<int>& ids, int n) {
  std::vector<int> m;
  for (int v : local) m.push_back(ids[v]);
  return VertexSet(n, std::move(m));
}

// Adds vertices in ascending degree order while the predicate holds.
template <class Pred>
VertexSet greedy_grow(const Graph& g, VertexSet start, Pred ok) {
  int n = g.order();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) < g.degree(b); });
  for (int v : order) {
    if (start.contains(v)) continue;
    VertexSet next = start.united(VertexSet(n, {v}));
    if (ok(next)) start = std::move(next);
  }
  return start;
}

constexpr int kExactOuterplanarLimit = 20;
constexpr int kExactOuterplaneLimit = 22;
constexpr int kReductionCallBudget = 20000;

Budget fallback_budget() {
  Budget b;
  b.max_nodes = 5'000'000;
  b.max_seconds = 20;
  return b;
}

bool outerplanar_set(const Graph& g, const VertexSet& s) { return is_outerplanar(g.induced(s)); }

VertexSet outerplanar_fallback(const Graph& g) {
  if (g.order() <= kExactOuterplanarLimit)
    return max_induced(g, InvariantKind{Kind::s_o}, fallback_budget()).witness;
  return greedy_grow(g, VertexSet(g.order(), std::vector<int>{}),
                     [&](const VertexSet& s) { return outerplanar_set(g, s); });
}

struct Reduction {
  std::vector<int> z;
  std::vector<int> y;  // re-inserted, subset of z
};

// Rooted spanning tree of the triangle graph, grown along the 2-tree
// construction so that it is also a tree decomposition.
struct TriangleTree {
  std::vector<std::array<int, 3>> nodes;
  std::vector<int> parent;
  std::vector<std::vector<int>> children;
  int root = 0;

  bool leaf(int p) const { return children[p].empty(); }
  bool pre_leaf(int p) const {
    if (children[p].empty()) return false;
    for (int c : children[p])
      if (!leaf(c)) return false;
    return true;
  }
  // Vertex of p not in its parent.
  int own(int p) const {
    for (int v : nodes[p])
      if (std::find(nodes[parent[p]].begin(), nodes[parent[p]].end(), v) == nodes[parent[p]].end()) return v;
    return -1;
  }
};

TriangleTree triangle_tree(const Graph& g) {
  CliqueTreeDelta delta = clique_tree_delta(g);
  auto order = is_ktree(g, 2);
  int n = g.order();
  TriangleTree t;
  t.nodes = delta.nodes;
  t.parent.assign(t.nodes.size(), -1);
  t.children.assign(t.nodes.size(), {});
  auto node_of = [&](int a, int b, int c) {
    std::array<int, 3> k{a, b, c};
    std::sort(k.begin(), k.end());
    return static_cast<int>(std::lower_bound(t.nodes.begin(), t.nodes.end(), k) - t.nodes.begin());
  };
  std::map<Edge, int> first;
  auto note = [&](int u, int v, int p) { first.emplace(Edge{std::min(u, v), std::max(u, v)}, p); };
  const auto& b = order->base;
  t.root = node_of(b[0], b[1], b[2]);
  note(b[0], b[1], t.root);
  note(b[0], b[2], t.root);
  note(b[1], b[2], t.root);
  std::vector<int> pos(n, n);
  for (int i = 0; i < static_cast<int>(order->elimination.size()); ++i) pos[order->elimination[i]] = i;
  for (auto it = order->elimination.rbegin(); it != order->elimination.rend(); ++it) {
    int v = *it;
    std::vector<int> up;
    for (int w : g.neighbors(v))
      if (pos[w] > pos[v]) up.push_back(w);
    int p = node_of(v, up[0], up[1]);
    int par = first.at(Edge{std::min(up[0], up[1]), std::max(up[0], up[1])});
    t.parent[p] = par;
    t.children[par].push_back(p);
    note(v, up[0], p);
    note(v, up[1], p);
  }

  // A non-root inner triangle with a 2-vertex hands its children to its parent.
  for (bool changed = true; changed;) {
    changed = false;
    for (int p = 0; p < static_cast<int>(t.nodes.size()); ++p) {
      if (p == t.root || t.children[p].empty()) continue;
      bool has2 = false;
      for (int v : t.nodes[p]) has2 = has2 || g.degree(v) == 2;
      if (!has2) continue;
      int par = t.parent[p];
      for (int c : t.children[p]) {
        t.parent[c] = par;
        t.children[par].push_back(c);
      }
      t.children[p].clear();
      changed = true;
    }
  }
  for (auto& c : t.children) std::sort(c.begin(), c.end());
  return t;
}

// Pre-leaf P under Q with {a,b} = P∩Q, c = P\Q, X the children's own vertices.
struct PreLeaf {
  int a = -1, b = -1, c = -1;
  std::vector<int> x;  // x[0] adjacent to a and c
};

PreLeaf describe(const Graph& g, const TriangleTree& t, int p) {
  PreLeaf out;
  const auto& q = t.nodes[t.parent[p]];
  std::vector<int> shared;
  for (int v : t.nodes[p])
    if (std::find(q.begin(), q.end(), v) != q.end()) shared.push_back(v);
    else out.c = v;
  out.a = shared[0];
  out.b = shared[1];
  for (int ch : t.children[p]) out.x.push_back(t.own(ch));
  auto first_c = std::find_if(out.x.begin(), out.x.end(), [&](int x) { return g.has_edge(x, out.c); });
  if (first_c != out.x.end()) {
    std::iter_swap(out.x.begin(), first_c);
    if (!g.has_edge(out.x[0], out.a)) std::swap(out.a, out.b);
  }
  // x[1], when possible, shares x[0]'s neighbourhood.
  if (out.x.size() >= 2) {
    auto same = std::find_if(out.x.begin() + 1, out.x.end(), [&](int x) {
      return g.has_edge(x, out.a) && g.has_edge(x, out.c);
    });
    if (same != out.x.end()) std::iter_swap(out.x.begin() + 1, same);
  }
  return out;
}

int common_neighbours(const Graph& g, int u, int w) {
  int k = 0;
  for (int x : g.neighbors(u))
    if (g.has_edge(x, w)) ++k;
  return k;
}

std::vector<Reduction> reductions(const Graph& g) {
  int n = g.order();
  std::vector<Reduction> out;
  // A vertex with four 2-vertex neighbours: drop it, keep them as pendants.
  for (int v = 0; v < n; ++v) {
    std::vector<int> u;
    for (int w : g.neighbors(v))
      if (g.degree(w) == 2) u.push_back(w);
    if (u.size() >= 4) {
      u.resize(4);
      Reduction r{{v}, u};
      r.z.insert(r.z.end(), u.begin(), u.end());
      out.push_back(std::move(r));
    }
  }
  // A 2-vertex whose base edge lies in exactly two triangles.
  for (int x = 0; x < n; ++x)
    if (g.degree(x) == 2 && common_neighbours(g, g.neighbors(x)[0], g.neighbors(x)[1]) == 2)
      out.push_back({{x}, {x}});

  TriangleTree t = triangle_tree(g);
  int nodes = static_cast<int>(t.nodes.size());
  std::vector<int> depth(nodes, 0);
  std::vector<int> bfs{t.root};
  for (std::size_t i = 0; i < bfs.size(); ++i)
    for (int c : t.children[bfs[i]]) {
      depth[c] = depth[bfs[i]] + 1;
      bfs.push_back(c);
    }
  // Parents of pre-leaves whose children are all leaves or pre-leaves, deepest first.
  std::vector<int> qs;
  for (int q = 0; q < nodes; ++q) {
    bool any = false, all = !t.children[q].empty();
    for (int c : t.children[q]) {
      any = any || t.pre_leaf(c);
      all = all && (t.leaf(c) || t.pre_leaf(c));
    }
    if (any && all) qs.push_back(q);
  }
  std::stable_sort(qs.begin(), qs.end(), [&](int a, int b) { return depth[a] > depth[b]; });

  auto with = [](std::vector<int> v, std::initializer_list<int> extra) {
    v.insert(v.end(), extra.begin(), extra.end());
    return v;
  };
  for (int q : qs) {
    std::vector<std::pair<int, PreLeaf>> good;
    for (int p : t.children[q]) {
      if (!t.pre_leaf(p)) continue;
      PreLeaf d = describe(g, t, p);
      if (d.x.size() >= 3) {
        out.push_back({with(d.x, {d.a, d.c}), with(d.x, {d.c})});
        out.push_back({with(d.x, {d.b, d.c}), with(d.x, {d.c})});
      }
      if (d.x.size() == 2 && g.has_edge(d.x[1], d.a) && g.has_edge(d.x[1], d.c) && g.has_edge(d.x[0], d.a))
        good.push_back({p, d});
    }
    for (auto& [p, d] : good) {
      int x1 = d.x[0], x2 = d.x[1];
      // Q also has a leaf child with own vertex y.
      for (int l : t.children[q]) {
        if (!t.leaf(l)) continue;
        int y = t.own(l);
        std::vector<int> yy{d.c, x1, x2, y};
        out.push_back({with(yy, {g.has_edge(y, d.a) ? d.a : d.b}), yy});
      }
      // P is Q's only child.
      if (t.children[q].size() == 1 && q != t.root) {
        const auto& qq = t.nodes[t.parent[q]];
        bool has_a = std::find(qq.begin(), qq.end(), d.a) != qq.end();
        std::vector<int> z{d.a, d.b, d.c, x1, x2};
        std::vector<int> y1{d.b, d.c, x1, x2}, y2{d.a, d.c, x1, x2};
        out.push_back({z, has_a ? y1 : y2});
        out.push_back({z, has_a ? y2 : y1});
      }
    }
    // Two pre-leaf children of Q, each with two children.
    for (std::size_t i = 0; i < good.size(); ++i)
      for (std::size_t j = i + 1; j < good.size(); ++j) {
        const PreLeaf& d = good[i].second;
        const PreLeaf& e = good[j].second;
        std::vector<int> y{d.c, e.c, d.x[0], d.x[1], e.x[0], e.x[1]};
        for (int extra : {d.a, d.b, e.a, e.b})
          if (std::find(y.begin(), y.end(), extra) == y.end()) out.push_back({with(y, {extra}), y});
      }
  }
  return out;
}

struct Outerplanar45 {
  int calls = 0;

  VertexSet run(const Graph& g0) {
    ++calls;
    int n = g0.order();
    if (n <= 7) return max_induced(g0, InvariantKind{Kind::s_o}).witness;
    if (is_outerplanar(g0)) return VertexSet::all(n);
    if (calls > kReductionCallBudget) return outerplanar_fallback(g0);
    Graph g = complete_to_ktree(g0, 2);
    int target = outerplanar_target(n);
    for (const Reduction& r : reductions(g)) {
      VertexSet z(n, r.z);
      if (z.size() != static_cast<int>(r.z.size())) continue;
      VertexSet keep = z.complement();
      VertexSet rest = lift(run(g.induced(keep)), keep.members(), n);
      if (auto s = reinsert(g, rest, r, target)) return *s;
      if (calls > kReductionCallBudget) break;
    }
    return outerplanar_fallback(g);
  }

  // Named Y first, then other subsets of Z that still meet the target.
  static std::optional<VertexSet> reinsert(const Graph& g, const VertexSet& rest, const Reduction& r,
                                           int target) {
    int n = g.order();
    VertexSet named = rest.united(VertexSet(n, r.y));
    if (named.size() >= target && outerplanar_set(g, named)) return named;
    int zs = static_cast<int>(r.z.size());
    std::vector<int> masks((1 << zs) - 1);
    std::iota(masks.begin(), masks.end(), 1);
    std::stable_sort(masks.begin(), masks.end(),
                     [](int a, int b) { return __builtin_popcount(a) > __builtin_popcount(b); });
    for (int m : masks) {
      if (rest.size() + __builtin_popcount(m) < target) break;
      std::vector<int> y;
      for (int i = 0; i < zs; ++i)
        if (m >> i & 1) y.push_back(r.z[i]);
      VertexSet s = rest.united(VertexSet(n, y));
      if (outerplanar_set(g, s)) return s;
    }
    return std::nullopt;
  }
};

}  // namespace

VertexSet extract_outerplanar_4_5(const Graph& g) {
  if (!is_k4_minor_free(g)) throw NotK4MinorFree("input has a K4 minor");
  Outerplanar45 run;
  VertexSet s = run.run(g);
  if (!outerplanar_set(g, s)) throw Error("outerplanar extraction failed its check");
  return s;
}

namespace {

// A separating triangle through a V3 vertex, with its two sides.
struct Triangle {
  int x = -1;
  std::vector<int> cycle;
  std::vector<int> side_a, side_b;        // faces
  std::vector<int> strict_a, strict_b;    // vertices of V1 ∪ V2 off the cycle
};

std::vector<Triangle> triangles_through(const PlaneGraph& pg, const VertexSet& s12, const VertexSet& v3) {
  const Graph& g = pg.graph();
  std::vector<Triangle> out;
  for (int x : v3) {
    std::vector<int> nb;
    for (int u : g.neighbors(x))
      if (s12.contains(u)) nb.push_back(u);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (!g.has_edge(nb[i], nb[j])) continue;
        Triangle t;
        t.x = x;
        t.cycle = {x, nb[i], nb[j]};
        CycleSides cs = cycle_sides(pg, t.cycle);
        t.side_a = cs.side_a;
        t.side_b = cs.side_b;
        std::sort(t.side_a.begin(), t.side_a.end());
        std::sort(t.side_b.begin(), t.side_b.end());
        for (int v : cs.strictly_a)
          if (s12.contains(v)) t.strict_a.push_back(v);
        for (int v : cs.strictly_b)
          if (s12.contains(v)) t.strict_b.push_back(v);
        if (!t.strict_a.empty() && !t.strict_b.empty()) out.push_back(std::move(t));
      }
  }
  return out;
}

// One triangle read against a chosen outer face.
struct Oriented {
  const Triangle* t;
  const std::vector<int>* inside;   // faces
  const std::vector<int>* in_verts;
  const std::vector<int>* out_verts;
};

Oriented orient(const Triangle& t, int outer) {
  bool a_out = std::binary_search(t.side_a.begin(), t.side_a.end(), outer);
  if (a_out) return {&t, &t.side_b, &t.strict_b, &t.strict_a};
  return {&t, &t.side_a, &t.strict_a, &t.strict_b};
}

bool inside_of(const Oriented& inner, const Oriented& outer) {
  return std::includes(outer.inside->begin(), outer.inside->end(), inner.inside->begin(), inner.inside->end());
}

std::optional<VertexSet> by_separating_triangles(const PlaneGraph& pg, const Partition& part,
                                                 const std::vector<Triangle>& tris, int outer, int target) {
  int n = pg.order();
  const VertexSet &v1 = part.classes[0], &v2 = part.classes[1], &v3 = part.classes[2];
  VertexSet v13 = v1.united(v3), v23 = v2.united(v3);
  // Innermost and outermost separating triangle through each x.
  std::map<int, Oriented> inner, outerm;
  for (const Triangle& t : tris) {
    Oriented o = orient(t, outer);
    auto in = inner.find(t.x);
    if (in == inner.end() || o.inside->size() < in->second.inside->size()) inner.insert_or_assign(t.x, o);
    auto out = outerm.find(t.x);
    if (out == outerm.end() || o.inside->size() > out->second.inside->size()) outerm.insert_or_assign(t.x, o);
  }
  std::vector<int> minimal;
  for (auto& [x, o] : inner) {
    bool contains_other = false;
    for (auto& [y, p] : inner)
      if (y != x && inside_of(p, o)) contains_other = true;
    if (!contains_other) minimal.push_back(x);
  }

  auto try_set = [&](const VertexSet& s) -> std::optional<VertexSet> {
    if (s.size() >= target && is_outerplane(pg, s)) return s;
    return std::nullopt;
  };
  auto one = [&](const VertexSet& base, int y) { return base.united(VertexSet(n, {y})); };
  // y1 near x1 and ym near xm: V1 ∪ V3 ∪ {y} when y ∈ V2, else V2 ∪ V3 ∪ {y1, ym}.
  auto finish = [&](const std::vector<int>& y1s, const std::vector<int>& yms) -> std::optional<VertexSet> {
    for (const auto* ys : {&y1s, &yms})
      for (int y : *ys)
        if (v2.contains(y))
          if (auto s = try_set(one(v13, y))) return s;
    for (int y1 : y1s)
      for (int ym : yms)
        if (v1.contains(y1) && v1.contains(ym))
          if (auto s = try_set(v23.united(VertexSet(n, {y1, ym})))) return s;
    return std::nullopt;
  };

  if (minimal.size() >= 2) {
    for (std::size_t i = 0; i < minimal.size(); ++i)
      for (std::size_t j = i + 1; j < minimal.size(); ++j)
        if (auto s = finish(*inner.at(minimal[i]).in_verts, *inner.at(minimal[j]).in_verts)) return s;
  } else if (minimal.size() == 1) {
    int x1 = minimal[0];
    for (auto& [xm, o] : outerm) {
      if (xm == x1) continue;
      bool outermost = true;
      for (auto& [y, p] : outerm)
        if (y != xm && !inside_of(p, o)) outermost = false;
      if (!outermost) continue;
      if (auto s = finish(*inner.at(x1).in_verts, *o.out_verts)) return s;
    }
  }
  return std::nullopt;
}

}  // namespace

VertexSet extract_outerplane_2_3(const PlaneGraph& pg) {
  const Graph& g = pg.graph();
  if (!is_k4_minor_free(g)) throw NotK4MinorFree("input has a K4 minor");
  int n = g.order();
  int target = outerplane_target(n);
  if (n <= 5) return max_induced(pg, InvariantKind{Kind::s_oprime}).witness;

  Graph h = is_ktree(g, 2) ? g : complete_to_ktree(g, 2);
  Partition part = ktree_partition(h, 2);
  const VertexSet &v1 = part.classes[0], &v2 = part.classes[1], &v3 = part.classes[2];
  VertexSet s12 = v1.united(v2);
  // Two classes induce a forest, which is outerplane in any embedding.
  if (s12.size() >= target) return s12;
  for (int x : v3) {
    VertexSet s = s12.united(VertexSet(n, {x}));
    if (is_outerplane(pg, s)) return s;
  }

  std::vector<Triangle> tris = triangles_through(pg, s12, v3);
  for (int outer = 0; outer < pg.face_count(); ++outer)
    if (auto s = by_separating_triangles(pg, part, tris, outer, target)) return *s;

  // Same candidate shapes with every choice of extra vertices.
  VertexSet v13 = v1.united(v3), v23 = v2.united(v3);
  for (int y : v2) {
    VertexSet s = v13.united(VertexSet(n, {y}));
    if (s.size() >= target && is_outerplane(pg, s)) return s;
  }
  for (int y1 : v1)
    for (int ym : v1) {
      if (ym <= y1) continue;
      VertexSet s = v23.united(VertexSet(n, {y1, ym}));
      if (s.size() >= target && is_outerplane(pg, s)) return s;
    }

  if (n <= kExactOuterplaneLimit) return max_induced(pg, InvariantKind{Kind::s_oprime}, fallback_budget()).witness;
  return greedy_grow(g, s12, [&](const VertexSet& s) { return is_outerplane(pg, s); });
}

}  // namespace indsub
