#include "indsub/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "indsub/errors.hpp"

namespace indsub::oracle {

namespace {

using Mask = std::uint32_t;

std::vector<Mask> adjacency(const Graph& g) {
  std::vector<Mask> a(g.order(), 0);
  for (int v = 0; v < g.order(); ++v)
    for (int w : g.neighbors(v)) a[v] |= Mask{1} << w;
  return a;
}

bool connected_within(const std::vector<Mask>& adj, Mask s) {
  if (s == 0) return true;
  Mask seen = s & (~s + 1), frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
    next &= s & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == s;
}

// Vertex v is bit n-1-v so numeric order is characteristic-vector order.
VertexSet decode(int n, Mask m) {
  std::vector<int> ids;
  for (int v = 0; v < n; ++v)
    if (m >> (n - 1 - v) & 1) ids.push_back(v);
  return VertexSet(n, std::move(ids));
}

Mask to_vertex_mask(int n, Mask m) {
  Mask out = 0;
  for (int v = 0; v < n; ++v)
    if (m >> (n - 1 - v) & 1) out |= Mask{1} << v;
  return out;
}

// Calls visit on every size-k mask over n bits in increasing order until it returns true.
bool for_each_combination(int n, int k, const std::function<bool(Mask)>& visit) {
  if (k == 0) return visit(0);
  if (k > n) return false;
  Mask m = (Mask{1} << k) - 1;
  Mask limit = Mask{1} << n;
  while (m < limit) {
    if (visit(m)) return true;
    Mask c = m & (~m + 1);
    Mask r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
  }
  return false;
}

bool ham_cycle_with_planar_chords(const Graph& b) {
  int k = b.order();
  std::vector<int> path{0}, pos(k, -1);
  std::vector<char> used(k, 0);
  used[0] = 1;
  auto chords_ok = [&]() {
    for (int i = 0; i < k; ++i) pos[path[i]] = i;
    std::vector<Edge> chords;
    for (auto [u, v] : b.edges()) {
      int d = std::abs(pos[u] - pos[v]);
      if (d != 1 && d != k - 1) chords.emplace_back(std::min(pos[u], pos[v]), std::max(pos[u], pos[v]));
    }
    for (auto [a, c] : chords)
      for (auto [x, y] : chords) {
        if (a == x || a == y || c == x || c == y) continue;
        bool x_in = a < x && x < c, y_in = a < y && y < c;
        if (x_in != y_in) return false;
      }
    return true;
  };
  std::function<bool()> rec = [&]() -> bool {
    if (static_cast<int>(path.size()) == k) {
      if (!b.has_edge(path.back(), 0) || path[1] > path.back()) return false;
      return chords_ok();
    }
    for (int w : b.neighbors(path.back())) {
      if (used[w]) continue;
      used[w] = 1;
      path.push_back(w);
      if (rec()) return true;
      path.pop_back();
      used[w] = 0;
    }
    return false;
  };
  return rec();
}

bool outerplanar_rec(const Graph& g) {
  int n = g.order();
  if (n <= 3) return true;
  int comps = 0;
  std::vector<int> comp = component_ids(g, &comps);
  if (comps > 1) {
    for (int c = 0; c < comps; ++c) {
      std::vector<int> ids;
      for (int v = 0; v < n; ++v)
        if (comp[v] == c) ids.push_back(v);
      if (!outerplanar_rec(g.induced(VertexSet(n, ids)))) return false;
    }
    return true;
  }
  // Split at a cut vertex if there is one.
  for (int x = 0; x < n; ++x) {
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
      if (v != x) rest.push_back(v);
    Graph h = g.induced(VertexSet(n, rest));
    int c = 0;
    std::vector<int> hc = component_ids(h, &c);
    if (c <= 1) continue;
    for (int part = 0; part < c; ++part) {
      std::vector<int> ids{x};
      for (int i = 0; i < n - 1; ++i)
        if (hc[i] == part) ids.push_back(rest[i]);
      if (!outerplanar_rec(g.induced(VertexSet(n, ids)))) return false;
    }
    return true;
  }
  if (g.size() > 2 * n - 3) return false;
  return ham_cycle_with_planar_chords(g);
}

bool tw_dp(const std::vector<Mask>& adj, int n, int t) {
  if (n <= t + 1) return true;
  Mask full = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  std::vector<char> memo(std::size_t{1} << n, 0);  // 0 unknown, 1 yes, 2 no
  std::function<bool(Mask)> rec = [&](Mask gone) -> bool {
    if (n - std::popcount(gone) <= t + 1) return true;
    char& m = memo[gone];
    if (m) return m == 1;
    bool ok = false;
    for (Mask f = full & ~gone; f && !ok; f &= f - 1) {
      int v = std::countr_zero(f);
      // q: vertices outside gone+v reachable from v through gone.
      Mask seen = Mask{1} << v, frontier = seen, out = 0;
      while (frontier) {
        Mask next = 0;
        for (Mask x = frontier; x; x &= x - 1) next |= adj[std::countr_zero(x)];
        next &= ~seen;
        seen |= next;
        out |= next & ~gone;
        frontier = next & gone;
      }
      if (std::popcount(out) <= t) ok = rec(gone | (Mask{1} << v));
    }
    m = ok ? 1 : 2;
    return ok;
  };
  return rec(0);
}

}  // namespace

bool outerplanar_by_hamiltonian_cycle(const Graph& g) { return outerplanar_rec(g); }

bool treewidth_at_most_dp(const Graph& g, int t) {
  if (g.order() > kOracleLimit) throw InstanceTooLarge("oracle limit");
  return tw_dp(adjacency(g), g.order(), t);
}

bool outerplane_by_separating_cycles(const PlaneGraph& pg, const VertexSet& s) {
  const Graph& g = pg.graph();
  // K4 and K_{2,3} have no separating cycle yet no face meets every vertex.
  if (!outerplanar_by_hamiltonian_cycle(g.induced(s))) return false;
  std::vector<char> in = s.mask();
  in.resize(g.order(), 0);
  std::vector<int> path;
  std::vector<char> on(g.order(), 0);
  auto separating = [&]() {
    CycleSides cs = cycle_sides(pg, path);
    auto hit = [&](const std::vector<int>& side) {
      return std::any_of(side.begin(), side.end(), [&](int v) { return in[v] != 0; });
    };
    return hit(cs.strictly_a) && hit(cs.strictly_b);
  };
  std::function<bool(int)> rec = [&](int start) -> bool {
    int v = path.back();
    for (int w : g.neighbors(v)) {
      if (!in[w]) continue;
      if (w == start && path.size() >= 3 && path[1] < path.back()) {
        if (separating()) return true;
        continue;
      }
      if (w <= start || on[w]) continue;
      on[w] = 1;
      path.push_back(w);
      if (rec(start)) return true;
      path.pop_back();
      on[w] = 0;
    }
    return false;
  };
  for (int start : s) {
    path.assign(1, start);
    on[start] = 1;
    bool found = rec(start);
    on[start] = 0;
    if (found) return false;
  }
  return true;
}

int maxleaf_by_spanning_trees(const Graph& g) {
  int n = g.order();
  if (n < 3) throw BadParameter("maxleaf needs n >= 3");
  if (!is_connected(g)) throw BadParameter("maxleaf needs a connected graph");
  auto edges = g.edges();
  int m = static_cast<int>(edges.size());
  std::vector<char> forbidden(m, 0), in_tree(n, 0);
  std::vector<int> deg(n, 0);
  int best = 0, tree_size = 1;
  in_tree[0] = 1;

  auto reachable_all = [&]() {
    std::vector<char> seen(in_tree);
    bool grew = true;
    while (grew) {
      grew = false;
      for (int e = 0; e < m; ++e) {
        if (forbidden[e]) continue;
        auto [u, v] = edges[e];
        if (seen[u] != seen[v]) {
          seen[u] = seen[v] = 1;
          grew = true;
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
  };

  std::function<void()> rec = [&]() {
    int internal = 0;
    for (int v = 0; v < n; ++v) internal += deg[v] >= 2;
    if (n - internal <= best) return;
    if (tree_size == n) {
      int leaves = 0;
      for (int v = 0; v < n; ++v) leaves += deg[v] == 1;
      best = std::max(best, leaves);
      return;
    }
    int pick = -1;
    for (int e = 0; e < m && pick < 0; ++e) {
      if (forbidden[e]) continue;
      auto [u, v] = edges[e];
      if (in_tree[u] != in_tree[v]) pick = e;
    }
    if (pick < 0) return;
    auto [u, v] = edges[pick];
    int inside = in_tree[u] ? u : v, outside = in_tree[u] ? v : u;
    in_tree[outside] = 1;
    ++deg[inside];
    ++deg[outside];
    ++tree_size;
    rec();
    --tree_size;
    --deg[inside];
    --deg[outside];
    in_tree[outside] = 0;
    forbidden[pick] = 1;
    if (reachable_all()) rec();
    forbidden[pick] = 0;
  };
  rec();
  return best;
}

SolveResult brute_force(const Graph& g, const PlaneGraph* pg, InvariantKind kind) {
  int n = g.order();
  if (n > kOracleLimit) throw InstanceTooLarge("oracle handles at most 22 vertices");
  SolveResult r;
  if (kind.tag == Kind::maxleaf) {
    r.value = maxleaf_by_spanning_trees(g);
    return r;
  }
  auto adj = adjacency(g);
  std::function<bool(Mask)> ok;
  switch (kind.tag) {
    case Kind::f:
      ok = [&](Mask vm) {
        int c = 0;
        VertexSet s = decode(n, vm);
        Graph sub = g.induced(s);
        component_ids(sub, &c);
        return sub.size() == sub.order() - c;
      };
      break;
    case Kind::s_o:
      ok = [&](Mask vm) { return outerplanar_by_hamiltonian_cycle(g.induced(decode(n, vm))); };
      break;
    case Kind::s_k4:
      ok = [&](Mask vm) { return treewidth_at_most_dp(g.induced(decode(n, vm)), 2); };
      break;
    case Kind::tw_le_t:
      ok = [&](Mask vm) { return treewidth_at_most_dp(g.induced(decode(n, vm)), kind.t); };
      break;
    case Kind::s_oprime:
      if (!pg) throw BadParameter("s_oprime needs an embedded graph");
      ok = [&](Mask vm) { return outerplane_by_separating_cycles(*pg, decode(n, vm)); };
      break;
    case Kind::gamma:
      ok = [&](Mask vm) {
        Mask s = to_vertex_mask(n, vm), cov = s;
        for (Mask f = s; f; f &= f - 1) cov |= adj[std::countr_zero(f)];
        return std::popcount(cov) == n;
      };
      break;
    case Kind::gamma_t:
      for (int v = 0; v < n; ++v)
        if (adj[v] == 0) throw NoTotalDominatingSet("isolated vertex");
      ok = [&](Mask vm) {
        Mask s = to_vertex_mask(n, vm), cov = 0;
        for (Mask f = s; f; f &= f - 1) cov |= adj[std::countr_zero(f)];
        return std::popcount(cov) == n;
      };
      break;
    case Kind::gamma_c:
      ok = [&](Mask vm) {
        Mask s = to_vertex_mask(n, vm), cov = s;
        for (Mask f = s; f; f &= f - 1) cov |= adj[std::countr_zero(f)];
        return std::popcount(cov) == n && connected_within(adj, s);
      };
      break;
    default: break;
  }
  Mask found = 0;
  bool any = false;
  auto visit = [&](Mask m) {
    if (!ok(m)) return false;
    found = m;
    any = true;
    return true;
  };
  if (kind.maximizes()) {
    for (int k = n; k >= 0 && !any; --k) for_each_combination(n, k, visit);
  } else {
    for (int k = 1; k <= n && !any; ++k) for_each_combination(n, k, visit);
  }
  if (!any) throw Error("oracle found no feasible set");
  r.witness = decode(n, found);
  r.value = r.witness.size();
  return r;
}

}  // namespace indsub::oracle
