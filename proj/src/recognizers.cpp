#include "indsub/recognizers.hpp"

#include <algorithm>
#include <set>

#include "indsub/errors.hpp"

namespace indsub {

namespace {

using AdjSets = std::vector<std::set<int>>;

AdjSets adjacency_sets(const Graph& g) {
  AdjSets a(g.order());
  for (int v = 0; v < g.order(); ++v) a[v].insert(g.neighbors(v).begin(), g.neighbors(v).end());
  return a;
}

// Series-parallel reduction: drop degree <= 1, suppress degree 2.
bool reduces_to_empty(AdjSets a) {
  int n = static_cast<int>(a.size());
  std::vector<char> alive(n, 1);
  std::vector<int> work;
  for (int v = 0; v < n; ++v) work.push_back(v);
  int left = n;
  while (!work.empty()) {
    int v = work.back();
    work.pop_back();
    if (!alive[v] || a[v].size() > 2) continue;
    std::vector<int> nb(a[v].begin(), a[v].end());
    for (int w : nb) a[w].erase(v);
    a[v].clear();
    alive[v] = 0;
    --left;
    if (nb.size() == 2) {
      a[nb[0]].insert(nb[1]);
      a[nb[1]].insert(nb[0]);
    }
    for (int w : nb) work.push_back(w);
  }
  return left == 0;
}

bool block_completion_has_k113(const Graph& g, const std::vector<int>& block) {
  int b = static_cast<int>(block.size());
  std::vector<int> local(g.order(), -1);
  for (int i = 0; i < b; ++i) local[block[i]] = i;
  AdjSets h(b), done(b);
  for (int i = 0; i < b; ++i)
    for (int w : g.neighbors(block[i]))
      if (local[w] >= 0) h[i].insert(local[w]);
  done = h;
  std::vector<char> alive(b, 1);
  int left = b;
  // Greedy elimination of degree-2 vertices; the added edges complete the
  // block to a 2-tree that is outerplanar iff the block is.
  while (left > 3) {
    int v = -1;
    for (int i = 0; i < b; ++i)
      if (alive[i] && h[i].size() == 2) {
        v = i;
        break;
      }
    if (v < 0) return true;  // cannot happen for a K4-minor-free block
    int x = *h[v].begin(), y = *h[v].rbegin();
    h[x].erase(v);
    h[y].erase(v);
    h[v].clear();
    alive[v] = 0;
    --left;
    h[x].insert(y);
    h[y].insert(x);
    done[x].insert(y);
    done[y].insert(x);
  }
  for (int u = 0; u < b; ++u)
    for (int v : done[u]) {
      if (v < u) continue;
      int common = 0;
      for (int w : done[u])
        if (done[v].count(w) && ++common >= 3) return true;
    }
  return false;
}

}  // namespace

bool is_k4_minor_free(const Graph& g) { return reduces_to_empty(adjacency_sets(g)); }

bool is_outerplanar(const Graph& g) {
  if (!is_k4_minor_free(g)) return false;
  for (const auto& block : blocks(g))
    if (block.size() >= 4 && block_completion_has_k113(g, block)) return false;
  return true;
}

bool is_outerplanar_by_minors(const Graph& g, std::uint64_t node_budget) {
  if (has_minor(g, complete_graph(4), node_budget)) return false;
  return !has_minor(g, complete_bipartite(2, 3), node_budget);
}

bool has_k113_subgraph(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    const auto& a = g.neighbors(u);
    const auto& b = g.neighbors(v);
    int common = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] < b[j]) {
        ++i;
      } else if (a[i] > b[j]) {
        ++j;
      } else {
        if (++common >= 3) return true;
        ++i;
        ++j;
      }
    }
  }
  return false;
}

std::optional<KTreeOrder> is_ktree(const Graph& g, int k) {
  if (k < 1) throw BadParameter("k must be at least 1");
  int n = g.order();
  if (n < k + 1) return std::nullopt;
  long long expected = static_cast<long long>(k) * n - static_cast<long long>(k) * (k + 1) / 2;
  if (g.size() != expected) return std::nullopt;
  AdjSets a = adjacency_sets(g);
  std::vector<char> alive(n, 1);
  KTreeOrder order;
  int left = n;
  auto simplicial = [&](int v) {
    for (int x : a[v])
      for (int y : a[v])
        if (x < y && !a[x].count(y)) return false;
    return true;
  };
  while (left > k + 1) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (alive[v] && static_cast<int>(a[v].size()) == k && simplicial(v)) {
        pick = v;
        break;
      }
    if (pick < 0) return std::nullopt;
    for (int w : a[pick]) a[w].erase(pick);
    a[pick].clear();
    alive[pick] = 0;
    --left;
    order.elimination.push_back(pick);
  }
  for (int v = 0; v < n; ++v)
    if (alive[v]) {
      if (static_cast<int>(a[v].size()) != k) return std::nullopt;
      order.base.push_back(v);
    }
  return order;
}

CliqueTreeDelta clique_tree_delta(const Graph& g) {
  if (!is_ktree(g, 2)) throw NotATwoTree("input is not a 2-tree");
  CliqueTreeDelta d;
  for (auto [u, v] : g.edges())
    for (int w : g.neighbors(v))
      if (w > v && g.has_edge(u, w)) d.nodes.push_back({u, v, w});
  std::sort(d.nodes.begin(), d.nodes.end());
  d.adj.assign(d.nodes.size(), {});
  // Triangles through each edge are pairwise adjacent.
  std::vector<std::pair<Edge, int>> by_edge;
  for (int i = 0; i < static_cast<int>(d.nodes.size()); ++i) {
    auto [a, b, c] = d.nodes[i];
    by_edge.push_back({{a, b}, i});
    by_edge.push_back({{a, c}, i});
    by_edge.push_back({{b, c}, i});
  }
  std::sort(by_edge.begin(), by_edge.end());
  for (std::size_t i = 0; i < by_edge.size();) {
    std::size_t j = i;
    while (j < by_edge.size() && by_edge[j].first == by_edge[i].first) ++j;
    for (std::size_t x = i; x < j; ++x)
      for (std::size_t y = x + 1; y < j; ++y) {
        d.adj[by_edge[x].second].push_back(by_edge[y].second);
        d.adj[by_edge[y].second].push_back(by_edge[x].second);
      }
    i = j;
  }
  for (auto& l : d.adj) std::sort(l.begin(), l.end());
  return d;
}

bool is_plane_triangulation(const PlaneGraph& pg) {
  if (pg.order() < 3 || pg.components() != 1) return false;
  for (const Face& f : pg.faces())
    if (f.walks.size() != 1 || f.walks[0].size() != 3 || !f.isolated.empty()) return false;
  return true;
}

bool is_eulerian(const Graph& g) {
  if (!is_connected(g)) return false;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) % 2) return false;
  return true;
}

}  // namespace indsub
