#include "indsub/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "indsub/errors.hpp"

namespace indsub {

VertexSet::VertexSet(int universe, std::vector<int> members)
    : universe_(universe), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && (members_.front() < 0 || members_.back() >= universe_))
    throw BadParameter("vertex id out of range");
}

VertexSet VertexSet::all(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return VertexSet(n, std::move(v));
}

VertexSet VertexSet::from_mask(int n, const std::vector<char>& in) {
  std::vector<int> v;
  for (int i = 0; i < n; ++i)
    if (in[i]) v.push_back(i);
  return VertexSet(n, std::move(v));
}

bool VertexSet::contains(int v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

VertexSet VertexSet::complement() const {
  std::vector<int> out;
  std::size_t j = 0;
  for (int v = 0; v < universe_; ++v) {
    if (j < members_.size() && members_[j] == v)
      ++j;
    else
      out.push_back(v);
  }
  return VertexSet(universe_, std::move(out));
}

VertexSet VertexSet::united(const VertexSet& other) const {
  std::vector<int> out;
  std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                 other.members_.end(), std::back_inserter(out));
  return VertexSet(std::max(universe_, other.universe_), std::move(out));
}

VertexSet VertexSet::minus(const VertexSet& other) const {
  std::vector<int> out;
  std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                      other.members_.end(), std::back_inserter(out));
  return VertexSet(universe_, std::move(out));
}

std::vector<char> VertexSet::mask() const {
  std::vector<char> m(universe_, 0);
  for (int v : members_) m[v] = 1;
  return m;
}

Graph::Graph(int n) {
  if (n < 0) throw BadParameter("negative vertex count");
  adj_.resize(n);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges)
    if (!g.add_edge(u, v))
      throw BadParameter("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= order()) throw BadParameter("vertex " + std::to_string(v) + " out of range");
}

bool Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw BadParameter("loop at " + std::to_string(u));
  auto& a = adj_[u];
  auto it = std::lower_bound(a.begin(), a.end(), v);
  if (it != a.end() && *it == v) return false;
  a.insert(it, v);
  auto& b = adj_[v];
  b.insert(std::lower_bound(b.begin(), b.end(), u), u);
  ++m_;
  return true;
}

bool Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  auto& a = adj_[u];
  auto it = std::lower_bound(a.begin(), a.end(), v);
  if (it == a.end() || *it != v) return false;
  a.erase(it);
  auto& b = adj_[v];
  b.erase(std::lower_bound(b.begin(), b.end(), u));
  --m_;
  return true;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= order() || v >= order()) return false;
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < order(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(const VertexSet& s) const {
  std::vector<int> id(order(), -1);
  int k = 0;
  for (int v : s) id[v] = k++;
  Graph h(k);
  for (int v : s)
    for (int w : adj_[v])
      if (v < w && id[w] >= 0) h.add_edge(id[v], id[w]);
  return h;
}

std::vector<std::uint64_t> Graph::masks() const {
  if (order() > 64) throw InstanceTooLarge("bitmask adjacency needs n <= 64");
  std::vector<std::uint64_t> m(order(), 0);
  for (int v = 0; v < order(); ++v)
    for (int w : adj_[v]) m[v] |= std::uint64_t{1} << w;
  return m;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

Graph cycle_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

Graph k113() {
  Graph g(5);
  g.add_edge(0, 1);
  for (int x = 2; x < 5; ++x) {
    g.add_edge(0, x);
    g.add_edge(1, x);
  }
  return g;
}

std::vector<int> component_ids(const Graph& g, int* count) {
  std::vector<int> comp(g.order(), -1);
  std::vector<int> stack;
  int c = 0;
  for (int s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v))
        if (comp[w] < 0) {
          comp[w] = c;
          stack.push_back(w);
        }
    }
    ++c;
  }
  if (count) *count = c;
  return comp;
}

bool is_connected(const Graph& g) {
  int c = 0;
  component_ids(g, &c);
  return c <= 1;
}

bool is_forest(const Graph& g) {
  int c = 0;
  component_ids(g, &c);
  return g.size() == g.order() - c;
}

bool induces_connected(const Graph& g, const VertexSet& s) {
  if (s.size() <= 1) return true;
  std::vector<char> in = s.mask(), seen(g.order(), 0);
  std::vector<int> stack{s.members().front()};
  seen[stack.back()] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v))
      if (in[w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == s.size();
}

bool is_dominating(const Graph& g, const VertexSet& s) {
  std::vector<char> in = s.mask();
  for (int v = 0; v < g.order(); ++v) {
    if (in[v]) continue;
    bool hit = false;
    for (int w : g.neighbors(v))
      if (in[w]) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

bool is_total_dominating(const Graph& g, const VertexSet& s) {
  std::vector<char> in = s.mask();
  for (int v = 0; v < g.order(); ++v) {
    bool hit = false;
    for (int w : g.neighbors(v))
      if (in[w]) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

bool is_connected_dominating(const Graph& g, const VertexSet& s) {
  if (s.empty()) return g.order() == 0;
  return is_dominating(g, s) && induces_connected(g, s);
}

std::vector<std::vector<int>> blocks(const Graph& g) {
  // Iterative Hopcroft-Tarjan over an edge stack.
  int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<std::size_t> it(n, 0);
  std::vector<Edge> estack;
  std::vector<std::vector<int>> out;
  int timer = 0;
  for (int root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    disc[root] = low[root] = timer++;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int v = stack.back();
      if (it[v] < g.neighbors(v).size()) {
        int w = g.neighbors(v)[it[v]++];
        if (disc[w] < 0) {
          parent[w] = v;
          disc[w] = low[w] = timer++;
          estack.emplace_back(v, w);
          stack.push_back(w);
        } else if (w != parent[v] && disc[w] < disc[v]) {
          low[v] = std::min(low[v], disc[w]);
          estack.emplace_back(v, w);
        }
        continue;
      }
      stack.pop_back();
      int p = parent[v];
      if (p < 0) continue;
      low[p] = std::min(low[p], low[v]);
      if (low[v] >= disc[p]) {
        std::vector<int> blk;
        while (true) {
          Edge e = estack.back();
          estack.pop_back();
          blk.push_back(e.first);
          blk.push_back(e.second);
          if (e.first == p && e.second == v) break;
        }
        std::sort(blk.begin(), blk.end());
        blk.erase(std::unique(blk.begin(), blk.end()), blk.end());
        out.push_back(std::move(blk));
      }
    }
  }
  return out;
}

}  // namespace indsub
