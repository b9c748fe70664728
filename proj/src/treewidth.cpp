#include "indsub/treewidth.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <unordered_set>

#include "indsub/errors.hpp"
#include "indsub/recognizers.hpp"

namespace indsub {

namespace {

using Mask = std::uint64_t;

std::optional<std::vector<int>> greedy_min_degree(const Graph& g, int t) {
  int n = g.order();
  std::vector<std::set<int>> a(n);
  for (int v = 0; v < n; ++v) a[v].insert(g.neighbors(v).begin(), g.neighbors(v).end());
  std::vector<char> alive(n, 1);
  std::vector<int> order;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (alive[v] && (pick < 0 || a[v].size() < a[pick].size())) pick = v;
    if (static_cast<int>(a[pick].size()) > t) return std::nullopt;
    for (int x : a[pick])
      for (int y : a[pick])
        if (x != y) a[x].insert(y);
    for (int x : a[pick]) a[x].erase(pick);
    a[pick].clear();
    alive[pick] = 0;
    order.push_back(pick);
  }
  return order;
}

class EliminationSearch {
 public:
  EliminationSearch(const Graph& g, int t) : n_(g.order()), t_(t), adj_(g.masks()) {
    full_ = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
  }

  std::optional<std::vector<int>> run() {
    if (!dfs(0)) return std::nullopt;
    return order_;
  }

 private:
  // Vertices outside gone+v reached from v through gone.
  int q_value(Mask gone, int v) const {
    Mask seen = Mask{1} << v, frontier = seen, out = 0;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= adj_[std::countr_zero(f)];
      next &= ~seen;
      seen |= next;
      out |= next & ~gone;
      frontier = next & gone;
    }
    return std::popcount(out);
  }

  bool dfs(Mask gone) {
    int left = n_ - std::popcount(gone);
    if (left <= t_ + 1) {
      for (Mask f = full_ & ~gone; f; f &= f - 1) order_.push_back(std::countr_zero(f));
      return true;
    }
    if (failed_.count(gone)) return false;
    for (Mask f = full_ & ~gone; f; f &= f - 1) {
      int v = std::countr_zero(f);
      if (q_value(gone, v) > t_) continue;
      order_.push_back(v);
      if (dfs(gone | (Mask{1} << v))) return true;
      order_.pop_back();
    }
    failed_.insert(gone);
    return false;
  }

  int n_, t_;
  std::vector<Mask> adj_;
  Mask full_ = 0;
  std::vector<int> order_;
  std::unordered_set<Mask> failed_;
};

}  // namespace

std::optional<std::vector<int>> elimination_order_within(const Graph& g, int t) {
  if (t < 0) throw BadParameter("negative width");
  if (auto greedy = greedy_min_degree(g, t)) return greedy;
  if (t <= 2) return std::nullopt;
  if (g.order() > kExactTreewidthLimit)
    throw InstanceTooLarge("exact treewidth limited to " + std::to_string(kExactTreewidthLimit) +
                           " vertices");
  return EliminationSearch(g, t).run();
}

bool treewidth_at_most(const Graph& g, int t) {
  if (t < 0) return g.order() == 0;
  if (g.order() <= t + 1) return true;
  if (t == 0) return g.size() == 0;
  if (t == 1) return is_forest(g);
  if (t == 2) return is_k4_minor_free(g);
  return elimination_order_within(g, t).has_value();
}

int treewidth_exact(const Graph& g) {
  if (g.order() > kExactTreewidthLimit) throw InstanceTooLarge("exact treewidth size limit");
  for (int t = 0;; ++t)
    if (treewidth_at_most(g, t)) return t;
}

Graph complete_to_ktree(const Graph& g, int k) {
  if (k < 1) throw BadParameter("k must be at least 1");
  int n = g.order();
  if (n <= k + 1) return complete_graph(n);
  auto order = elimination_order_within(g, k);
  if (!order) throw TreewidthExceeded("treewidth exceeds " + std::to_string(k));

  // Later-neighbour sets from the filled graph.
  std::vector<std::set<int>> a(n);
  for (int v = 0; v < n; ++v) a[v].insert(g.neighbors(v).begin(), g.neighbors(v).end());
  std::vector<std::vector<int>> later(n);
  for (int i = 0; i < n - (k + 1); ++i) {
    int v = (*order)[i];
    later[v].assign(a[v].begin(), a[v].end());
    for (int x : a[v])
      for (int y : a[v])
        if (x != y) a[x].insert(y);
    for (int x : a[v]) a[x].erase(v);
    a[v].clear();
  }

  Graph out(n);
  std::vector<std::vector<int>> cliques;
  std::vector<int> base(order->end() - (k + 1), order->end());
  std::sort(base.begin(), base.end());
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = i + 1; j < base.size(); ++j) out.add_edge(base[i], base[j]);
  cliques.push_back(base);
  for (int i = n - (k + 1) - 1; i >= 0; --i) {
    int v = (*order)[i];
    const auto& need = later[v];
    const std::vector<int>* host = nullptr;
    for (const auto& c : cliques)
      if (std::includes(c.begin(), c.end(), need.begin(), need.end())) {
        host = &c;
        break;
      }
    if (!host) throw Error("k-tree completion lost a clique");
    std::vector<int> attach = *host;
    for (auto it = attach.rbegin(); it != attach.rend(); ++it)
      if (!std::binary_search(need.begin(), need.end(), *it)) {
        attach.erase(std::next(it).base());
        break;
      }
    for (int x : attach) out.add_edge(v, x);
    attach.push_back(v);
    std::sort(attach.begin(), attach.end());
    cliques.push_back(std::move(attach));
  }
  return out;
}

}  // namespace indsub
