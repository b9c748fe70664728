#include <algorithm>
#include <bit>
#include <string>

#include "indsub/errors.hpp"
#include "indsub/recognizers.hpp"

namespace indsub {

namespace {

using Mask = std::uint64_t;

class MinorSearch {
 public:
  MinorSearch(const Graph& g, const Graph& h, std::uint64_t budget)
      : n_(g.order()), k_(h.order()), adj_(g.masks()), budget_(budget), h_(h) {
    // Twin classes of h: a label may open only after its class predecessor.
    prev_twin_.assign(k_, -1);
    for (int j = 0; j < k_; ++j)
      for (int i = j - 1; i >= 0; --i)
        if (twins(i, j)) {
          prev_twin_[j] = i;
          break;
        }
    // Breadth-first vertex order keeps partial branch sets connected early.
    std::vector<char> seen(n_, 0);
    for (int s = 0; s < n_; ++s) {
      if (seen[s]) continue;
      std::vector<int> q{s};
      seen[s] = 1;
      for (std::size_t i = 0; i < q.size(); ++i) {
        order_.push_back(q[i]);
        for (int w : g.neighbors(q[i]))
          if (!seen[w]) {
            seen[w] = 1;
            q.push_back(w);
          }
      }
    }
    sets_.assign(k_, 0);
  }

  bool run() { return dfs(0, n_ == 64 ? ~Mask{0} : ((Mask{1} << n_) - 1)); }
  const std::vector<Mask>& sets() const { return sets_; }

 private:
  bool twins(int i, int j) const {
    for (int x = 0; x < k_; ++x) {
      if (x == i || x == j) continue;
      if (h_.has_edge(i, x) != h_.has_edge(j, x)) return false;
    }
    return true;
  }

  Mask reach(Mask from, Mask within) const {
    Mask seen = from & within;
    Mask frontier = seen;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= adj_[std::countr_zero(f)];
      next &= within & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen;
  }

  Mask neighborhood(Mask s) const {
    Mask out = 0;
    for (Mask f = s; f; f &= f - 1) out |= adj_[std::countr_zero(f)];
    return out;
  }

  bool feasible(Mask free) {
    int empty = 0;
    std::vector<Mask> ext(k_, 0);
    for (int i = 0; i < k_; ++i) {
      if (!sets_[i]) {
        ++empty;
        continue;
      }
      Mask lowest = sets_[i] & (~sets_[i] + 1);
      Mask r = reach(lowest, sets_[i] | free);
      if ((r & sets_[i]) != sets_[i]) return false;
      ext[i] = r;
    }
    if (empty > std::popcount(free)) return false;
    for (int i = 0; i < k_; ++i)
      for (int j : h_.neighbors(i)) {
        if (j < i || !sets_[i] || !sets_[j]) continue;
        if ((ext[i] & ext[j] & free) == 0 && (neighborhood(ext[i]) & ext[j]) == 0) return false;
      }
    return true;
  }

  bool dfs(int idx, Mask free) {
    if (++nodes_ > budget_) throw InstanceTooLarge("minor search exceeded node budget");
    if (!feasible(free)) return false;
    if (idx == n_) return true;  // feasible() with free == 0 is a full check
    int v = order_[idx];
    Mask bit = Mask{1} << v;
    Mask rest = free & ~bit;
    for (int i = 0; i < k_; ++i) {
      if (!sets_[i] && prev_twin_[i] >= 0 && !sets_[prev_twin_[i]]) continue;
      sets_[i] |= bit;
      if (dfs(idx + 1, rest)) return true;
      sets_[i] &= ~bit;
    }
    return dfs(idx + 1, rest);
  }

  int n_, k_;
  std::vector<Mask> adj_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  const Graph& h_;
  std::vector<int> prev_twin_;
  std::vector<int> order_;
  std::vector<Mask> sets_;
};

}  // namespace

std::optional<MinorModel> has_minor(const Graph& g, const Graph& h, std::uint64_t node_budget) {
  if (h.order() > 10) throw PatternTooLarge("pattern has more than 10 vertices");
  if (g.order() > 64) throw InstanceTooLarge("minor search supports at most 64 vertices");
  if (h.order() > g.order() || h.size() > g.size()) return std::nullopt;
  if (h.order() == 0) return MinorModel{h, {}};
  MinorSearch search(g, h, node_budget);
  if (!search.run()) return std::nullopt;
  MinorModel model{h, {}};
  for (Mask s : search.sets()) {
    std::vector<int> ids;
    for (Mask f = s; f; f &= f - 1) ids.push_back(std::countr_zero(f));
    model.branch_sets.emplace_back(g.order(), std::move(ids));
  }
  if (!validate_minor_model(g, model)) throw Error("minor search produced an invalid model");
  return model;
}

bool validate_minor_model(const Graph& g, const MinorModel& model) {
  const Graph& h = model.pattern;
  if (static_cast<int>(model.branch_sets.size()) != h.order()) return false;
  std::vector<int> owner(g.order(), -1);
  for (int i = 0; i < h.order(); ++i) {
    const VertexSet& s = model.branch_sets[i];
    if (s.empty() || !induces_connected(g, s)) return false;
    for (int v : s) {
      if (v >= g.order() || owner[v] >= 0) return false;
      owner[v] = i;
    }
  }
  for (auto [i, j] : h.edges()) {
    bool joined = false;
    for (int v : model.branch_sets[i]) {
      for (int w : g.neighbors(v))
        if (owner[w] == j) {
          joined = true;
          break;
        }
      if (joined) break;
    }
    if (!joined) return false;
  }
  return true;
}

}  // namespace indsub
