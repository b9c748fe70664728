#include "indsub/solvers.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <memory>
#include <mutex>
#include <thread>

#include "indsub/errors.hpp"
#include "indsub/recognizers.hpp"
#include "indsub/treewidth.hpp"

namespace indsub {

InvariantKind InvariantKind::parse(std::string_view name, int t) {
  if (name == "f") return {Kind::f, 0};
  if (name == "so" || name == "s_o") return {Kind::s_o, 0};
  if (name == "soprime" || name == "s_oprime") return {Kind::s_oprime, 0};
  if (name == "sk4" || name == "s_K4") return {Kind::s_k4, 0};
  if (name == "twle" || name == "tw_le_t") {
    if (t < 1) throw BadParameter("tw_le_t needs t >= 1");
    return {Kind::tw_le_t, t};
  }
  if (name == "gamma") return {Kind::gamma, 0};
  if (name == "gammat" || name == "gamma_t") return {Kind::gamma_t, 0};
  if (name == "gammac" || name == "gamma_c") return {Kind::gamma_c, 0};
  if (name == "maxleaf") return {Kind::maxleaf, 0};
  throw BadParameter("unknown invariant '" + std::string(name) + "'");
}

std::string InvariantKind::name() const {
  switch (tag) {
    case Kind::f: return "f";
    case Kind::s_o: return "s_o";
    case Kind::s_oprime: return "s_oprime";
    case Kind::s_k4: return "s_K4";
    case Kind::tw_le_t: return "tw_le_" + std::to_string(t);
    case Kind::gamma: return "gamma";
    case Kind::gamma_t: return "gamma_t";
    case Kind::gamma_c: return "gamma_c";
    case Kind::maxleaf: return "maxleaf";
  }
  return "?";
}

bool InvariantKind::maximizes() const {
  return tag != Kind::gamma && tag != Kind::gamma_t && tag != Kind::gamma_c;
}

std::vector<InvariantKind> all_kinds(int t) {
  return {{Kind::f, 0},     {Kind::s_o, 0},     {Kind::s_oprime, 0},
          {Kind::s_k4, 0},  {Kind::tw_le_t, t}, {Kind::gamma, 0},
          {Kind::gamma_t, 0}, {Kind::gamma_c, 0}, {Kind::maxleaf, 0}};
}

std::string to_string(BoundDirection b) {
  switch (b) {
    case BoundDirection::exact: return "exact";
    case BoundDirection::lower: return "lower";
    case BoundDirection::upper: return "upper";
  }
  return "?";
}

bool induced_satisfies(const Graph& g, const PlaneGraph* pg, InvariantKind kind, const VertexSet& s) {
  switch (kind.tag) {
    case Kind::f: return is_forest(g.induced(s));
    case Kind::s_o: return is_outerplanar(g.induced(s));
    case Kind::s_k4: return is_k4_minor_free(g.induced(s));
    case Kind::tw_le_t: return treewidth_at_most(g.induced(s), kind.t);
    case Kind::s_oprime:
      if (!pg) throw BadParameter("s_oprime needs an embedded graph");
      return is_outerplane(*pg, s);
    default: throw BadParameter(kind.name() + " is not an induced-subgraph predicate");
  }
}

bool dominates(const Graph& g, Domination variant, const VertexSet& s) {
  switch (variant) {
    case Domination::plain: return is_dominating(g, s);
    case Domination::total: return is_total_dominating(g, s);
    case Domination::connected: return is_connected_dominating(g, s);
  }
  return false;
}

namespace {

using Clock = std::chrono::steady_clock;

class Control {
 public:
  explicit Control(const Budget& b)
      : max_nodes_(b.max_nodes),
        start_(Clock::now()),
        deadline_(start_ + std::chrono::duration_cast<Clock::duration>(
                               std::chrono::duration<double>(b.max_seconds))) {}

  // False once any budget is exhausted.
  bool tick() {
    if (stop_.load(std::memory_order_relaxed)) return false;
    std::uint64_t k = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (k > max_nodes_ || ((k & 1023) == 0 && Clock::now() > deadline_)) {
      stop_ = true;
      return false;
    }
    return true;
  }
  bool stopped() const { return stop_; }
  std::uint64_t nodes() const { return nodes_; }
  std::chrono::milliseconds elapsed() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_);
  }

 private:
  std::uint64_t max_nodes_;
  Clock::time_point start_, deadline_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> stop_{false};
};

// Incumbent shared by all workers.
struct Incumbent {
  std::atomic<int> value;
  std::mutex mu;
  std::vector<char> in;
  bool found = false;
  explicit Incumbent(int v) : value(v) {}
};

// ---- maximum induced subgraph ----

class Check {
 public:
  virtual ~Check() = default;
  virtual bool push(int v) = 0;
  virtual void pop() = 0;
};

// Forest test by union-find with rollback.
class ForestCheck : public Check {
 public:
  explicit ForestCheck(const Graph& g) : g_(g), parent_(g.order()), size_(g.order(), 1), in_(g.order(), 0) {
    for (int v = 0; v < g.order(); ++v) parent_[v] = v;
  }
  bool push(int v) override {
    std::size_t mark = undo_.size();
    for (int w : g_.neighbors(v)) {
      if (!in_[w]) continue;
      int a = find(v), b = find(w);
      if (a == b) {
        rollback(mark);
        return false;
      }
      if (size_[a] < size_[b]) std::swap(a, b);
      parent_[b] = a;
      size_[a] += size_[b];
      undo_.push_back(b);
    }
    in_[v] = 1;
    marks_.push_back(mark);
    stack_.push_back(v);
    return true;
  }
  void pop() override {
    in_[stack_.back()] = 0;
    stack_.pop_back();
    rollback(marks_.back());
    marks_.pop_back();
  }

 private:
  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }
  void rollback(std::size_t mark) {
    while (undo_.size() > mark) {
      int b = undo_.back();
      undo_.pop_back();
      int a = parent_[b];
      size_[a] -= size_[b];
      parent_[b] = b;
    }
  }
  const Graph& g_;
  std::vector<int> parent_, size_;
  std::vector<char> in_;
  std::vector<int> undo_, stack_;
  std::vector<std::size_t> marks_;
};

class PredicateCheck : public Check {
 public:
  PredicateCheck(int n, std::function<bool(const VertexSet&)> pred) : n_(n), pred_(std::move(pred)) {}
  bool push(int v) override {
    cur_.push_back(v);
    if (pred_(VertexSet(n_, cur_))) return true;
    cur_.pop_back();
    return false;
  }
  void pop() override { cur_.pop_back(); }

 private:
  int n_;
  std::function<bool(const VertexSet&)> pred_;
  std::vector<int> cur_;
};

using CheckFactory = std::function<std::unique_ptr<Check>()>;

class MaxSearch {
 public:
  MaxSearch(int n, Check& check, Control& ctl, Incumbent& inc, int target)
      : n_(n), check_(check), ctl_(ctl), inc_(inc), target_(target), in_(n, 0) {}

  void run(int from, int size) { dfs(from, size); }
  void preset(int v) { in_[v] = 1; }

 private:
  void dfs(int i, int size) {
    if (!ctl_.tick()) return;
    int bound = size + n_ - i;
    int best = inc_.value.load(std::memory_order_relaxed);
    if (best < 0 ? bound < target_ : bound <= best) return;
    if (i == n_) {
      std::lock_guard lock(inc_.mu);
      if (size > inc_.value) {
        inc_.value = size;
        inc_.in = in_;
        inc_.found = true;
      }
      return;
    }
    dfs(i + 1, size);
    if (check_.push(i)) {
      in_[i] = 1;
      dfs(i + 1, size + 1);
      in_[i] = 0;
      check_.pop();
    }
  }

  int n_;
  Check& check_;
  Control& ctl_;
  Incumbent& inc_;
  int target_;
  std::vector<char> in_;
};

// Feasible prefixes of the first `depth` vertices, in lexicographic order.
std::vector<std::vector<char>> max_prefixes(int depth, const CheckFactory& make) {
  std::vector<std::vector<char>> out;
  auto check = make();
  std::vector<char> cur;
  std::function<void(int)> rec = [&](int i) {
    if (i == depth) {
      out.push_back(cur);
      return;
    }
    cur.push_back(0);
    rec(i + 1);
    cur.back() = 1;
    if (check->push(i)) {
      rec(i + 1);
      check->pop();
    }
    cur.pop_back();
  };
  rec(0);
  return out;
}

template <typename Worker>
void run_tasks(std::size_t tasks, int threads, Worker&& work) {
  if (threads <= 1 || tasks <= 1) {
    for (std::size_t t = 0; t < tasks; ++t) work(t);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int k = 0; k < threads; ++k)
    pool.emplace_back([&] {
      for (std::size_t t = next++; t < tasks; t = next++) work(t);
    });
  for (auto& th : pool) th.join();
}

SolveResult run_max(int n, const CheckFactory& make, const std::function<bool(const VertexSet&)>& pred,
                    const Budget& budget, const std::vector<VertexSet>& seeds) {
  Control ctl(budget);
  // Greedy lower bound: low degree first is irrelevant here; ascending ids.
  int lower = 0;
  VertexSet lower_set(n, std::vector<int>{});
  {
    auto c = make();
    std::vector<int> picked;
    for (int v = 0; v < n; ++v)
      if (c->push(v)) picked.push_back(v);
    lower = static_cast<int>(picked.size());
    lower_set = VertexSet(n, picked);
  }
  for (const VertexSet& s : seeds)
    if (s.universe() == n && s.size() > lower && pred(s)) {
      lower = s.size();
      lower_set = s;
    }

  Incumbent inc(-1);
  int threads = std::max(1, budget.threads);
  int depth = threads > 1 ? std::min(n, 10) : 0;
  auto prefixes = max_prefixes(depth, make);
  run_tasks(prefixes.size(), threads, [&](std::size_t t) {
    auto check = make();
    MaxSearch search(n, *check, ctl, inc, lower);
    int size = 0;
    for (int v = 0; v < depth; ++v)
      if (prefixes[t][v]) {
        check->push(v);
        search.preset(v);
        ++size;
      }
    search.run(depth, size);
  });

  SolveResult r;
  r.nodes_explored = ctl.nodes();
  r.elapsed = ctl.elapsed();
  r.optimal = !ctl.stopped();
  r.bound = r.optimal ? BoundDirection::exact : BoundDirection::lower;
  if (inc.found && inc.value >= lower) {
    r.value = inc.value;
    r.witness = VertexSet::from_mask(n, inc.in);
  } else {
    if (r.optimal) throw Error("search finished below its own lower bound");
    r.value = lower;
    r.witness = lower_set;
  }
  return r;
}

SolveResult max_impl(const Graph& g, const PlaneGraph* pg, InvariantKind kind, const Budget& budget,
                     const std::vector<VertexSet>& seeds) {
  if (!kind.maximizes() || kind.tag == Kind::maxleaf)
    throw BadParameter(kind.name() + " is not a maximum induced subgraph invariant");
  int n = g.order();
  auto pred = [&g, pg, kind](const VertexSet& s) { return induced_satisfies(g, pg, kind, s); };
  CheckFactory make;
  if (kind.tag == Kind::f || (kind.tag == Kind::tw_le_t && kind.t == 1))
    make = [&g] { return std::make_unique<ForestCheck>(g); };
  else
    make = [n, pred] { return std::make_unique<PredicateCheck>(n, pred); };
  return run_max(n, make, pred, budget, seeds);
}

// ---- minimum dominating sets ----

class DomSearch {
 public:
  DomSearch(const Graph& g, Domination var, Control& ctl, Incumbent& inc, int target)
      : g_(g), var_(var), ctl_(ctl), inc_(inc), target_(target), n_(g.order()),
        in_(n_, 0), cover_(n_, 0), undominated_(n_), bucket_(n_) {
    max_cover_ = 1;
    for (int u = 0; u < n_; ++u) {
      int last = var_ == Domination::total ? -1 : u;
      for (int w : g.neighbors(u)) last = std::max(last, w);
      if (last >= 0) bucket_[last].push_back(u);
      max_cover_ = std::max(max_cover_, g.degree(u) + (var_ == Domination::total ? 0 : 1));
    }
  }

  // Replays decisions for vertices 0..d-1; false if infeasible.
  bool replay(const std::vector<char>& prefix) {
    for (int i = 0; i < static_cast<int>(prefix.size()); ++i) {
      if (prefix[i]) add(i);
      if (!bucket_ok(i)) return false;
    }
    return true;
  }

  void run(int from) { dfs(from); }

 private:
  void add(int v) {
    in_[v] = 1;
    ++size_;
    if (var_ != Domination::total && cover_[v]++ == 0) --undominated_;
    for (int w : g_.neighbors(v))
      if (cover_[w]++ == 0) --undominated_;
  }
  void remove(int v) {
    in_[v] = 0;
    --size_;
    if (var_ != Domination::total && --cover_[v] == 0) ++undominated_;
    for (int w : g_.neighbors(v))
      if (--cover_[w] == 0) ++undominated_;
  }
  bool bucket_ok(int i) const {
    for (int u : bucket_[i])
      if (cover_[u] == 0) return false;
    return true;
  }
  // Chosen vertices must share a component of G[chosen + undecided].
  bool connectable(int i) {
    int first = -1;
    for (int v = 0; v < i; ++v)
      if (in_[v]) {
        first = v;
        break;
      }
    if (first < 0) return true;
    seen_.assign(n_, 0);
    stack_.assign(1, first);
    seen_[first] = 1;
    int reached = 1;
    while (!stack_.empty()) {
      int v = stack_.back();
      stack_.pop_back();
      for (int w : g_.neighbors(v))
        if (!seen_[w] && (w >= i || in_[w])) {
          seen_[w] = 1;
          if (w < i) ++reached;
          stack_.push_back(w);
        }
    }
    int chosen = 0;
    for (int v = 0; v < i; ++v) chosen += in_[v];
    return reached == chosen;
  }

  void dfs(int i) {
    if (!ctl_.tick()) return;
    int lb = (undominated_ + max_cover_ - 1) / max_cover_;
    int best = inc_.value.load(std::memory_order_relaxed);
    if (best < 0 ? size_ + lb > target_ : size_ + lb >= best) return;
    if (var_ == Domination::connected && !connectable(i)) return;
    if (i == n_) {
      if (undominated_ != 0 || size_ == 0) return;
      std::lock_guard lock(inc_.mu);
      if (inc_.value < 0 || size_ < inc_.value) {
        inc_.value = size_;
        inc_.in = in_;
        inc_.found = true;
      }
      return;
    }
    if (bucket_ok(i)) dfs(i + 1);
    add(i);
    dfs(i + 1);
    remove(i);
  }

  const Graph& g_;
  Domination var_;
  Control& ctl_;
  Incumbent& inc_;
  int target_;
  int n_;
  std::vector<char> in_;
  std::vector<int> cover_;
  int undominated_;
  int size_ = 0;
  int max_cover_;
  std::vector<std::vector<int>> bucket_;
  std::vector<char> seen_;
  std::vector<int> stack_;
};

VertexSet greedy_dominating(const Graph& g, Domination var) {
  int n = g.order();
  std::vector<char> in(n, 0), dom(n, 0);
  int left = n;
  auto gain = [&](int v) {
    int k = (var != Domination::total && !dom[v]) ? 1 : 0;
    for (int w : g.neighbors(v)) k += !dom[w];
    return k;
  };
  auto take = [&](int v) {
    in[v] = 1;
    if (var != Domination::total && !dom[v]) {
      dom[v] = 1;
      --left;
    }
    for (int w : g.neighbors(v))
      if (!dom[w]) {
        dom[w] = 1;
        --left;
      }
  };
  if (var == Domination::connected) {
    int start = 0;
    for (int v = 1; v < n; ++v)
      if (g.degree(v) > g.degree(start)) start = v;
    take(start);
    while (left > 0) {
      int pick = -1, best = -1;
      for (int v = 0; v < n; ++v) {
        if (in[v]) continue;
        bool touches = false;
        for (int w : g.neighbors(v)) touches |= in[w] != 0;
        if (!touches) continue;
        int k = gain(v);
        if (k > best) {
          best = k;
          pick = v;
        }
      }
      if (pick < 0) break;
      take(pick);
    }
    return VertexSet::from_mask(n, in);
  }
  while (left > 0) {
    int pick = -1, best = 0;
    for (int v = 0; v < n; ++v) {
      if (in[v] && var != Domination::total) continue;
      int k = gain(v);
      if (k > best) {
        best = k;
        pick = v;
      }
    }
    if (pick < 0) break;
    take(pick);
  }
  return VertexSet::from_mask(n, in);
}

// Internal vertices of a BFS tree: a connected dominating set.
VertexSet bfs_internal(const Graph& g) {
  int n = g.order();
  if (n <= 2) return VertexSet(n, std::vector<int>{0});
  std::vector<int> parent(n, -1), q{0};
  std::vector<char> seen(n, 0), internal(n, 0);
  seen[0] = 1;
  for (std::size_t i = 0; i < q.size(); ++i)
    for (int w : g.neighbors(q[i]))
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = q[i];
        internal[q[i]] = 1;
        q.push_back(w);
      }
  return VertexSet::from_mask(n, internal);
}

}  // namespace

SolveResult max_induced(const Graph& g, InvariantKind kind, const Budget& budget,
                        const std::vector<VertexSet>& seeds) {
  if (kind.needs_embedding()) throw BadParameter("s_oprime needs an embedded graph");
  return max_impl(g, nullptr, kind, budget, seeds);
}

SolveResult max_induced(const PlaneGraph& pg, InvariantKind kind, const Budget& budget,
                        const std::vector<VertexSet>& seeds) {
  return max_impl(pg.graph(), &pg, kind, budget, seeds);
}

SolveResult min_dominating(const Graph& g, Domination variant, const Budget& budget,
                           const std::vector<VertexSet>& seeds) {
  int n = g.order();
  if (n == 0) throw BadParameter("empty graph");
  if (variant == Domination::total)
    for (int v = 0; v < n; ++v)
      if (g.degree(v) == 0) throw NoTotalDominatingSet("vertex " + std::to_string(v) + " is isolated");
  if (variant == Domination::connected && !is_connected(g))
    throw BadParameter("connected domination needs a connected graph");

  Control ctl(budget);
  VertexSet upper_set = greedy_dominating(g, variant);
  if (variant == Domination::connected) {
    VertexSet alt = bfs_internal(g);
    if (alt.size() < upper_set.size()) upper_set = alt;
  }
  for (const VertexSet& s : seeds)
    if (s.universe() == n && s.size() < upper_set.size() && dominates(g, variant, s)) upper_set = s;
  int upper = upper_set.size();

  Incumbent inc(-1);
  int threads = std::max(1, budget.threads);
  int depth = threads > 1 ? std::min(n, 10) : 0;
  std::vector<std::vector<char>> prefixes;
  {
    std::vector<char> cur;
    std::function<void(int)> rec = [&](int i) {
      if (i == depth) {
        prefixes.push_back(cur);
        return;
      }
      for (char c : {0, 1}) {
        cur.push_back(c);
        rec(i + 1);
        cur.pop_back();
      }
    };
    rec(0);
  }
  run_tasks(prefixes.size(), threads, [&](std::size_t t) {
    DomSearch search(g, variant, ctl, inc, upper);
    if (search.replay(prefixes[t])) search.run(depth);
  });

  SolveResult r;
  r.nodes_explored = ctl.nodes();
  r.elapsed = ctl.elapsed();
  r.optimal = !ctl.stopped();
  r.bound = r.optimal ? BoundDirection::exact : BoundDirection::upper;
  if (inc.found && inc.value <= upper) {
    r.value = inc.value;
    r.witness = VertexSet::from_mask(n, inc.in);
  } else {
    if (r.optimal) throw Error("search finished above its own upper bound");
    r.value = upper;
    r.witness = upper_set;
  }
  return r;
}

SolveResult maxleaf(const Graph& g, const Budget& budget, const std::vector<VertexSet>& cds_seeds) {
  int n = g.order();
  if (n < 3) throw BadParameter("maxleaf needs n >= 3");
  SolveResult cds = min_dominating(g, Domination::connected, budget, cds_seeds);
  std::vector<char> in = cds.witness.mask(), placed(n, 0), internal(n, 0);
  SolveResult r;
  // BFS tree on the dominating set, then pendant edges to the rest.
  int root = cds.witness.members().front();
  std::vector<int> q{root};
  placed[root] = 1;
  for (std::size_t i = 0; i < q.size(); ++i)
    for (int w : g.neighbors(q[i]))
      if (in[w] && !placed[w]) {
        placed[w] = 1;
        r.tree_edges.emplace_back(std::min(q[i], w), std::max(q[i], w));
        q.push_back(w);
      }
  for (int v = 0; v < n; ++v) {
    if (in[v]) continue;
    for (int w : g.neighbors(v))
      if (in[w]) {
        r.tree_edges.emplace_back(std::min(v, w), std::max(v, w));
        break;
      }
  }
  std::sort(r.tree_edges.begin(), r.tree_edges.end());
  std::vector<int> deg(n, 0);
  for (auto [a, b] : r.tree_edges) {
    ++deg[a];
    ++deg[b];
  }
  std::vector<int> leaves;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) leaves.push_back(v);
  r.value = static_cast<int>(leaves.size());
  r.witness = VertexSet(n, leaves);
  r.optimal = cds.optimal;
  r.bound = cds.optimal ? BoundDirection::exact : BoundDirection::lower;
  r.nodes_explored = cds.nodes_explored;
  r.elapsed = cds.elapsed;
  return r;
}

SolveResult solve(const Graph& g, const PlaneGraph* pg, InvariantKind kind, const Budget& budget,
                  const std::vector<VertexSet>& seeds) {
  switch (kind.tag) {
    case Kind::gamma: return min_dominating(g, Domination::plain, budget, seeds);
    case Kind::gamma_t: return min_dominating(g, Domination::total, budget, seeds);
    case Kind::gamma_c: return min_dominating(g, Domination::connected, budget, seeds);
    case Kind::maxleaf: return maxleaf(g, budget, seeds);
    default: return max_impl(g, pg, kind, budget, seeds);
  }
}

}  // namespace indsub
