#include "indsub/claims.hpp"

#include <algorithm>
#include <limits>
#include <atomic>
#include <bit>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "indsub/embedding_builder.hpp"
#include "indsub/errors.hpp"
#include "indsub/extractors.hpp"
#include "indsub/families.hpp"
#include "indsub/graph_io.hpp"
#include "indsub/oracle.hpp"
#include "indsub/recognizers.hpp"
#include "indsub/solvers.hpp"
#include "indsub/treewidth.hpp"

namespace indsub {

std::string to_string(Tier t) {
  switch (t) {
    case Tier::fast: return "fast";
    case Tier::standard: return "standard";
    case Tier::long_run: return "long";
  }
  return "?";
}

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::timeout: return "TIMEOUT";
    case Status::skipped: return "SKIPPED";
  }
  return "?";
}

Tier parse_tier(const std::string& s) {
  if (s == "fast") return Tier::fast;
  if (s == "standard") return Tier::standard;
  if (s == "long") return Tier::long_run;
  throw BadParams("unknown tier '" + s + "'");
}

namespace {

using Clock = std::chrono::steady_clock;

class Params {
 public:
  explicit Params(const ClaimParams& p) : p_(p) {}
  std::int64_t operator[](const std::string& key) const {
    for (const auto& [k, v] : p_)
      if (k == key) return v;
    throw BadParams("missing parameter " + key);
  }
  int get(const std::string& key, std::int64_t lo, std::int64_t hi) const {
    std::int64_t v = (*this)[key];
    if (v < lo || v > hi)
      throw BadParams(key + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return static_cast<int>(v);
  }

 private:
  const ClaimParams& p_;
};

// Sizes cycle through nmin..n so a run covers every order.
int order_for(int nmin, int n, int i) { return nmin + i % (n - nmin + 1); }

int ceil_div(int a, int b) { return (a + b - 1) / b; }

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

void fail(ClaimReport& r, const std::string& why, const std::string& instance) {
  if (r.status == Status::fail) return;  // keep the first violation
  r.status = Status::fail;
  r.detail = why;
  r.instance = instance;
}

// Seeded connected graph: random recursive tree plus each other pair with
// probability p.
Graph random_connected(int n, std::uint64_t seed, double p) {
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v, std::uniform_int_distribution<int>(0, v - 1)(rng));
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

// Every proper (k+1)-colouring of g as a partition, canonical up to colour
// names; stops after `limit` partitions.
std::vector<std::vector<VertexSet>> colour_partitions(const Graph& g, int k, int limit) {
  int n = g.order();
  std::vector<int> col(n, -1);
  std::vector<std::vector<VertexSet>> out;
  std::function<void(int, int)> rec = [&](int v, int used) {
    if (static_cast<int>(out.size()) >= limit) return;
    if (v == n) {
      if (used != k + 1) return;
      std::vector<std::vector<int>> cls(k + 1);
      for (int u = 0; u < n; ++u) cls[col[u]].push_back(u);
      std::vector<VertexSet> part;
      for (auto& c : cls) part.emplace_back(n, c);
      std::sort(part.begin(), part.end());
      out.push_back(part);
      return;
    }
    for (int c = 0; c < std::min(used + 1, k + 1); ++c) {
      bool ok = true;
      for (int w : g.neighbors(v))
        if (w < v && col[w] == c) ok = false;
      if (!ok) continue;
      col[v] = c;
      rec(v + 1, std::max(used, c + 1));
      col[v] = -1;
    }
  };
  rec(0, 0);
  return out;
}

// ---------------------------------------------------------------- C1

void check_partition(const Params& p, ClaimReport& r) {
  int k = p.get("k", 1, 4), n = p.get("n", k + 1, 14), nmin = p.get("nmin", k + 1, n);
  int seeds = p.get("seeds", 1, 100000), seed0 = p.get("seed0", 0, 1 << 30);
  r.expected = {"unique (k+1)-colouring equals ktree_partition; unions of t classes are (t-1)-trees", {}};
  int checked = 0;
  for (int i = 0; i < seeds; ++i) {
    int ni = order_for(nmin, n, i);
    Graph g = random_ktree(ni, k, seed0 + i);
    Partition part = ktree_partition(g, k);
    auto brute = colour_partitions(g, k, 2);
    std::vector<VertexSet> mine = part.classes;
    std::sort(mine.begin(), mine.end());
    if (brute.size() != 1 || brute[0] != mine) {
      fail(r, "seed " + std::to_string(seed0 + i) + ": " + std::to_string(brute.size()) +
                  " colourings, partition mismatch", write_graph(g));
      break;
    }
    // Every union of t classes, via subsets of class indices.
    for (int mask = 1; mask < (1 << (k + 1)); ++mask) {
      int t = std::popcount(static_cast<unsigned>(mask));
      VertexSet u(ni, std::vector<int>{});
      for (int c = 0; c <= k; ++c)
        if (mask >> c & 1) u = u.united(mine[c]);
      Graph h = g.induced(u);
      bool ok = t == 1 ? h.size() == 0 : is_ktree(h, t - 1).has_value();
      if (!ok) {
        fail(r, "seed " + std::to_string(seed0 + i) + ": union of " + std::to_string(t) +
                    " classes is not a " + std::to_string(t - 1) + "-tree", write_graph(g));
        break;
      }
    }
    if (r.status == Status::fail) break;
    ++checked;
  }
  r.computed = {checked};
  if (r.status != Status::fail) r.detail = std::to_string(checked) + " k-trees checked";
}

// ---------------------------------------------------------------- C2..C4

void check_bounded_tw(const Params& p, ClaimReport& r) {
  int s = p.get("s", 1, 6), t = p.get("t", 1, s), n = p.get("n", s + 1, 200), nmin = p.get("nmin", s + 1, n);
  int seeds = p.get("seeds", 1, 100000), seed0 = p.get("seed0", 0, 1 << 30);
  int exact_upto = p.get("exact_upto", 0, 16);
  r.expected = {">= ceil((t+1)n/(s+1)) with treewidth <= t", {}};
  int worst = 1 << 30;
  for (int i = 0; i < seeds && r.status != Status::fail; ++i) {
    int ni = order_for(nmin, n, i);
    Graph g = random_ktree(ni, s, seed0 + i);
    VertexSet out = extract_bounded_tw(g, s, t);
    int need = ceil_div((t + 1) * ni, s + 1);
    Graph h = g.induced(out);
    bool valid = t == 1 ? is_forest(h) : treewidth_at_most(h, t);
    worst = std::min(worst, out.size() - need);
    if (!valid || out.size() < need) {
      r.witness = out;
      fail(r, "seed " + std::to_string(seed0 + i) + ": size " + std::to_string(out.size()) + " need " +
                  std::to_string(need) + (valid ? "" : ", treewidth exceeded"), write_graph(g));
    } else if (ni <= exact_upto) {
      int opt = max_induced(g, InvariantKind{Kind::tw_le_t, t}).value;
      if (out.size() > opt) fail(r, "extracted set beats the exact optimum", write_graph(g));
    }
  }
  r.computed = {worst};
  if (r.status != Status::fail) r.detail = "minimum slack over instances: " + std::to_string(worst);
}

void check_outerplanar45(const Params& p, ClaimReport& r) {
  int n = p.get("n", 3, 200), nmin = p.get("nmin", 3, n);
  int seeds = p.get("seeds", 1, 100000), seed0 = p.get("seed0", 0, 1 << 30);
  int exact_upto = p.get("exact_upto", 0, 16);
  r.expected = {">= ceil(4n/5), outerplanar", {}};
  int worst = 1 << 30;
  for (int i = 0; i < seeds && r.status != Status::fail; ++i) {
    int ni = order_for(nmin, n, i);
    Graph g = random_2tree(ni, seed0 + i).graph();
    VertexSet out = extract_outerplanar_4_5(g);
    int need = outerplanar_target(ni);
    bool valid = is_outerplanar(g.induced(out));
    worst = std::min(worst, out.size() - need);
    if (!valid || out.size() < need) {
      r.witness = out;
      fail(r, "seed " + std::to_string(seed0 + i) + ": size " + std::to_string(out.size()) + " need " +
                  std::to_string(need) + (valid ? "" : ", not outerplanar"), write_graph(g));
    } else if (ni <= exact_upto && out.size() > max_induced(g, InvariantKind{Kind::s_o}).value) {
      fail(r, "extracted set beats the exact optimum", write_graph(g));
    }
  }
  r.computed = {worst};
  if (r.status != Status::fail) r.detail = "minimum slack over instances: " + std::to_string(worst);
}

void check_outerplane23(const Params& p, ClaimReport& r) {
  int n = p.get("n", 3, 200), nmin = p.get("nmin", 3, n);
  int seeds = p.get("seeds", 1, 100000), seed0 = p.get("seed0", 0, 1 << 30);
  int exact_upto = p.get("exact_upto", 0, 16);
  r.expected = {">= ceil((2n+2)/3), outerplane; nested_triangles(2,3) optimum 7", {}};
  int worst = 1 << 30;
  for (int i = 0; i < seeds && r.status != Status::fail; ++i) {
    int ni = order_for(nmin, n, i);
    PlaneGraph pg = random_2tree(ni, seed0 + i);
    VertexSet out = extract_outerplane_2_3(pg);
    int need = outerplane_target(ni);
    bool valid = is_outerplane(pg, out);
    worst = std::min(worst, out.size() - need);
    if (!valid || out.size() < need) {
      r.witness = out;
      fail(r, "seed " + std::to_string(seed0 + i) + ": size " + std::to_string(out.size()) + " need " +
                  std::to_string(need) + (valid ? "" : ", not outerplane"), write_graph(pg));
    } else if (ni <= exact_upto && out.size() > max_induced(pg, InvariantKind{Kind::s_oprime}).value) {
      fail(r, "extracted set beats the exact optimum", write_graph(pg));
    }
  }
  // The bound is attained: three nested triangles' worth of vertices, n = 9.
  PlaneGraph nested = gen_nested_triangles(2, 3);
  int tight = max_induced(nested, InvariantKind{Kind::s_oprime}).value;
  if (tight != outerplane_target(nested.order()) || tight != 7)
    fail(r, "nested_triangles(2,3) optimum " + std::to_string(tight) + ", expected 7", write_graph(nested));
  r.computed = {worst, tight};
  if (r.status != Status::fail)
    r.detail = "minimum slack " + std::to_string(worst) + "; nested_triangles(2,3) optimum " + std::to_string(tight);
}

std::string sub(const char* s, int j, int i) {
  return std::string(s) + "_{" + std::to_string(j) + "," + std::to_string(i) + "}";
}

// ---------------------------------------------------------------- C5

// All subsets of {0..n-1} of size `size`, as masks.
void for_each_subset(int n, int size, const std::function<void(std::uint32_t)>& f) {
  std::vector<int> idx(size);
  for (int i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    std::uint32_t m = 0;
    for (int i : idx) m |= 1u << i;
    f(m);
    int i = size - 1;
    while (i >= 0 && idx[i] == n - size + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

VertexSet from_bits(int n, std::uint64_t m, int offset = 0, int universe = -1) {
  std::vector<int> v;
  for (int i = 0; i < n; ++i)
    if (m >> i & 1) v.push_back(offset + i);
  return VertexSet(universe < 0 ? n : universe, v);
}

void check_dk(const Params& p, Tier tier, ClaimReport& r) {
  int k = p.get("k", 4, 40);
  FamilyInstance fi;
  try {
    fi = gen_Dk(k);
  } catch (const BadParameter& e) {
    throw BadParams(e.what());
  }
  const Graph& g = fi.pg.graph();
  int n = g.order(), bound = 23 * k / 2;
  if (tier == Tier::long_run) {
    Budget b;
    b.max_seconds = static_cast<double>(p.get("budget_secs", 1, 86400));
    b.max_nodes = std::numeric_limits<std::uint64_t>::max();
    r.expected = {"s_o(D_k) <= " + std::to_string(bound), bound};
    SolveResult res = max_induced(g, InvariantKind{Kind::s_o}, b, {fi.cert("M")});
    r.computed = {res.value};
    r.witness = res.witness;
    if (res.value > bound) fail(r, "outerplanar set larger than 23k/2", write_graph(fi.pg));
    else if (!res.optimal) {
      r.status = Status::timeout;
      r.detail = "budget exhausted; best lower bound " + std::to_string(res.value);
    } else {
      r.detail = "exact s_o = " + std::to_string(res.value);
    }
    return;
  }

  r.expected = {"n = 16k+1, s_K4 >= 12k, per-copy cap 12, no adjacent pair at 12+12, s_o <= 23k/2", {}};
  const VertexSet& q = fi.cert("Q");
  const VertexSet& m = fi.cert("M");
  r.witness = q;
  if (n != 16 * k + 1) fail(r, "order " + std::to_string(n), write_graph(fi.pg));
  if (!is_plane_triangulation(fi.pg)) fail(r, "not a triangulation", write_graph(fi.pg));
  if (q.size() != 12 * k || !is_k4_minor_free(g.induced(q))) fail(r, "Q is not a K4-minor-free 12k-set", write_graph(fi.pg));
  if (!is_outerplanar(g.induced(m))) fail(r, "M is not outerplanar", write_graph(fi.pg));

  // Per-copy cap on R (n = 16). Outerplanarity is hereditary, so no
  // outerplanar 13-set means the cap is 12.
  FamilyInstance rfi = gen_R();
  const Graph& rg = rfi.pg.graph();
  bool thirteen = false;
  for_each_subset(16, 13, [&](std::uint32_t s) {
    if (!thirteen && is_outerplanar(rg.induced(from_bits(16, s)))) thirteen = true;
  });
  std::vector<std::uint32_t> optimal;
  for_each_subset(16, 12, [&](std::uint32_t s) {
    if (is_outerplanar(rg.induced(from_bits(16, s)))) optimal.push_back(s);
  });
  int cap = thirteen ? 13 : optimal.empty() ? 11 : 12;
  const std::uint32_t x123 = 0b1110;  // x1, x2, x3
  int missing_x = 0;
  for (auto s : optimal) missing_x += (s & x123) != x123;
  if (cap != 12) fail(r, "max induced outerplanar of R is not 12", write_graph(rfi.pg));
  if (missing_x) fail(r, std::to_string(missing_x) + " optimal sets of R miss some of x1,x2,x3", write_graph(rfi.pg));

  // Copy j of R sits at ids 16(j-1)..16(j-1)+15 in the same order as gen_R.
  for (int j = 0; j < k; ++j)
    if (g.induced(from_bits(16, 0xFFFF, 16 * j, n)) != rg)
      fail(r, "copy " + std::to_string(j + 1) + " is not R in gen_R order", write_graph(fi.pg));

  // Pair check: the sextet plus the three chosen vertices in the region
  // x0 x1 x3 (the R' at ids 12..15) has a K_{2,3} minor, and no two adjacent
  // copies carry 12 + 12 outerplanar vertices.
  int k23_missing = 0, pair_violations = 0;
  Graph k23 = complete_bipartite(2, 3);
  for (auto s : optimal) {
    std::vector<int> conf{1, 2, 3, 17, 18, 19};
    for (int v = 12; v < 16; ++v)
      if (s >> v & 1) conf.push_back(v);
    if (!has_minor(g.induced(VertexSet(n, conf)), k23)) ++k23_missing;
  }
  for (int j = 0; j + 1 < k; ++j)
    for (auto a : optimal)
      for (auto b : optimal) {
        VertexSet u = from_bits(16, a, 16 * j, n).united(from_bits(16, b, 16 * (j + 1), n));
        if (is_outerplanar(g.induced(u))) ++pair_violations;
      }
  if (k23_missing) fail(r, std::to_string(k23_missing) + " sextet configurations lack a K_{2,3} minor", write_graph(fi.pg));
  if (pair_violations) fail(r, std::to_string(pair_violations) + " adjacent pairs reach 24", write_graph(fi.pg));

  // Pairs (1,2), (3,4), ... give at most 12 + 11; without any 12-copy every
  // copy has at most 11 plus possibly z.
  int upper = std::max(23 * (k / 2), 11 * k + 1);
  r.computed = {n, q.size(), cap, static_cast<std::int64_t>(optimal.size()), k23_missing, pair_violations, upper};
  if (upper > bound) fail(r, "counting gives " + std::to_string(upper), write_graph(fi.pg));
  if (r.status != Status::fail) {
    std::ostringstream os;
    os << "n=" << n << " |Q|=" << q.size() << " cap(R)=12 over " << optimal.size()
       << " optimal sets; s_o <= " << upper << "; (n-1)-normalised forms: 12(n-1)/20 = " << 12.0 * (n - 1) / 20
       << ", 23(n-1)/40 = " << 23.0 * (n - 1) / 40;
    r.detail = os.str();
  }
}

// ---------------------------------------------------------------- C6

void check_gk(const Params& p, ClaimReport& r) {
  int k = p.get("k", 4, 40);
  FamilyInstance fi = gen_Gk(k);
  const Graph& g = fi.pg.graph();
  int n = g.order();
  r.expected = {"n = 22k, s_o >= 15k, s_o' = 14k", {}};
  const VertexSet& rs = fi.cert("R");
  r.witness = rs;
  if (n != 22 * k) fail(r, "order " + std::to_string(n), write_graph(fi.pg));
  if (!is_plane_triangulation(fi.pg)) fail(r, "not a triangulation", write_graph(fi.pg));
  if (rs.size() != 15 * k || !is_outerplanar(g.induced(rs))) fail(r, "R is not an outerplanar 15k-set", write_graph(fi.pg));

  // Cap (a): an outerplane subset of I holds at most 4 interior vertices.
  PlaneGraph ig = gen_I().pg;
  int cap = 0;
  for (std::uint32_t s = 0; s < 512; ++s)
    if (is_outerplane(ig, from_bits(9, s))) cap = std::max(cap, std::popcount(s >> 3));
  if (cap != 4) fail(r, "gadget cap is " + std::to_string(cap), write_graph(ig));

  // Cap (b): a taken K4 triangle with a taken vertex beyond it (id 9 stands
  // for any such vertex) leaves the gadget inside empty.
  EmbeddingBuilder b(ig);
  b.insert_vertex_in_face(find_face(ig, {0, 1, 2}), {0, 1, 2});
  const PlaneGraph& ext = b.current();
  int leaked = 0;
  for (std::uint32_t s = 1; s < 64; ++s)
    if (is_outerplane(ext, from_bits(10, 0b1000000111u | s << 3))) ++leaked;
  if (leaked) fail(r, std::to_string(leaked) + " interior sets survive a full K4 triangle", write_graph(ext));
  if (is_outerplanar(complete_graph(4))) fail(r, "K4 outerplanar", "");

  // Per copy: <= 2 K4 vertices gives 2 + 3*cap; 3 with x0 empties one gadget;
  // the triangle x1x2x3 confines the whole set to one side.
  int per_copy = std::max({2 + 3 * cap, 3 + 2 * cap});
  int upper = std::max(per_copy * k, 3 + 3 * cap);

  // Matching outerplane set: x_{j,1}, x_{j,2} and S of every gadget.
  std::vector<int> xs;
  for (int j = 1; j <= k; ++j) {
    xs.push_back(fi.label(sub("x", j, 1)));
    xs.push_back(fi.label(sub("x", j, 2)));
    for (int i = 1; i <= 3; ++i)
      for (const char* nm : {"v_1", "w_1", "w_2", "w_3"})
        xs.push_back(fi.label(std::string(nm) + "(I_{" + std::to_string(j) + "," + std::to_string(i) + "})"));
  }
  VertexSet x(n, xs);
  bool x_ok = is_outerplane(fi.pg, x);
  r.computed = {n, rs.size(), cap, leaked, upper, x.size()};
  if (upper > 14 * k) fail(r, "counting gives " + std::to_string(upper), write_graph(fi.pg));
  if (!x_ok || x.size() != 14 * k) fail(r, "14k outerplane witness invalid", write_graph(fi.pg));
  if (r.status != Status::fail)
    r.detail = "n=" + std::to_string(n) + " |R|=" + std::to_string(rs.size()) + "; s_o' <= " + std::to_string(upper) +
               " attained by an outerplane set of " + std::to_string(x.size());
}

// ---------------------------------------------------------------- C7


// W and the Z_{j,i} = {v_1, w_1} of every gadget, from labels alone.
VertexSet cds_from_labels(const FamilyInstance& fi, int k) {
  std::vector<int> c;
  for (int j = 1; j <= k; ++j) {
    c.push_back(fi.label(sub("x", j, 2)));
    c.push_back(fi.label(sub("x", j, 3)));
    if (j < k) c.push_back(fi.label(sub("y", j, 2)));
    for (int i = 1; i <= 3; ++i) {
      std::string gadget = "(I_{" + std::to_string(j) + "," + std::to_string(i) + "})";
      c.push_back(fi.label("v_1" + gadget));
      c.push_back(fi.label("w_1" + gadget));
    }
  }
  return VertexSet(fi.pg.order(), c);
}

void check_tk(const Params& p, ClaimReport& r) {
  int k = p.get("k", 2, 200);
  FamilyInstance fi = gen_Tk(k);
  const Graph& g = fi.pg.graph();
  int n = g.order();
  r.expected = {"|CDS| = 9k-1 = " + std::to_string(9 * k - 1) + ", |OUTERPLANE| = 15k+1 = " + std::to_string(15 * k + 1),
                {}};
  VertexSet cds = cds_from_labels(fi, k);
  VertexSet outer = cds.complement();
  r.witness = cds;
  r.computed = {n, cds.size(), outer.size()};
  std::string inst = write_graph(fi.pg);
  if (n != 24 * k) fail(r, "order " + std::to_string(n), inst);
  if (!is_plane_triangulation(fi.pg)) fail(r, "not a triangulation", inst);
  if (!is_eulerian(g)) fail(r, "not Eulerian", inst);
  if (cds != fi.cert("CDS")) fail(r, "sidecar CDS differs from the labelled construction", inst);
  if (cds.size() != 9 * k - 1 || !is_connected_dominating(g, cds)) fail(r, "CDS invalid", inst);
  if (outer.size() != 15 * k + 1 || !is_outerplane(fi.pg, outer)) fail(r, "complement is not outerplane", inst);
  if (r.status != Status::fail)
    r.detail = "n=" + std::to_string(n) + " CDS " + std::to_string(cds.size()) + " outerplane " + std::to_string(outer.size());
}

// ---------------------------------------------------------------- C8, C9, C10

void check_implications(const Params& p, ClaimReport& r) {
  int n = p.get("n", 4, 18), nmin = p.get("nmin", 4, n);
  int seeds = p.get("seeds", 1, 100000), seed0 = p.get("seed0", 0, 1 << 30);
  r.expected = {"G - S outerplane for min CDS S; V - F dominating for max K4-minor-free F", {}};
  int checked = 0;
  for (int i = 0; i < seeds && r.status != Status::fail; ++i) {
    PlaneGraph pg = random_apollonian(order_for(nmin, n, i), seed0 + i);
    const Graph& g = pg.graph();
    SolveResult s = min_dominating(g, Domination::connected);
    if (!is_outerplane(pg, s.witness.complement())) {
      r.witness = s.witness;
      fail(r, "complement of a minimum CDS is not outerplane", write_graph(pg));
    }
    SolveResult f = max_induced(g, InvariantKind{Kind::s_k4});
    if (!is_dominating(g, f.witness.complement())) {
      r.witness = f.witness;
      fail(r, "complement of a maximum K4-minor-free set does not dominate", write_graph(pg));
    }
    ++checked;
  }
  r.computed = {checked};
  if (r.status != Status::fail) r.detail = std::to_string(checked) + " triangulations";
}

void check_chain(const Params& p, ClaimReport& r) {
  int n = p.get("n", 4, 16), nmin = p.get("nmin", 4, n);
  int seeds = p.get("seeds", 1, 100000), seed0 = p.get("seed0", 0, 1 << 30);
  r.expected = {"s_o' <= s_o <= s_K4", {}};
  int checked = 0;
  for (int i = 0; i < seeds && r.status != Status::fail; ++i) {
    int ni = order_for(nmin, n, i);
    // Alternate triangulations and 2-trees.
    PlaneGraph pg = i % 2 ? random_2tree(ni, seed0 + i) : random_apollonian(ni, seed0 + i);
    int a = max_induced(pg, InvariantKind{Kind::s_oprime}).value;
    int b = max_induced(pg.graph(), InvariantKind{Kind::s_o}).value;
    int c = max_induced(pg.graph(), InvariantKind{Kind::s_k4}).value;
    if (!(a <= b && b <= c)) {
      r.computed = {a, b, c};
      fail(r, "chain broken", write_graph(pg));
    }
    ++checked;
  }
  if (r.status != Status::fail) {
    r.computed = {checked};
    r.detail = std::to_string(checked) + " plane graphs";
  }
}

void check_ratio(const Params& p, ClaimReport& r) {
  int n = p.get("n", 4, 16), nmin = p.get("nmin", 4, n);
  int seeds = p.get("seeds", 0, 100000), seed0 = p.get("seed0", 0, 1 << 30), mmax = p.get("m", 1, 4);
  r.expected = {"5 s_o >= 4 s_K4; s_o(k113_chain(m)) = 4m", {}};
  for (int i = 0; i < seeds && r.status != Status::fail; ++i) {
    Graph g = random_apollonian(order_for(nmin, n, i), seed0 + i).graph();
    int so = max_induced(g, InvariantKind{Kind::s_o}).value;
    int sk = max_induced(g, InvariantKind{Kind::s_k4}).value;
    if (5 * so < 4 * sk) {
      r.computed = {so, sk};
      fail(r, "ratio violated", write_graph(g));
    }
  }
  std::vector<std::int64_t> chain;
  for (int m = 1; m <= mmax; ++m) {
    Graph g = gen_k113_chain(m);
    SolveResult so = max_induced(g, InvariantKind{Kind::s_o});
    chain.push_back(so.value);
    if (so.value != 4 * m || !is_k4_minor_free(g)) fail(r, "k113_chain(" + std::to_string(m) + ") gives " + std::to_string(so.value), write_graph(g));
  }
  if (r.status != Status::fail) {
    r.computed = chain;
    r.detail = std::to_string(seeds) + " triangulations; k113 chains m=1.." + std::to_string(mmax) + ": " +
               join(std::vector<int>(chain.begin(), chain.end()));
  }
}

// ---------------------------------------------------------------- C11

// Interior of I (ids 3..8) must be dominated by boundary choices B and an
// interior set J, and every part of B u J meeting J must reach B.
bool gadget_locally_valid(const Graph& ig, std::uint32_t b, std::uint32_t j) {
  std::uint32_t s = b | j << 3;
  auto masks = ig.masks();
  std::uint64_t dom = 0;
  for (int v = 0; v < 9; ++v)
    if (s >> v & 1) dom |= masks[v] | 1ull << v;
  if ((dom & 0x1F8) != 0x1F8) return false;
  if (!j) return true;
  // Flood from B inside s; all of J must be reached.
  std::uint64_t seen = b, frontier = b;
  while (frontier) {
    std::uint64_t next = 0;
    for (int v = 0; v < 9; ++v)
      if (frontier >> v & 1) next |= masks[v];
    next &= s & ~seen;
    seen |= next;
    frontier = next;
  }
  return (seen & (static_cast<std::uint64_t>(j) << 3)) == static_cast<std::uint64_t>(j) << 3;
}

// Minimum of |S cap layer j| over local models: layer j's six x/y vertices
// and 18 gadget interiors, with everything below contracted into one vertex
// adjacent to all x_{j,*} and everything above into one adjacent to all
// y_{j,*}. Contraction keeps a connected dominating set connected and
// dominating, so the local minimum is a lower bound.
int layer_minimum(const FamilyInstance& fi, int k, int j) {
  const Graph& g = fi.pg.graph();
  std::vector<int> verts;
  for (int i = 1; i <= 3; ++i) verts.push_back(fi.label(sub("x", j, i)));
  for (int i = 1; i <= 3; ++i) verts.push_back(fi.label(sub("y", j, i)));
  const char* names[] = {"v_1", "v_2", "v_3", "w_1", "w_2", "w_3"};
  for (int i = 1; i <= 3; ++i)
    for (const char* nm : names)
      verts.push_back(fi.label(std::string(nm) + "(I_{" + std::to_string(j) + "," + std::to_string(i) + "})"));
  int below = j > 1 ? 24 : -1, above = j < k ? 25 : -1;
  std::map<int, int> local;
  for (int i = 0; i < 24; ++i) local[verts[i]] = i;
  std::vector<std::uint32_t> adj(26, 0);
  for (int i = 0; i < 24; ++i)
    for (int w : g.neighbors(verts[i]))
      if (auto it = local.find(w); it != local.end()) adj[i] |= 1u << it->second;
  for (int i = 0; i < 3; ++i) {
    if (below >= 0) adj[i] |= 1u << below, adj[below] |= 1u << i;
    if (above >= 0) adj[3 + i] |= 1u << above, adj[above] |= 1u << (3 + i);
  }
  std::uint32_t forced = (below >= 0 ? 1u << below : 0) | (above >= 0 ? 1u << above : 0);
  std::uint32_t layer = (1u << 24) - 1;

  auto connected = [&](std::uint32_t s) {
    std::uint32_t start = s & -s, seen = start, frontier = start;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
      next &= s & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen == s;
  };
  auto dominated = [&](std::uint32_t s) {
    std::uint32_t d = s;
    for (std::uint32_t f = s; f; f &= f - 1) d |= adj[std::countr_zero(f)];
    return (d & layer) == layer;
  };

  int best = 1 << 30;
  for (std::uint32_t a = 0; a < 64; ++a) {
    int base = std::popcount(a);
    // Interior subsets per gadget that dominate that gadget's interior.
    std::vector<std::uint32_t> opts[3];
    for (int i = 0; i < 3; ++i) {
      std::uint32_t gadget = 0x3Fu << (6 + 6 * i);
      for (std::uint32_t jm = 0; jm < 64; ++jm) {
        std::uint32_t js = jm << (6 + 6 * i), d = a | js;
        for (std::uint32_t f = a | js; f; f &= f - 1) d |= adj[std::countr_zero(f)];
        if ((d & gadget) == gadget) opts[i].push_back(js);
      }
      std::sort(opts[i].begin(), opts[i].end(),
                [](std::uint32_t x, std::uint32_t y) { return std::popcount(x) < std::popcount(y); });
    }
    for (auto j1 : opts[0]) {
      int c1 = base + std::popcount(j1);
      if (c1 >= best) break;
      for (auto j2 : opts[1]) {
        int c2 = c1 + std::popcount(j2);
        if (c2 >= best) break;
        for (auto j3 : opts[2]) {
          int c3 = c2 + std::popcount(j3);
          if (c3 >= best) break;
          std::uint32_t s = a | j1 | j2 | j3 | forced;
          if (dominated(s) && connected(s)) {
            best = c3;
            break;
          }
        }
      }
    }
  }
  return best;
}

void check_maxleaf(const Params& p, Tier tier, ClaimReport& r) {
  int k = p.get("k", 2, 8);
  FamilyInstance fi = gen_Tk(k);
  const Graph& g = fi.pg.graph();
  int n = g.order();
  int target = ceil_div(2 * n, 3);
  VertexSet cds = cds_from_labels(fi, k);
  std::string inst = write_graph(fi.pg);

  if (tier == Tier::long_run) {
    Budget b;
    b.max_seconds = static_cast<double>(p.get("budget_secs", 1, 86400));
    b.max_nodes = std::numeric_limits<std::uint64_t>::max();
    r.expected = {"gamma_c = " + std::to_string(9 * k - 1) + ", s_o' = " + std::to_string(15 * k + 1), {}};
    SolveResult gc = min_dominating(g, Domination::connected, b, {cds});
    SolveResult so = max_induced(fi.pg, InvariantKind{Kind::s_oprime}, b, {cds.complement()});
    r.computed = {gc.value, gc.optimal, so.value, so.optimal};
    r.witness = gc.witness;
    if (gc.value < 9 * k - 1 || so.value > 15 * k + 1) fail(r, "solver contradicts the certificate bounds", inst);
    else if (gc.optimal && so.optimal) {
      if (gc.value != 9 * k - 1 || so.value != 15 * k + 1) fail(r, "exact values differ", inst);
      else r.detail = "exact gamma_c and s_o' confirmed";
    } else {
      r.status = Status::timeout;
      r.detail = "budget exhausted; gamma_c <= " + std::to_string(gc.value) + (gc.optimal ? " (exact)" : "") +
                 ", s_o' >= " + std::to_string(so.value) + (so.optimal ? " (exact)" : "");
    }
    return;
  }

  int seeds = p.get("seeds", 0, 100000), nmax = p.get("n", 3, 12), seed0 = p.get("seed0", 0, 1 << 30);
  r.expected = {"maxleaf(T_k) = n - gamma_c = " + std::to_string(15 * k + 1) + " < ceil(2n/3) = " + std::to_string(target),
                15 * k + 1};
  // Equivalence on seeded connected graphs against spanning-tree enumeration.
  for (int i = 0; i < seeds && r.status != Status::fail; ++i) {
    int ni = order_for(3, nmax, i);
    Graph h = random_connected(ni, seed0 + i, 0.3);
    int ml = maxleaf(h).value;
    int gc = min_dominating(h, Domination::connected).value;
    int en = oracle::maxleaf_by_spanning_trees(h);
    if (ml != en || ml != ni - gc) {
      r.computed = {ml, ni - gc, en};
      fail(r, "maxleaf equivalence fails", write_graph(h));
    }
  }
  // Each gadget needs two interior vertices.
  const Graph ig = gen_I().pg.graph();
  int gadget_min = 7;
  for (std::uint32_t b = 0; b < 8; ++b)
    for (std::uint32_t j = 0; j < 64; ++j)
      if (gadget_locally_valid(ig, b, j)) gadget_min = std::min(gadget_min, std::popcount(j));
  if (gadget_min != 2) fail(r, "gadget needs " + std::to_string(gadget_min) + " interior vertices", write_graph(ig));

  int lower = 0;
  std::vector<std::int64_t> layers;
  for (int j = 1; j <= k; ++j) {
    int m = layer_minimum(fi, k, j);
    layers.push_back(m);
    lower += m;
  }
  if (cds.size() != 9 * k - 1 || !is_connected_dominating(g, cds)) fail(r, "certificate CDS invalid", inst);
  if (lower != 9 * k - 1) fail(r, "layer counting gives gamma_c >= " + std::to_string(lower), inst);
  int leaves = n - lower;
  r.witness = cds;
  r.computed = {lower, cds.size(), leaves, target};
  if (r.status != Status::fail && leaves >= target) fail(r, "maxleaf reaches ceil(2n/3)", inst);
  if (r.status != Status::fail) {
    std::ostringstream os;
    os << "gamma_c(T_" << k << ") = " << lower << " (layer minima";
    for (auto m : layers) os << ' ' << m;
    os << "), maxleaf = " << leaves << " < " << target;
    r.detail = os.str();
  }
}

// ---------------------------------------------------------------- registry

using Checker = std::function<void(const Params&, Tier, ClaimReport&)>;

struct Entry {
  ClaimInfo info;
  Checker run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> e = [] {
    auto plain = [](void (*f)(const Params&, ClaimReport&)) {
      return Checker([f](const Params& p, Tier, ClaimReport& r) { f(p, r); });
    };
    std::vector<Entry> v;
    v.push_back({{"C1", "a k-tree has a unique partition into k+1 independent sets", Tier::fast,
                  {{"k", 2}, {"n", 8}, {"nmin", 8}, {"seeds", 20}, {"seed0", 0}}},
                 plain(check_partition)});
    v.push_back({{"C2", "a graph of treewidth <= s has an induced treewidth-t subgraph on (t+1)n/(s+1) vertices",
                  Tier::fast, {{"s", 2}, {"t", 1}, {"n", 30}, {"nmin", 5}, {"seeds", 50}, {"seed0", 0}, {"exact_upto", 12}}},
                 plain(check_bounded_tw)});
    v.push_back({{"C3", "a K4-minor-free graph has an induced outerplanar subgraph on 4n/5 vertices", Tier::fast,
                  {{"n", 30}, {"nmin", 5}, {"seeds", 50}, {"seed0", 0}, {"exact_upto", 12}}},
                 plain(check_outerplanar45)});
    v.push_back({{"C4", "a plane 2-tree has an induced outerplane subgraph on ceil((2n+2)/3) vertices", Tier::fast,
                  {{"n", 30}, {"nmin", 5}, {"seeds", 50}, {"seed0", 0}, {"exact_upto", 12}}},
                 plain(check_outerplane23)});
    v.push_back({{"C5", "D_k: s_K4 >= 12k while s_o <= 23k/2", Tier::fast, {{"k", 4}}},
                 [](const Params& p, Tier t, ClaimReport& r) { check_dk(p, t, r); }});
    v.push_back({{"C5", "D_k: exact s_o within a budget", Tier::long_run, {{"k", 4}, {"budget_secs", 3600}}},
                 [](const Params& p, Tier t, ClaimReport& r) { check_dk(p, t, r); }});
    v.push_back({{"C6", "G_k: s_o >= 15k while s_o' <= 14k", Tier::fast, {{"k", 4}}}, plain(check_gk)});
    v.push_back({{"C7", "T_k: connected dominating set of size 9k-1 whose complement is outerplane (15k+1)",
                  Tier::fast, {{"k", 2}}},
                 plain(check_tk)});
    v.push_back({{"C8", "in a triangulation, G - S is outerplane for a CDS S and V - F dominates for a K4-minor-free F",
                  Tier::fast, {{"n", 12}, {"nmin", 4}, {"seeds", 20}, {"seed0", 0}}},
                 plain(check_implications)});
    v.push_back({{"C9", "s_o' <= s_o <= s_K4", Tier::fast, {{"n", 10}, {"nmin", 4}, {"seeds", 50}, {"seed0", 0}}},
                 plain(check_chain)});
    v.push_back({{"C10", "s_o >= 4/5 s_K4, tight on K_{1,1,3} chains", Tier::fast,
                  {{"n", 10}, {"nmin", 4}, {"seeds", 30}, {"seed0", 0}, {"m", 3}}},
                 plain(check_ratio)});
    v.push_back({{"C11", "maxleaf = n - gamma_c, and gamma_c(T_k) = 9k-1 so maxleaf(T_k) < 2n/3", Tier::standard,
                  {{"k", 2}, {"n", 10}, {"seeds", 50}, {"seed0", 0}}},
                 [](const Params& p, Tier t, ClaimReport& r) { check_maxleaf(p, t, r); }});
    v.push_back({{"C11", "T_k: exact gamma_c and s_o' within a budget", Tier::long_run, {{"k", 2}, {"budget_secs", 3600}}},
                 [](const Params& p, Tier t, ClaimReport& r) { check_maxleaf(p, t, r); }});
    return v;
  }();
  return e;
}

ClaimReport run_entry(const Entry& e, const ClaimParams& given) {
  ClaimReport r;
  r.claim_id = e.info.id;
  r.params = e.info.defaults;
  for (const auto& [key, val] : given) {
    if (key == "tier") continue;
    auto it = std::find_if(r.params.begin(), r.params.end(), [&](const auto& kv) { return kv.first == key; });
    if (it == r.params.end()) throw BadParams(e.info.id + " has no parameter '" + key + "'");
    it->second = val;
  }
  auto start = Clock::now();
  try {
    e.run(Params(r.params), e.info.tier, r);
  } catch (const BadParameter& ex) {
    throw BadParams(ex.what());
  }
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  return r;
}

}  // namespace

const std::vector<ClaimInfo>& claim_registry() {
  static const std::vector<ClaimInfo> infos = [] {
    std::vector<ClaimInfo> v;
    for (const auto& e : entries()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

ClaimReport run_claim(const std::string& id, const ClaimParams& params) {
  std::optional<Tier> want;
  for (const auto& [k, v] : params)
    if (k == "tier") {
      if (v < 0 || v > 2) throw BadParams("tier must be 0, 1 or 2");
      want = static_cast<Tier>(v);
    }
  const Entry* pick = nullptr;
  bool known = false;
  for (const auto& e : entries()) {
    if (e.info.id != id) continue;
    known = true;
    if (want ? e.info.tier == *want : !pick) pick = &e;
  }
  if (!known) throw UnknownClaim("unknown claim '" + id + "'");
  if (!pick) throw BadParams(id + " has no " + to_string(*want) + " variant");
  return run_entry(*pick, params);
}

std::vector<ClaimReport> run_suite(Tier t, int threads) {
  std::vector<const Entry*> todo;
  for (const auto& e : entries())
    if (e.info.tier <= t) todo.push_back(&e);
  std::vector<ClaimReport> out(todo.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < todo.size();) out[i] = run_entry(*todo[i], {});
  };
  int w = std::max(1, std::min<int>(threads, static_cast<int>(todo.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < w; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return out;
}

int exit_code(const std::vector<ClaimReport>& reports) {
  bool timeout = false;
  for (const auto& r : reports) {
    if (r.status == Status::fail) return 1;
    timeout |= r.status == Status::timeout;
  }
  return timeout ? 3 : 0;
}

}  // namespace indsub
