// Acceptance suite: one PASS/FAIL line per criterion. Criterion 10 runs only
// with INDSUB_LONG=1 and never fails the run on TIMEOUT.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "indsub/claims.hpp"
#include "indsub/families.hpp"
#include "indsub/oracle.hpp"
#include "indsub/recognizers.hpp"
#include "indsub/solvers.hpp"

using namespace indsub;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "violated: " << what << "; ";
    pass = pass && ok;
  }
};

std::string join(const std::vector<std::int64_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s + "]";
}

// Runs a claim and folds its status into o.
ClaimReport claim(Outcome& o, const std::string& id, const ClaimParams& params) {
  ClaimReport r = run_claim(id, params);
  o.require(r.status == Status::pass, id + " " + to_string(r.status) + ": " + r.detail);
  return r;
}

int failures = 0;

void criterion(int id, const std::string& title, const std::string& tolerance, double limit_s,
               const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream lim;
  lim << "time " << secs << " s < " << limit_s << " s";
  o.require(secs < limit_s, lim.str());
  if (!o.pass) ++failures;
  std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << " | " << title << " | "
            << o.detail.str() << "tolerance " << tolerance << " | " << lim.str() << std::endl;
}

}  // namespace

int main() {
  criterion(1, "T_k certificates (k = 2, 3)", "exact", 5, [](Outcome& o) {
    for (int k : {2, 3}) {
      ClaimReport r = claim(o, "C7", {{"k", k}});
      std::vector<std::int64_t> want{24 * k, 9 * k - 1, 15 * k + 1};
      o.require(r.computed == want, "computed " + join(r.computed) + " != " + join(want));
      FamilyInstance t = gen_Tk(k);
      o.require(is_connected_dominating(t.pg.graph(), t.cert("CDS")), "CDS connected dominating");
      o.require(is_outerplane(t.pg, t.cert("CDS").complement()), "complement outerplane");
      o.require(is_plane_triangulation(t.pg) && is_eulerian(t.pg.graph()), "triangulation and Eulerian");
      o.detail << "k=" << k << " [n cds outerplane] = " << join(r.computed) << "; ";
    }
  });

  criterion(2, "maxleaf(T_2) <= 31 < 32 = ceil(2n/3)", "exact", 120, [](Outcome& o) {
    ClaimReport r = claim(o, "C11", {{"k", 2}, {"n", 10}, {"seeds", 50}});
    o.require(r.computed.size() == 4 && r.computed[0] == 17 && r.computed[2] == 31 && r.computed[3] == 32,
              "C11 computed " + join(r.computed));
    int agree = 0;
    for (int i = 0; i < 50; ++i) {
      Graph g = corpus::random_connected(3 + i % 8, 9000 + i);
      int ml = maxleaf(g).value;
      int gc = min_dominating(g, Domination::connected).value;
      int direct = oracle::maxleaf_by_spanning_trees(g);
      o.require(ml == g.order() - gc && ml == direct, "maxleaf equivalence on seed " + std::to_string(9000 + i));
      agree += ml == direct;
    }
    o.detail << "gamma_c lower bound " << r.computed[0] << ", certificate " << r.computed[1] << ", maxleaf <= "
             << r.computed[2] << " < " << r.computed[3] << "; maxleaf = n - gamma_c = enumeration on " << agree
             << "/50 graphs; ";
  });

  criterion(3, "D_4: order, Q, M, per-copy cap, adjacent-copy pairs", "exact", 600, [](Outcome& o) {
    ClaimReport r = claim(o, "C5", {{"k", 4}});
    o.require(r.computed.size() >= 4 && r.computed[0] == 65 && r.computed[1] == 48 && r.computed[2] == 12,
              "computed " + join(r.computed));
    o.detail << "[n |Q| cap optimal-sets ...] = " << join(r.computed) << "; ";
  });

  criterion(4, "G_4: order, R witness, per-gadget caps", "exact", 60, [](Outcome& o) {
    ClaimReport r = claim(o, "C6", {{"k", 4}});
    o.require(r.computed.size() >= 3 && r.computed[0] == 88 && r.computed[1] == 60 && r.computed[2] == 4,
              "computed " + join(r.computed));
    o.detail << "[n |R| gadget-cap leaked upper witness] = " << join(r.computed) << "; ";
  });

  criterion(5, "unique k-tree partition (2-trees and 3-trees, n <= 10)", "exact", 120, [](Outcome& o) {
    std::int64_t total = 0;
    for (int k : {2, 3}) {
      ClaimReport r = claim(o, "C1", {{"k", k}, {"n", 10}, {"nmin", k + 1}, {"seeds", 50}, {"seed0", 100 * k}});
      total += r.computed.empty() ? 0 : r.computed[0];
    }
    o.require(total == 100, "checked " + std::to_string(total) + " of 100");
    o.detail << total << " k-trees; ";
  });

  criterion(6, "extraction bounds on 500 2-trees, n <= 40", "exact inequalities", 600, [](Outcome& o) {
    ClaimParams common{{"n", 40}, {"nmin", 5}, {"seeds", 500}, {"seed0", 0}, {"exact_upto", 12}};
    ClaimParams c2 = common;
    c2.insert(c2.begin(), {{"s", 2}, {"t", 1}});
    for (const auto& [id, params] : std::vector<std::pair<std::string, ClaimParams>>{{"C2", c2}, {"C3", common}, {"C4", common}}) {
      ClaimReport r = claim(o, id, params);
      o.detail << id << " " << to_string(r.status) << " (" << r.detail << "); ";
    }
  });

  criterion(7, "tightness: s_o(k113_chain(m)) = 4m, nested triangles optimum 7", "exact", 120, [](Outcome& o) {
    claim(o, "C10", {{"m", 3}});
    std::vector<std::int64_t> chain;
    for (int m = 1; m <= 3; ++m) {
      int v = max_induced(gen_k113_chain(m), InvariantKind{Kind::s_o}).value;
      chain.push_back(v);
      o.require(v == 4 * m, "s_o(k113_chain(" + std::to_string(m) + ")) = " + std::to_string(v));
    }
    PlaneGraph nested = gen_nested_triangles(2, 3);
    int sop = max_induced(nested, InvariantKind{Kind::s_oprime}).value;
    o.require(sop == 7, "nested optimum " + std::to_string(sop));
    o.detail << "s_o chain " << join(chain) << ", nested s_o' = " << sop << "; ";
  });

  criterion(8, "solver/oracle equivalence, 300 instances n <= 12 plus gadgets", "exact", 900, [](Outcome& o) {
    auto instances = corpus::mixed(300, 12, 4242);
    for (auto& g : corpus::named_gadgets()) instances.push_back(g);
    int compared = 0;
    for (std::size_t i = 0; i < instances.size(); ++i) {
      const auto& inst = instances[i];
      int n = inst.g.order();
      bool connected = is_connected(inst.g);
      for (const InvariantKind& k : all_kinds(1 + static_cast<int>(i % 3))) {
        if (k.needs_embedding() && !inst.pg()) continue;
        if ((k.tag == Kind::gamma_c || k.tag == Kind::maxleaf) && (!connected || n < 3)) continue;
        if (k.tag == Kind::gamma_t && !connected) continue;
        int a = solve(inst.g, inst.pg(), k).value;
        int b = oracle::brute_force(inst.g, inst.pg(), k).value;
        o.require(a == b, inst.name + " " + k.name() + ": " + std::to_string(a) + " vs " + std::to_string(b));
        ++compared;
      }
    }
    o.detail << compared << " comparisons on " << instances.size() << " instances; ";
  });

  criterion(9, "implications on 50 Apollonian triangulations, n <= 14", "exact", 600, [](Outcome& o) {
    claim(o, "C8", {{"n", 14}, {"nmin", 4}, {"seeds", 50}});
    int chains = 0;
    for (int i = 0; i < 50; ++i) {
      PlaneGraph pg = random_apollonian(4 + i % 11, 7000 + i);
      const Graph& g = pg.graph();
      VertexSet cds = min_dominating(g, Domination::connected).witness;
      o.require(oracle::outerplane_by_separating_cycles(pg, cds.complement()), "min CDS complement outerplane");
      VertexSet f = max_induced(g, InvariantKind{Kind::s_k4}).witness;
      o.require(is_dominating(g, f.complement()), "max K4-minor-free complement dominates");
      int a = max_induced(pg, InvariantKind{Kind::s_oprime}).value;
      int b = max_induced(g, InvariantKind{Kind::s_o}).value;
      o.require(a <= b && b <= f.size(), "chain s_o' <= s_o <= s_K4");
      chains += a <= b && b <= f.size();
    }
    o.detail << "C8 on 50 seeds; chain holds on " << chains << "/50; ";
  });

  const char* longrun = std::getenv("INDSUB_LONG");
  if (longrun && std::string(longrun) == "1") {
    auto t0 = std::chrono::steady_clock::now();
    ClaimReport r = run_claim("C11", {{"tier", 2}});
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (r.status == Status::fail) ++failures;
    std::cout << "criterion 10: " << to_string(r.status) << " | exact gamma_c(T_2) = 17 and s_o'(T_2) = 31 | "
              << join(r.computed) << " " << r.detail << " | tolerance exact, TIMEOUT allowed | time " << secs
              << " s" << std::endl;
  } else {
    std::cout << "criterion 10: SKIPPED | exact gamma_c(T_2) and s_o'(T_2) | set INDSUB_LONG=1 to run" << std::endl;
  }
  std::cout << (failures ? "acceptance: FAIL" : "acceptance: PASS") << std::endl;
  return failures ? 1 : 0;
}
