#include <catch_amalgamated.hpp>

#include "corpus.hpp"
#include "indsub/errors.hpp"
#include "indsub/families.hpp"
#include "indsub/oracle.hpp"
#include "indsub/recognizers.hpp"
#include "indsub/solvers.hpp"

using namespace indsub;

namespace {

int value(const Graph& g, Kind k) { return solve(g, nullptr, InvariantKind{k}).value; }

PlaneGraph k4_plane() { return triangulation_from_faces(4, {{{1, 2, 3}}, {{0, 1, 2}}, {{0, 2, 3}}, {{0, 3, 1}}}); }

bool valid(const Graph& g, const PlaneGraph* pg, InvariantKind k, const VertexSet& w) {
  switch (k.tag) {
    case Kind::gamma: return dominates(g, Domination::plain, w);
    case Kind::gamma_t: return dominates(g, Domination::total, w);
    case Kind::gamma_c: return dominates(g, Domination::connected, w);
    case Kind::maxleaf: return true;
    default: return induced_satisfies(g, pg, k, w);
  }
}

}  // namespace

TEST_CASE("solver examples", "[solve]") {
  REQUIRE(value(complete_graph(4), Kind::f) == 2);
  REQUIRE(value(k113(), Kind::s_o) == 4);
  PlaneGraph oct = gen_octahedron();
  REQUIRE(max_induced(oct, InvariantKind{Kind::s_oprime}).value == 4);
  REQUIRE(value(cycle_graph(6), Kind::gamma_c) == 4);
  REQUIRE(value(oct.graph(), Kind::gamma) == 2);
  REQUIRE(value(oct.graph(), Kind::gamma_c) == 2);
  REQUIRE(value(cycle_graph(4), Kind::gamma_t) == 2);
  REQUIRE(maxleaf(star_graph(5)).value == 5);
  REQUIRE(maxleaf(cycle_graph(6)).value == 2);
  REQUIRE(maxleaf(path_graph(4)).value == 2);
  REQUIRE(value(complete_graph(5), Kind::s_k4) == 3);
  REQUIRE(solve(complete_graph(5), nullptr, InvariantKind{Kind::tw_le_t, 3}).value == 4);
}

TEST_CASE("solver errors", "[solve]") {
  REQUIRE_THROWS_AS(min_dominating(Graph(3), Domination::total), NoTotalDominatingSet);
  REQUIRE_THROWS_AS(InvariantKind::parse("nope"), BadParameter);
  REQUIRE_THROWS_AS(max_induced(complete_graph(4), InvariantKind{Kind::s_oprime}), BadParameter);
  REQUIRE(InvariantKind::parse("so") == InvariantKind{Kind::s_o});
  REQUIRE(InvariantKind::parse("twle", 2) == InvariantKind{Kind::tw_le_t, 2});
}

TEST_CASE("maxleaf returns a spanning tree with that many leaves", "[solve][maxleaf]") {
  for (int s = 0; s < 30; ++s) {
    Graph g = corpus::random_connected(3 + s % 8, s);
    SolveResult r = maxleaf(g);
    REQUIRE(static_cast<int>(r.tree_edges.size()) == g.order() - 1);
    Graph t(g.order());
    for (auto [u, v] : r.tree_edges) {
      REQUIRE(g.has_edge(u, v));
      t.add_edge(u, v);
    }
    REQUIRE(is_connected(t));
    int leaves = 0;
    for (int v = 0; v < t.order(); ++v) leaves += t.degree(v) == 1;
    REQUIRE(leaves == r.value);
  }
}

TEST_CASE("branch and bound agrees with the brute-force oracle", "[solve][oracle][property]") {
  auto instances = corpus::mixed(120, 11, 77);
  for (auto& gi : corpus::named_gadgets()) instances.push_back(gi);
  for (const auto& inst : instances) {
    for (const InvariantKind& k : all_kinds(1 + inst.g.order() % 3)) {
      if (k.needs_embedding() && !inst.pg()) continue;
      bool connected = is_connected(inst.g);
      if ((k.tag == Kind::gamma_c || k.tag == Kind::maxleaf) && (!connected || inst.g.order() < 3)) continue;
      if (k.tag == Kind::gamma_t && !connected) continue;
      SolveResult bb = solve(inst.g, inst.pg(), k);
      SolveResult br = oracle::brute_force(inst.g, inst.pg(), k);
      INFO(inst.name << " " << k.name());
      REQUIRE(bb.optimal);
      REQUIRE(bb.value == br.value);
      REQUIRE(valid(inst.g, inst.pg(), k, bb.witness));
    }
  }
}

TEST_CASE("domination chain and maxleaf equivalence", "[solve][property]") {
  for (int s = 0; s < 60; ++s) {
    Graph g = corpus::random_connected(3 + s % 8, 500 + s);
    int gamma = value(g, Kind::gamma), gt = value(g, Kind::gamma_t), gc = value(g, Kind::gamma_c);
    REQUIRE(gamma <= gt);
    // A single dominating vertex is not a total dominating set.
    if (gc >= 2) REQUIRE(gt <= gc);
    int ml = maxleaf(g).value;
    REQUIRE(ml + gc == g.order());
    REQUIRE(ml == oracle::maxleaf_by_spanning_trees(g));
  }
}

TEST_CASE("outerplane, outerplanar and K4-minor-free numbers", "[solve][property]") {
  for (int s = 0; s < 40; ++s) {
    PlaneGraph pg = s % 2 ? random_apollonian(5 + s % 8, s) : corpus::random_sparse_2tree(5 + s % 8, s, 2);
    const Graph& g = pg.graph();
    int sop = max_induced(pg, InvariantKind{Kind::s_oprime}).value;
    int so = value(g, Kind::s_o);
    int sk = value(g, Kind::s_k4);
    REQUIRE(sop <= so);
    REQUIRE(so <= sk);
    // Planar inputs: 5 s_o >= 4 s_K4.
    REQUIRE(5 * so >= 4 * sk);
    if (is_k4_minor_free(g)) REQUIRE((2 * so + 2 + 2) / 3 <= sop);
  }
}

TEST_CASE("witnesses are deterministic and lexicographically least", "[solve][determinism]") {
  Budget par;
  par.threads = 2;
  for (int s = 0; s < 20; ++s) {
    PlaneGraph pg = random_apollonian(6 + s % 6, s);
    const Graph& g = pg.graph();
    for (Kind k : {Kind::f, Kind::s_o, Kind::gamma, Kind::gamma_c}) {
      SolveResult a = solve(g, &pg, InvariantKind{k});
      SolveResult b = solve(g, &pg, InvariantKind{k});
      REQUIRE(a.witness == b.witness);
      REQUIRE(solve(g, &pg, InvariantKind{k}, par).value == a.value);
      if (k == Kind::f || k == Kind::s_o) REQUIRE(oracle::brute_force(g, &pg, InvariantKind{k}).witness == a.witness);
    }
  }
}

TEST_CASE("budget exhaustion reports a bound", "[solve]") {
  Budget tiny;
  tiny.max_nodes = 5;
  PlaneGraph pg = random_apollonian(20, 3);
  SolveResult r = max_induced(pg.graph(), InvariantKind{Kind::s_o}, tiny);
  REQUIRE_FALSE(r.optimal);
  REQUIRE(r.bound == BoundDirection::lower);
  REQUIRE(induced_satisfies(pg.graph(), nullptr, InvariantKind{Kind::s_o}, r.witness));
  SolveResult d = min_dominating(pg.graph(), Domination::connected, tiny);
  REQUIRE_FALSE(d.optimal);
  REQUIRE(d.bound == BoundDirection::upper);
  REQUIRE(dominates(pg.graph(), Domination::connected, d.witness));
}

TEST_CASE("oracle refuses large instances", "[oracle]") {
  REQUIRE_THROWS_AS(oracle::brute_force(cycle_graph(23), nullptr, InvariantKind{Kind::f}), InstanceTooLarge);
  REQUIRE(oracle::brute_force(k4_plane().graph(), nullptr, InvariantKind{Kind::f}).value == 2);
}
