#include <catch_amalgamated.hpp>

#include <set>
#include <string>

#include "indsub/errors.hpp"
#include "indsub/families.hpp"
#include "indsub/graph_io.hpp"
#include "indsub/oracle.hpp"
#include "indsub/recognizers.hpp"

using namespace indsub;

namespace {

using EdgeSet = std::set<Edge>;

std::string sub(const std::string& x, int j, int i) {
  return x + "_{" + std::to_string(j) + "," + std::to_string(i) + "}";
}

struct Expected {
  const FamilyInstance& fi;
  EdgeSet edges;
  void add(const std::string& a, const std::string& b) {
    int u = fi.label(a), v = fi.label(b);
    edges.insert({std::min(u, v), std::max(u, v)});
  }
  // Octahedron with boundary a,b,c and inner triangle v_1 v_2 v_3, where
  // v_1 ~ a,b; v_2 ~ b,c; v_3 ~ c,a.
  void octahedron(const std::string& a, const std::string& b, const std::string& c, const std::string& tag,
                  const std::string& v) {
    std::string v1 = v + "_1" + tag, v2 = v + "_2" + tag, v3 = v + "_3" + tag;
    add(a, b), add(b, c), add(c, a);
    add(v1, v2), add(v2, v3), add(v3, v1);
    add(v1, a), add(v1, b), add(v2, b), add(v2, c), add(v3, c), add(v3, a);
  }
  void r_prime(const std::string& a, const std::string& b, const std::string& c, const std::string& tag) {
    octahedron(a, b, c, tag, "v");
    for (int t = 1; t <= 3; ++t) add("v" + tag, "v_" + std::to_string(t) + tag);
  }
  // Octahedron on u, v plus a second one on v, w with w_1 ~ v_1,v_3;
  // w_2 ~ v_1,v_2; w_3 ~ v_2,v_3.
  void gadget_i(const std::string& a, const std::string& b, const std::string& c, const std::string& tag) {
    octahedron(a, b, c, tag, "v");
    auto v = [&](int t) { return "v_" + std::to_string(t) + tag; };
    auto w = [&](int t) { return "w_" + std::to_string(t) + tag; };
    add(w(1), w(2)), add(w(2), w(3)), add(w(3), w(1));
    add(w(1), v(1)), add(w(1), v(3)), add(w(2), v(1)), add(w(2), v(2)), add(w(3), v(2)), add(w(3), v(3));
  }
  void k4(const std::vector<std::string>& xs) {
    for (std::size_t a = 0; a < xs.size(); ++a)
      for (std::size_t b = a + 1; b < xs.size(); ++b) add(xs[a], xs[b]);
  }
};

EdgeSet actual(const FamilyInstance& fi) {
  auto e = fi.pg.graph().edges();
  return EdgeSet(e.begin(), e.end());
}

int nxt(int i) { return i % 3 + 1; }

}  // namespace

TEST_CASE("octahedron, R' and R", "[families]") {
  PlaneGraph oct = gen_octahedron();
  REQUIRE(oct.order() == 6);
  for (int v = 0; v < 6; ++v) REQUIRE(oct.graph().degree(v) == 4);
  REQUIRE(oct.face_count() == 8);

  PlaneGraph rp = gen_R_prime();
  REQUIRE(rp.order() == 7);
  std::vector<int> deg4;
  for (int v = 0; v < 7; ++v)
    if (rp.graph().degree(v) == 4) deg4.push_back(v);
  REQUIRE(deg4 == std::vector<int>{0, 1, 2});
  REQUIRE(find_face(rp, deg4) >= 0);

  FamilyInstance r = gen_R();
  REQUIRE(r.pg.order() == 16);
  int covered = 0;
  for (int q = 1; q <= 4; ++q) {
    const VertexSet& part = r.cert("K4_" + std::to_string(q));
    REQUIRE(part.size() == 4);
    REQUIRE(r.pg.graph().induced(part).size() == 6);
    covered += part.size();
  }
  REQUIRE(covered == 16);

  Expected ex{r, {}};
  ex.k4({"x_0", "x_1", "x_2", "x_3"});
  for (int i = 1; i <= 3; ++i)
    ex.r_prime("x_" + std::to_string(i), "x_" + std::to_string(nxt(i)), "x_0", "(R'_" + std::to_string(i) + ")");
  REQUIRE(ex.edges == actual(r));
}

TEST_CASE("gadget I", "[families]") {
  FamilyInstance i = gen_I();
  REQUIRE(i.pg.order() == 9);
  int deg4 = 0;
  for (int v : {0, 1, 2}) deg4 += i.pg.graph().degree(v) == 4;
  REQUIRE(deg4 == 3);
  REQUIRE(i.cert("S") == VertexSet(9, {i.label("v_1"), i.label("w_1"), i.label("w_2"), i.label("w_3")}));
  Expected ex{i, {}};
  ex.gadget_i("u_1", "u_2", "u_3", "");
  REQUIRE(ex.edges == actual(i));
  REQUIRE(is_plane_triangulation(i.pg));
}

TEST_CASE("D_k matches its definition", "[families][dk]") {
  for (int k : {4, 6}) {
    FamilyInstance d = gen_Dk(k);
    REQUIRE(d.pg.order() == 16 * k + 1);
    Expected ex{d, {}};
    for (int j = 1; j <= k; ++j) {
      ex.k4({sub("x", j, 0), sub("x", j, 1), sub("x", j, 2), sub("x", j, 3)});
      for (int i = 1; i <= 3; ++i) {
        ex.r_prime(sub("x", j, i), sub("x", j, nxt(i)), sub("x", j, 0), "(R'" + sub("", j, i) + ")");
        ex.add(sub("x", j, i), "z");
      }
    }
    for (int i = 1; i < k; ++i) {
      ex.add(sub("x", i, 1), sub("x", i + 1, 1));
      ex.add(sub("x", i, 3), sub("x", i + 1, 1));
      ex.add(sub("x", i, 3), sub("x", i + 1, 2));
    }
    REQUIRE(ex.edges == actual(d));
    REQUIRE(is_plane_triangulation(d.pg));
    const VertexSet& q = d.cert("Q");
    REQUIRE(q.size() == 12 * k);
    REQUIRE(is_k4_minor_free(d.pg.graph().induced(q)));
    REQUIRE(q == d.cert("M").united(d.cert("W")));
    REQUIRE(is_outerplanar(d.pg.graph().induced(d.cert("M"))));
    REQUIRE(d.cert("M").size() == 3 * k);
  }
  REQUIRE_THROWS_AS(gen_Dk(5), BadParameter);
  REQUIRE_THROWS_AS(gen_Dk(2), BadParameter);
}

TEST_CASE("a copy of R holds at most 12 outerplanar vertices", "[families][dk][oracle]") {
  // Enumeration with the independent outerplanarity predicate.
  Graph r = gen_R().pg.graph();
  int best = 0, optimal_sets = 0;
  bool all_contain_x = true;
  for (std::uint32_t m = 0; m < (1u << 16); ++m) {
    int size = __builtin_popcount(m);
    if (size < 12) continue;
    std::vector<int> ids;
    for (int v = 0; v < 16; ++v)
      if (m >> v & 1) ids.push_back(v);
    VertexSet s(16, ids);
    if (!oracle::outerplanar_by_hamiltonian_cycle(r.induced(s))) continue;
    if (size > best) best = size, optimal_sets = 0, all_contain_x = true;
    if (size == best) {
      ++optimal_sets;
      all_contain_x = all_contain_x && s.contains(1) && s.contains(2) && s.contains(3);
    }
  }
  REQUIRE(best == 12);
  REQUIRE(optimal_sets == 27);
  REQUIRE(all_contain_x);
}

TEST_CASE("G_k matches its definition", "[families][gk]") {
  for (int k : {4, 5}) {
    FamilyInstance g = gen_Gk(k);
    REQUIRE(g.pg.order() == 22 * k);
    Expected ex{g, {}};
    for (int j = 1; j <= k; ++j) {
      ex.k4({sub("x", j, 0), sub("x", j, 1), sub("x", j, 2), sub("x", j, 3)});
      for (int i = 1; i <= 3; ++i)
        ex.gadget_i(sub("x", j, i), sub("x", j, nxt(i)), sub("x", j, 0), "(I" + sub("", j, i) + ")");
    }
    for (int i = 1; i < k; ++i) {
      ex.add(sub("x", i, 1), sub("x", i + 1, 1));
      ex.add(sub("x", i, 3), sub("x", i + 1, 1));
      ex.add(sub("x", i, 3), sub("x", i + 1, 2));
      ex.add(sub("x", i, 1), sub("x", k, 3));
    }
    for (int i = 3; i <= k; ++i) {
      ex.add(sub("x", 2, 3), sub("x", i, 2));
      ex.add(sub("x", 2, 3), sub("x", i, 3));
    }
    ex.add(sub("x", 1, 2), sub("x", k, 3));
    ex.add(sub("x", 1, 2), sub("x", 2, 3));
    ex.add(sub("x", 1, 3), sub("x", 2, 3));
    REQUIRE(ex.edges == actual(g));
    REQUIRE(is_plane_triangulation(g.pg));
    REQUIRE(g.cert("R").size() == 15 * k);
    REQUIRE(is_outerplanar(g.pg.graph().induced(g.cert("R"))));
  }
  REQUIRE_THROWS_AS(gen_Gk(3), BadParameter);
}

TEST_CASE("outerplane subsets of I keep at most four interior vertices", "[families][gk][oracle]") {
  FamilyInstance i = gen_I();
  int best = 0;
  for (int m = 0; m < 512; ++m) {
    std::vector<char> in(9);
    for (int v = 0; v < 9; ++v) in[v] = m >> v & 1;
    VertexSet s = VertexSet::from_mask(9, in);
    if (!oracle::outerplane_by_separating_cycles(i.pg, s)) continue;
    int interior = 0;
    for (int v = 3; v < 9; ++v) interior += in[v];
    best = std::max(best, interior);
  }
  REQUIRE(best == 4);
}

TEST_CASE("T_k matches its definition", "[families][tk]") {
  for (int k : {2, 3}) {
    FamilyInstance t = gen_Tk(k);
    REQUIRE(t.pg.order() == 24 * k);
    Expected ex{t, {}};
    for (int j = 1; j <= k; ++j)
      for (int i = 1; i <= 3; ++i) {
        ex.add(sub("x", j, i), sub("x", j, nxt(i)));
        ex.add(sub("y", j, i), sub("y", j, nxt(i)));
        ex.add(sub("x", j, i), sub("y", j, i));
        ex.add(sub("x", j, nxt(i)), sub("y", j, i));
        if (j < k) {
          ex.add(sub("y", j, i), sub("x", j + 1, i));
          ex.add(sub("y", j, nxt(i)), sub("x", j + 1, i));
        }
        ex.gadget_i(sub("x", j, i), sub("x", j, nxt(i)), sub("y", j, i), "(I" + sub("", j, i) + ")");
      }
    REQUIRE(ex.edges == actual(t));
    REQUIRE(is_plane_triangulation(t.pg));
    REQUIRE(is_eulerian(t.pg.graph()));
    const VertexSet& cds = t.cert("CDS");
    REQUIRE(cds.size() == 9 * k - 1);
    REQUIRE(is_connected_dominating(t.pg.graph(), cds));
    const VertexSet& op = t.cert("OUTERPLANE");
    REQUIRE(op == cds.complement());
    REQUIRE(op.size() == 15 * k + 1);
    REQUIRE(is_outerplane(t.pg, op));
    REQUIRE(t.pg.order() - cds.size() < (2 * t.pg.order() + 2) / 3);
  }
  REQUIRE_THROWS_AS(gen_Tk(1), BadParameter);
}

TEST_CASE("K_{1,1,3} chains", "[families]") {
  const int expected[] = {4, 8, 12};
  for (int m = 1; m <= 3; ++m) {
    Graph g = gen_k113_chain(m);
    REQUIRE(g.order() == 5 * m);
    REQUIRE(g.size() == 7 * m + (m - 1));
    REQUIRE(is_k4_minor_free(g));
    REQUIRE(oracle::brute_force(g, nullptr, InvariantKind{Kind::s_o}).value == expected[m - 1]);
  }
  REQUIRE(gen_k113_chain(1) == k113());
  REQUIRE_THROWS_AS(gen_k113_chain(0), BadParameter);
}

TEST_CASE("nested triangles", "[families]") {
  PlaneGraph g3 = gen_nested_triangles(2, 3);
  REQUIRE(g3.order() == 9);
  REQUIRE(oracle::brute_force(g3.graph(), &g3, InvariantKind{Kind::s_oprime}).value == 7);
  PlaneGraph tri = gen_nested_triangles(1, 0);
  REQUIRE(tri.order() == 3);
  REQUIRE(is_outerplane(tri, VertexSet::all(3)));
  PlaneGraph g1 = gen_nested_triangles(2, 1);
  REQUIRE(g1.order() == 7);
  REQUIRE(oracle::brute_force(g1.graph(), &g1, InvariantKind{Kind::s_oprime}).value == (2 * 7 + 2 + 2) / 3);
  for (int k = 1; k <= 3; ++k) {
    PlaneGraph g = gen_nested_triangles(k, 3);
    REQUIRE(oracle::brute_force(g.graph(), &g, InvariantKind{Kind::s_oprime}).value == 2 * k + 3);
  }
  REQUIRE_THROWS_AS(gen_nested_triangles(0, 0), BadParameter);
  REQUIRE_THROWS_AS(gen_nested_triangles(2, 4), BadParameter);
}

TEST_CASE("random generators", "[families][random]") {
  REQUIRE(random_2tree(3, 99).graph() == complete_graph(3));
  REQUIRE(is_ktree(random_2tree(12, 7).graph(), 2));
  REQUIRE(is_plane_triangulation(random_apollonian(10, 1)));
  for (int s = 0; s < 10; ++s) {
    REQUIRE(write_graph(random_2tree(15, s)) == write_graph(random_2tree(15, s)));
    REQUIRE(write_graph(random_apollonian(15, s)) == write_graph(random_apollonian(15, s)));
    REQUIRE(random_ktree(12, 3, s) == random_ktree(12, 3, s));
  }
  REQUIRE_FALSE(write_graph(random_2tree(15, 1)) == write_graph(random_2tree(15, 2)));
  REQUIRE_THROWS_AS(random_2tree(2, 0), BadParameter);
  REQUIRE_THROWS_AS(random_apollonian(3, 0), BadParameter);
}

TEST_CASE("make_family dispatches by name", "[families]") {
  for (const auto& name : family_names()) {
    FamilyInstance fi = make_family(name, name == "dk" || name == "gk" ? 4 : 2, 10, 1);
    REQUIRE(fi.pg.order() > 0);
    REQUIRE(fi.family == name);
  }
  REQUIRE_THROWS_AS(make_family("nope", 2, 10, 1), BadParameter);
}
