#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "corpus.hpp"
#include "indsub/embedding_builder.hpp"
#include "indsub/errors.hpp"
#include "indsub/families.hpp"
#include "indsub/graph_io.hpp"
#include "indsub/oracle.hpp"
#include "indsub/plane_graph.hpp"

using namespace indsub;

namespace {

PlaneGraph k4() { return triangulation_from_faces(4, {{{1, 2, 3}}, {{0, 1, 2}}, {{0, 2, 3}}, {{0, 3, 1}}}); }

PlaneGraph cycle_embedded(int n) {
  Graph g = cycle_graph(n);
  std::vector<std::vector<int>> rot(n);
  for (int v = 0; v < n; ++v) rot[v] = {(v + n - 1) % n, (v + 1) % n};
  return PlaneGraph(g, rot);
}

int darts_in_faces(const PlaneGraph& pg) {
  std::multiset<std::pair<int, int>> seen;
  for (const auto& f : pg.faces())
    for (const auto& w : f.walks)
      for (auto d : w) seen.insert({d.tail, d.head});
  std::set<std::pair<int, int>> unique(seen.begin(), seen.end());
  return unique.size() == seen.size() ? static_cast<int>(seen.size()) : -1;
}

void check_euler(const PlaneGraph& pg) {
  REQUIRE(darts_in_faces(pg) == 2 * pg.size());
  REQUIRE(pg.order() - pg.size() + pg.face_count() == 1 + pg.components());
}

}  // namespace

TEST_CASE("VertexSet is canonical and validates ids", "[graph]") {
  VertexSet s(6, {4, 1, 4, 2});
  REQUIRE(s.members() == std::vector<int>{1, 2, 4});
  REQUIRE(s.complement().members() == std::vector<int>{0, 3, 5});
  REQUIRE_THROWS_AS(VertexSet(3, {3}), BadParameter);
}

TEST_CASE("Graph rejects loops and duplicates", "[graph]") {
  REQUIRE_THROWS_AS(Graph::from_edges(3, {{0, 0}}), BadParameter);
  REQUIRE_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), BadParameter);
  Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  int degsum = 0;
  for (int v = 0; v < 4; ++v) degsum += g.degree(v);
  REQUIRE(degsum == 2 * g.size());
}

TEST_CASE("trace_faces on small embeddings", "[graph][faces]") {
  EmbeddingBuilder tri = EmbeddingBuilder::triangle();
  REQUIRE(tri.current().face_count() == 2);
  for (const auto& f : tri.current().faces()) REQUIRE(f.length() == 3);
  PlaneGraph oct = gen_octahedron();
  REQUIRE(oct.face_count() == 8);
  for (const auto& f : oct.faces()) REQUIRE(f.length() == 3);
  PlaneGraph k = k4();
  REQUIRE(k.face_count() == 4);
  check_euler(k);
  check_euler(oct);
}

TEST_CASE("malformed rotations are rejected", "[graph][faces]") {
  Graph g = cycle_graph(3);
  REQUIRE_THROWS_AS(PlaneGraph(g, {{1, 2}, {0, 2}, {0}}), MalformedRotation);
}

TEST_CASE("cycle_sides examples", "[graph][faces]") {
  PlaneGraph k = k4();
  std::vector<int> outer{1, 2, 3};
  CycleSides cs = cycle_sides(k, outer);
  std::vector<std::size_t> sizes{cs.side_a.size(), cs.side_b.size()};
  std::sort(sizes.begin(), sizes.end());
  REQUIRE(sizes == std::vector<std::size_t>{1, 3});
  const auto& big = cs.side_a.size() == 3 ? cs.strictly_a : cs.strictly_b;
  REQUIRE(big == std::vector<int>{0});

  PlaneGraph oct = gen_octahedron();
  std::vector<int> tri{0, 1, 2};
  CycleSides os = cycle_sides(oct, tri);
  REQUIRE(std::min(os.side_a.size(), os.side_b.size()) == 1);
  REQUIRE(std::max(os.side_a.size(), os.side_b.size()) == 7);

  PlaneGraph c4 = cycle_embedded(4);
  std::vector<int> c{0, 1, 2, 3};
  CycleSides s4 = cycle_sides(c4, c);
  REQUIRE(s4.side_a.size() == 1);
  REQUIRE(s4.side_b.size() == 1);
  REQUIRE(s4.strictly_a.empty());
  REQUIRE(s4.strictly_b.empty());

  std::vector<int> bad{0, 2, 1, 3};
  REQUIRE_THROWS_AS(cycle_sides(c4, bad), NotACycle);
}

TEST_CASE("cycle_sides partitions faces for facial and non-facial cycles", "[graph][faces][property]") {
  PlaneGraph oct = gen_octahedron();
  // 4-cycles of the octahedron around each vertex are non-facial.
  for (int v = 0; v < 6; ++v) {
    std::vector<int> ring(oct.rotation(v).begin(), oct.rotation(v).end());
    CycleSides cs = cycle_sides(oct, ring);
    std::vector<int> all = cs.side_a;
    all.insert(all.end(), cs.side_b.begin(), cs.side_b.end());
    std::sort(all.begin(), all.end());
    REQUIRE(all.size() == 8);
    REQUIRE(std::adjacent_find(all.begin(), all.end()) == all.end());
    REQUIRE(cs.side_a.size() == 4);
    REQUIRE(cs.strictly_a.size() + cs.strictly_b.size() == 2);
  }
  for (int s = 0; s < 20; ++s) {
    PlaneGraph ap = random_apollonian(9, s);
    for (const auto& f : ap.faces()) {
      std::vector<int> cyc;
      for (auto d : f.walks.front()) cyc.push_back(d.tail);
      CycleSides cs = cycle_sides(ap, cyc);
      REQUIRE(static_cast<int>(cs.side_a.size() + cs.side_b.size()) == ap.face_count());
    }
  }
}

TEST_CASE("is_outerplane examples", "[graph][outerplane]") {
  PlaneGraph k = k4();
  REQUIRE_FALSE(is_outerplane(k, VertexSet::all(4)));
  for (const auto& f : k.faces()) REQUIRE(is_outerplane(k, VertexSet(4, f.vertices())));
  REQUIRE_FALSE(is_outerplane(gen_octahedron(), VertexSet::all(6)));
}

TEST_CASE("is_outerplane is hereditary", "[graph][outerplane][property]") {
  std::mt19937_64 rng(11);
  for (int s = 0; s < 30; ++s) {
    PlaneGraph pg = s % 2 ? random_apollonian(10, s) : random_2tree(10, s);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<char> in(10);
      for (auto& c : in) c = rng() % 3 != 0;
      VertexSet set = VertexSet::from_mask(10, in);
      if (!is_outerplane(pg, set)) continue;
      for (int v : set) {
        std::vector<char> less = in;
        less[v] = 0;
        REQUIRE(is_outerplane(pg, VertexSet::from_mask(10, less)));
      }
    }
  }
}

TEST_CASE("is_outerplane agrees with the separating-cycle oracle", "[graph][outerplane][oracle]") {
  REQUIRE_FALSE(oracle::outerplane_by_separating_cycles(k4(), VertexSet::all(4)));
  std::mt19937_64 rng(5);
  for (int s = 0; s < 25; ++s) {
    PlaneGraph pg = s % 3 == 0 ? random_apollonian(9, s) : corpus::random_sparse_2tree(9, s, s % 3);
    for (int trial = 0; trial < 15; ++trial) {
      std::vector<char> in(9);
      for (auto& c : in) c = rng() % 4 != 0;
      VertexSet set = VertexSet::from_mask(9, in);
      REQUIRE(is_outerplane(pg, set) == oracle::outerplane_by_separating_cycles(pg, set));
    }
  }
}

TEST_CASE("builder primitives", "[graph][builder]") {
  SECTION("paste R' into a face of K4") {
    EmbeddingBuilder b(k4());
    PlaneGraph rp = gen_R_prime();
    int f = find_face(b.current(), {1, 2, 3});
    int gf = find_face(rp, {0, 1, 2});
    std::vector<int> map;
    try {
      map = b.paste_into_face(f, rp, gf, {{{0, 1}, {1, 2}, {2, 3}}});
    } catch (const OrientationMismatch&) {
      PlaneGraph m = rp.mirrored();
      map = b.paste_into_face(f, m, find_face(m, {0, 1, 2}), {{{0, 1}, {1, 2}, {2, 3}}});
    }
    const PlaneGraph& pg = b.current();
    REQUIRE(pg.order() == 8);
    REQUIRE(pg.face_count() == 2 * 8 - 4);
    for (const auto& face : pg.faces()) REQUIRE(face.length() == 3);
    check_euler(pg);
  }
  SECTION("add_edge_in_face splits a square") {
    EmbeddingBuilder b(cycle_embedded(4));
    b.add_edge_in_face(0, 0, 2);
    REQUIRE(b.current().face_count() == 3);
    int triangles = 0;
    for (const auto& f : b.current().faces()) triangles += f.length() == 3;
    REQUIRE(triangles == 2);
  }
  SECTION("insert_vertex_in_face in a triangle") {
    EmbeddingBuilder b = EmbeddingBuilder::triangle();
    int v = b.insert_vertex_in_face(0, {0, 1, 2});
    REQUIRE(b.current().graph().degree(v) == 3);
    REQUIRE(b.current().face_count() == 4);
  }
  SECTION("errors") {
    // 4 is opposite 0 in the octahedron, so off the face 0,1,2.
    EmbeddingBuilder o(gen_octahedron());
    REQUIRE_THROWS_AS(o.add_edge_in_face(find_face(o.current(), {0, 1, 2}), 0, 4), VertexNotOnFace);
    PlaneGraph rp = gen_R_prime();
    int f = find_face(k4(), {1, 2, 3});
    // One orientation of the identification must be rejected.
    int rejected = 0;
    for (const PlaneGraph& gad : {rp, rp.mirrored()}) {
      EmbeddingBuilder d(k4());
      try {
        d.paste_into_face(f, gad, find_face(gad, {0, 1, 2}), {{{0, 1}, {1, 2}, {2, 3}}});
      } catch (const OrientationMismatch&) {
        ++rejected;
      }
    }
    REQUIRE(rejected == 1);
  }
}

TEST_CASE("builder sequences keep face invariants", "[graph][builder][property]") {
  for (int s = 0; s < 40; ++s) {
    check_euler(random_2tree(4 + s % 20, s));
    check_euler(random_apollonian(4 + s % 20, s));
    check_euler(corpus::random_sparse_2tree(6 + s % 10, s, 2));
  }
  for (int k = 1; k <= 3; ++k)
    for (int e = 0; e <= 3; ++e) check_euler(gen_nested_triangles(k, e));
}

TEST_CASE("GraphText examples", "[graph][io]") {
  ParsedGraph c3 = read_graph("graph 3 3\ne 0 1\ne 1 2\ne 0 2\n");
  REQUIRE(c3.graph == cycle_graph(3));
  REQUIRE_FALSE(c3.plane.has_value());
  std::string oct = write_graph(gen_octahedron());
  ParsedGraph po = read_graph(oct);
  REQUIRE(po.plane.has_value());
  REQUIRE(po.plane->face_count() == 8);
  try {
    read_graph("graph 3 2\ne 0 1\ne 0 1\n");
    FAIL("duplicate edge accepted");
  } catch (const ParseError& e) {
    REQUIRE(e.line() == 3);
  }
  REQUIRE_THROWS_AS(read_graph("graph 2 1\ne 0 5\n"), ParseError);
  REQUIRE_THROWS_AS(read_graph("graph 3 2\ne 0 1\n"), ParseError);
}

TEST_CASE("GraphText round trips", "[graph][io][property]") {
  for (int s = 0; s < 100; ++s) {
    Graph g = corpus::random_graph(1 + s % 15, s);
    REQUIRE(read_graph(write_graph(g)).graph == g);
  }
  for (int s = 0; s < 30; ++s) {
    PlaneGraph pg = s % 2 ? random_apollonian(5 + s, s) : random_2tree(3 + s, s);
    ParsedGraph back = read_graph(write_graph(pg));
    REQUIRE(back.plane.has_value());
    REQUIRE(write_graph(*back.plane) == write_graph(pg));
  }
  PlaneGraph nested = gen_nested_triangles(3, 3);
  ParsedGraph back = read_graph(write_graph(nested));
  REQUIRE(back.plane->face_count() == nested.face_count());
  REQUIRE(write_graph(*back.plane) == write_graph(nested));
}

TEST_CASE("certificate sidecar round trips", "[graph][io]") {
  FamilyInstance fi = gen_Tk(2);
  Certificates c = read_certificates(write_certificates(fi.certificates), fi.pg.order());
  REQUIRE(*c.find("CDS") == fi.cert("CDS"));
  REQUIRE(c.label("x_{2,3}") == fi.label("x_{2,3}"));
  REQUIRE_THROWS_AS(c.label("nope"), BadParameter);
}
