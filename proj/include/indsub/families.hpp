#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "indsub/graph.hpp"
#include "indsub/graph_io.hpp"
#include "indsub/plane_graph.hpp"

namespace indsub {

struct FamilyInstance {
  std::string family;
  std::vector<std::pair<std::string, std::int64_t>> params;
  PlaneGraph pg;
  // Named vertex sets plus symbol -> vertex labels such as "x_{2,3}", "z"
  // or "v_1(I_{1,2})".
  Certificates certificates;

  const VertexSet& cert(const std::string& name) const;
  int label(const std::string& symbol) const { return certificates.label(symbol); }
};

// Triangulation from its faces; orientation is propagated from faces[0].
// Throws MalformedEmbedding when the faces do not form a sphere.
PlaneGraph triangulation_from_faces(int n, const std::vector<std::array<int, 3>>& faces);

// u1,u2,u3 = 0,1,2 bound a face; v1 = 3 ~ u1,u2; v2 = 4 ~ u2,u3; v3 = 5 ~ u3,u1.
PlaneGraph gen_octahedron();
// Octahedron with centre 6 in face v1v2v3; boundary abc = 0,1,2 (the degree-4 vertices).
PlaneGraph gen_R_prime();
// K4 on x0..x3 = 0..3 with R' pasted into each face x_i x_{i+1} x0.
// Certificates K4_1..K4_4 partition the vertices into cliques.
FamilyInstance gen_R();
// Octahedron with a second octahedron pasted into face v1v2v3; ids u1..u3 = 0..2,
// v1..v3 = 3..5, w1..w3 = 6..8 with w1 ~ v1,v3, w2 ~ v1,v2, w3 ~ v2,v3.
// Certificates S = {v1,w1,w2,w3} and T = {v1,w1}.
FamilyInstance gen_I();

// k even, k >= 4. n = 16k + 1; certificates M, W, Q.
FamilyInstance gen_Dk(int k);
// k >= 4. n = 22k; certificate R (induced outerplanar, 15k).
FamilyInstance gen_Gk(int k);
// k >= 2. n = 24k; certificates W, CDS (9k - 1) and OUTERPLANE (15k + 1).
FamilyInstance gen_Tk(int k);

// m copies of K_{1,1,3}; copy i at 5(i-1): apexes +0,+1, x1..x3 at +2..+4.
// x3 of copy i is joined to x1 of copy i+1.
Graph gen_k113_chain(int m);
// Triangles C_1..C_k (C_i = 3(i-1)..3(i-1)+2), C_i inside C_{i+1};
// extras 1..3 add v1 (inside C_1), v2 (outside C_k), v3 (inside C_1) at 3k, 3k+1, 3k+2.
PlaneGraph gen_nested_triangles(int k, int extras);

PlaneGraph random_2tree(int n, std::uint64_t seed);
PlaneGraph random_apollonian(int n, std::uint64_t seed);
// Abstract k-tree on n >= k+1 vertices, each new vertex on a uniform k-clique.
Graph random_ktree(int n, int k, std::uint64_t seed);

// Names accepted by make_family: octahedron, rprime, r, dk, i, gk, tk,
// k113chain, nested, rand2tree, apollonian.
std::vector<std::string> family_names();
// k doubles as m for k113chain; unused parameters are ignored. k113chain
// instances carry a straight-line embedding. Throws BadParameter.
FamilyInstance make_family(const std::string& name, int k, int n, std::uint64_t seed, int extras = 3);

}  // namespace indsub
