#include "corpus.hpp"

#include <algorithm>
#include <random>

#include "indsub/errors.hpp"
#include "indsub/families.hpp"

namespace corpus {

using namespace indsub;

Graph random_connected(int n, std::uint64_t seed, double p) {
  std::mt19937_64 rng(seed * 7919 + 17);
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v, std::uniform_int_distribution<int>(0, v - 1)(rng));
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

Graph random_graph(int n, std::uint64_t seed, double p) {
  std::mt19937_64 rng(seed * 104729 + 5);
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

PlaneGraph random_sparse_2tree(int n, std::uint64_t seed, int drops) {
  PlaneGraph pg = random_2tree(n, seed);
  std::mt19937_64 rng(seed + 99);
  for (int d = 0; d < drops; ++d) {
    auto edges = pg.graph().edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    for (auto [u, v] : edges) {
      try {
        pg = pg.without_edge(u, v);
        break;
      } catch (const BadParameter&) {
        // bridge; try another
      }
    }
  }
  return pg;
}

std::vector<Instance> mixed(int count, int nmax, std::uint64_t seed0) {
  std::vector<Instance> out;
  for (int i = 0; i < count; ++i) {
    std::uint64_t seed = seed0 + i;
    int n = 4 + i % (nmax - 3);
    Instance in;
    switch (i % 4) {
      case 0:
        in.name = "connected";
        in.g = random_connected(n, seed);
        break;
      case 1:
        in.name = "2tree";
        in.plane.push_back(random_2tree(n, seed));
        break;
      case 2:
        in.name = "sparse2tree";
        in.plane.push_back(random_sparse_2tree(n, seed, 1 + i % 3));
        break;
      default:
        in.name = "apollonian";
        in.plane.push_back(random_apollonian(n, seed));
        break;
    }
    if (!in.plane.empty()) in.g = in.plane.front().graph();
    in.name += "/n" + std::to_string(n) + "/s" + std::to_string(seed);
    out.push_back(std::move(in));
  }
  return out;
}

std::vector<Instance> named_gadgets() {
  std::vector<Instance> out;
  auto add = [&](const std::string& name, PlaneGraph pg) {
    Instance in{name, pg.graph(), {pg}};
    out.push_back(std::move(in));
  };
  add("K4", triangulation_from_faces(4, {{{1, 2, 3}}, {{0, 1, 2}}, {{0, 2, 3}}, {{0, 3, 1}}}));
  add("octahedron", gen_octahedron());
  add("R'", gen_R_prime());
  add("I", gen_I().pg);
  return out;
}

}  // namespace corpus
