#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "indsub/graph.hpp"
#include "indsub/plane_graph.hpp"

namespace corpus {

// G(n, p) conditioned on connectivity by a random recursive tree.
indsub::Graph random_connected(int n, std::uint64_t seed, double p = 0.35);
// Any G(n, p), possibly disconnected.
indsub::Graph random_graph(int n, std::uint64_t seed, double p = 0.3);
// Embedded K4-minor-free graph: a random 2-tree with up to `drops` edges
// removed while staying connected.
indsub::PlaneGraph random_sparse_2tree(int n, std::uint64_t seed, int drops);

struct Instance {
  std::string name;
  indsub::Graph g;
  std::vector<indsub::PlaneGraph> plane;  // empty or one embedding
  const indsub::PlaneGraph* pg() const { return plane.empty() ? nullptr : &plane.front(); }
};

// `count` seeded instances with 4 <= n <= nmax cycling through connected
// graphs, 2-trees, sparse 2-trees and Apollonian triangulations.
std::vector<Instance> mixed(int count, int nmax, std::uint64_t seed0 = 0);
// K4, octahedron, R', I with embeddings.
std::vector<Instance> named_gadgets();

}  // namespace corpus
