#pragma once

#include <vector>

#include "indsub/graph.hpp"
#include "indsub/plane_graph.hpp"

namespace indsub {

// Classes ordered by decreasing size, then lexicographically.
struct Partition {
  std::vector<VertexSet> classes;
};

// The unique partition of a k-tree into k+1 independent sets. Throws NotAKTree.
Partition ktree_partition(const Graph& g, int k);

// Union of the t+1 largest classes of an s-tree completion of g.
// Throws BadParameter, TreewidthExceeded, InstanceTooLarge.
VertexSet extract_bounded_tw(const Graph& g, int s, int t);

// Induced outerplanar subgraph of order >= ceil(4n/5). Throws NotK4MinorFree.
VertexSet extract_outerplanar_4_5(const Graph& g);

// Induced outerplane subgraph of order >= ceil((2n+2)/3) in pg's embedding.
// Guaranteed on 2-trees; other K4-minor-free inputs are best effort.
// Throws NotK4MinorFree.
VertexSet extract_outerplane_2_3(const PlaneGraph& pg);

int outerplanar_target(int n);  // ceil(4n/5)
int outerplane_target(int n);   // ceil((2n+2)/3), capped at n

}  // namespace indsub
