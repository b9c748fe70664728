#pragma once

#include "indsub/graph.hpp"
#include "indsub/plane_graph.hpp"
#include "indsub/solvers.hpp"

namespace indsub::oracle {

inline constexpr int kOracleLimit = 22;

// Exhaustive subset enumeration by size with its own predicate code; shares
// nothing with the branch and bound. Witness has the lexicographically least
// characteristic vector among optimal sets. Throws InstanceTooLarge above
// kOracleLimit vertices.
SolveResult brute_force(const Graph& g, const PlaneGraph* pg, InvariantKind kind);

// Independent predicates used by the oracle.
bool outerplanar_by_hamiltonian_cycle(const Graph& g);
// Outerplanar and no cycle of pg[s] has vertices of s strictly on both sides.
bool outerplane_by_separating_cycles(const PlaneGraph& pg, const VertexSet& s);
bool treewidth_at_most_dp(const Graph& g, int t);
// Maximum leaves over all spanning trees, by direct enumeration.
int maxleaf_by_spanning_trees(const Graph& g);

}  // namespace indsub::oracle
