#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "indsub/graph.hpp"
#include "indsub/plane_graph.hpp"

namespace indsub {

struct MinorModel {
  Graph pattern;
  std::vector<VertexSet> branch_sets;  // one per pattern vertex
};

inline constexpr std::uint64_t kDefaultMinorBudget = 10'000'000;

// Branch-set search; g must have at most 64 vertices, h at most 10.
// Throws PatternTooLarge, InstanceTooLarge (budget or size).
std::optional<MinorModel> has_minor(const Graph& g, const Graph& h,
                                    std::uint64_t node_budget = kDefaultMinorBudget);
// Disjoint, connected, nonempty branch sets covering every pattern edge.
bool validate_minor_model(const Graph& g, const MinorModel& model);

bool is_k4_minor_free(const Graph& g);
// Exact and polynomial: K4-minor-free, and every block's greedy 2-tree
// completion has no K_{1,1,3}.
bool is_outerplanar(const Graph& g);
// Same answer via K4 and K_{2,3} minor search; small graphs only.
bool is_outerplanar_by_minors(const Graph& g, std::uint64_t node_budget = kDefaultMinorBudget);
bool has_k113_subgraph(const Graph& g);

struct KTreeOrder {
  std::vector<int> base;         // the final K_{k+1}, sorted
  std::vector<int> elimination;  // removal order; reversed, it builds g from base
};
std::optional<KTreeOrder> is_ktree(const Graph& g, int k);

struct CliqueTreeDelta {
  std::vector<std::array<int, 3>> nodes;  // sorted triples
  std::vector<std::vector<int>> adj;      // sorted node indices
  VertexSet node_set(int i, int n) const {
    return VertexSet(n, {nodes[i][0], nodes[i][1], nodes[i][2]});
  }
};
// Throws NotATwoTree.
CliqueTreeDelta clique_tree_delta(const Graph& g);

bool is_plane_triangulation(const PlaneGraph& pg);
bool is_eulerian(const Graph& g);

}  // namespace indsub
