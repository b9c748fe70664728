#pragma once

#include <optional>
#include <vector>

#include "indsub/graph.hpp"

namespace indsub {

// Largest n the exact elimination search accepts.
inline constexpr int kExactTreewidthLimit = 25;

// An elimination order of width <= t, or nothing if tw(g) > t.
// Greedy min-degree first (exact for t <= 2 and for t-trees), then a
// memoised search for n <= kExactTreewidthLimit; InstanceTooLarge beyond.
std::optional<std::vector<int>> elimination_order_within(const Graph& g, int t);
bool treewidth_at_most(const Graph& g, int t);
int treewidth_exact(const Graph& g);

// A k-tree on g's vertex set containing g (K_n when n <= k + 1).
// Throws TreewidthExceeded / InstanceTooLarge.
Graph complete_to_ktree(const Graph& g, int k);

}  // namespace indsub
