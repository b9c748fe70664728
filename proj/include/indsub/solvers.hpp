#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "indsub/graph.hpp"
#include "indsub/plane_graph.hpp"

namespace indsub {

enum class Kind { f, s_o, s_oprime, s_k4, tw_le_t, gamma, gamma_t, gamma_c, maxleaf };

struct InvariantKind {
  Kind tag = Kind::f;
  int t = 0;  // only for tw_le_t

  // Accepts "f", "so"/"s_o", "soprime"/"s_oprime", "sk4"/"s_K4", "twle"/"tw_le_t",
  // "gamma", "gammat"/"gamma_t", "gammac"/"gamma_c", "maxleaf".
  static InvariantKind parse(std::string_view name, int t = 0);
  std::string name() const;
  bool maximizes() const;
  bool needs_embedding() const { return tag == Kind::s_oprime; }
  bool operator==(const InvariantKind&) const = default;
};

// All kinds in a fixed order; tw_le_t carries the given t.
std::vector<InvariantKind> all_kinds(int t);

enum class Domination { plain, total, connected };
enum class BoundDirection { exact, lower, upper };

struct Budget {
  std::uint64_t max_nodes = 100'000'000;
  double max_seconds = 300.0;
  int threads = 1;
};

struct SolveResult {
  int value = 0;
  VertexSet witness;
  bool optimal = true;
  BoundDirection bound = BoundDirection::exact;
  std::uint64_t nodes_explored = 0;
  std::chrono::milliseconds elapsed{0};
  std::vector<Edge> tree_edges;  // maxleaf: the spanning tree
};

// Hereditary predicates on induced subgraphs. pg may be null except for s_oprime.
bool induced_satisfies(const Graph& g, const PlaneGraph* pg, InvariantKind kind, const VertexSet& s);
bool dominates(const Graph& g, Domination variant, const VertexSet& s);

// Branch and bound, exclude-before-include on ascending ids. Sequential runs
// return the optimal witness with lexicographically least characteristic
// vector; parallel runs guarantee the value. Seeds are valid sets used only
// as incumbent bounds. On budget exhaustion optimal=false and the value is a
// lower bound.
SolveResult max_induced(const Graph& g, InvariantKind kind, const Budget& budget = {},
                        const std::vector<VertexSet>& seeds = {});
SolveResult max_induced(const PlaneGraph& pg, InvariantKind kind, const Budget& budget = {},
                        const std::vector<VertexSet>& seeds = {});

// Throws NoTotalDominatingSet; connected variant needs a connected graph.
// On budget exhaustion the value is an upper bound.
SolveResult min_dominating(const Graph& g, Domination variant, const Budget& budget = {},
                           const std::vector<VertexSet>& seeds = {});

// n - gamma_c; witness is the leaf set of the returned spanning tree.
SolveResult maxleaf(const Graph& g, const Budget& budget = {},
                    const std::vector<VertexSet>& cds_seeds = {});

// Dispatch on kind. Seeds that fail validation are ignored.
SolveResult solve(const Graph& g, const PlaneGraph* pg, InvariantKind kind,
                  const Budget& budget = {}, const std::vector<VertexSet>& seeds = {});

std::string to_string(BoundDirection b);

}  // namespace indsub
