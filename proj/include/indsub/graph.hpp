#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace indsub {

using Edge = std::pair<int, int>;

// Sorted subset of 0..universe-1.
class VertexSet {
 public:
  VertexSet() = default;
  // Sorts and removes duplicates; throws BadParameter on ids out of range.
  VertexSet(int universe, std::vector<int> members);
  VertexSet(int universe, std::initializer_list<int> members)
      : VertexSet(universe, std::vector<int>(members)) {}

  static VertexSet all(int n);
  static VertexSet from_mask(int n, const std::vector<char>& in);

  int universe() const { return universe_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  const std::vector<int>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool contains(int v) const;
  bool is_subset_of(const VertexSet& other) const;
  VertexSet complement() const;
  VertexSet united(const VertexSet& other) const;
  VertexSet minus(const VertexSet& other) const;
  std::vector<char> mask() const;

  bool operator==(const VertexSet&) const = default;
  auto operator<=>(const VertexSet&) const = default;

 private:
  int universe_ = 0;
  std::vector<int> members_;
};

// Simple undirected graph on 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  // Throws BadParameter on loops, duplicates or ids out of range.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const { return m_; }

  // Returns false if the edge was already present.
  bool add_edge(int u, int v);
  bool remove_edge(int u, int v);
  bool has_edge(int u, int v) const;
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;
  // Sorted with u < v.
  std::vector<Edge> edges() const;

  // Relabels s to 0..|s|-1 in increasing order.
  Graph induced(const VertexSet& s) const;
  // Adjacency as bitmasks; requires n <= 64.
  std::vector<std::uint64_t> masks() const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const;
  std::vector<std::vector<int>> adj_;
  int m_ = 0;
};

// Graph constructors for common shapes.
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);
// Apexes 0,1 adjacent; 2,3,4 adjacent to both apexes.
Graph k113();

bool is_connected(const Graph& g);
// Component id per vertex; ids in order of lowest vertex.
std::vector<int> component_ids(const Graph& g, int* count = nullptr);
bool is_forest(const Graph& g);
bool induces_connected(const Graph& g, const VertexSet& s);
bool is_dominating(const Graph& g, const VertexSet& s);
bool is_total_dominating(const Graph& g, const VertexSet& s);
bool is_connected_dominating(const Graph& g, const VertexSet& s);
// Biconnected components as edge-disjoint vertex sets (isolated vertices omitted).
std::vector<std::vector<int>> blocks(const Graph& g);

}  // namespace indsub
