#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "indsub/graph.hpp"
#include "indsub/plane_graph.hpp"

namespace indsub {

// GraphText v1:
//   graph <n> <m>
//   e <u> <v>              m lines, u < v
//   rot <v> <d> <n1..nd>   optional, all n vertices, cyclic neighbour order
//   nest <u> <v> <x> <y>   optional; face of dart u->v (isolated u if u == v)
//                          lies in the face of dart x->y (or isolated x)
//   # comment
struct ParsedGraph {
  Graph graph;
  std::optional<PlaneGraph> plane;
};

std::string write_graph(const Graph& g);
// Rotations start at the smallest neighbour; nest lines only when disconnected.
std::string write_graph(const PlaneGraph& pg);
// Throws ParseError, EulerViolation, MalformedRotation.
ParsedGraph read_graph(std::string_view text);

// Certificate sidecar: "cert <name> <size> <ids...>" and "label <symbol> <id>".
struct Certificates {
  std::vector<std::pair<std::string, VertexSet>> certs;
  std::vector<std::pair<std::string, int>> labels;

  const VertexSet* find(std::string_view name) const;
  int label(std::string_view symbol) const;  // throws BadParameter if absent
  std::map<std::string, int> label_map() const;
};

std::string write_certificates(const Certificates& c);
Certificates read_certificates(std::string_view text, int n);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

}  // namespace indsub
