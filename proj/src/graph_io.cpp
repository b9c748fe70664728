#include "indsub/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "indsub/errors.hpp"

namespace indsub {

namespace {

std::string edge_lines(const Graph& g) {
  std::ostringstream out;
  out << "graph " << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
  return out.str();
}

void write_anchor(std::ostream& out, const FaceAnchor& a) {
  out << a.tail << ' ' << (a.head < 0 ? a.tail : a.head);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

// Whitespace-separated tokens; integers parsed strictly.
struct Tokens {
  std::vector<std::string> items;
  int line;
  explicit Tokens(std::string_view text, int line_no) : line(line_no) {
    std::istringstream in{std::string(text)};
    std::string t;
    while (in >> t) items.push_back(t);
  }
  int integer(std::size_t i) const {
    if (i >= items.size()) throw ParseError(line, "missing field");
    const std::string& s = items[i];
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      throw ParseError(line, "expected integer, got '" + s + "'");
    }
    if (used != s.size() || v < -1 || v > 100000000)
      throw ParseError(line, "bad integer '" + s + "'");
    return static_cast<int>(v);
  }
};

}  // namespace

std::string write_graph(const Graph& g) { return edge_lines(g); }

std::string write_graph(const PlaneGraph& pg) {
  std::ostringstream out;
  out << edge_lines(pg.graph());
  for (int v = 0; v < pg.order(); ++v) {
    const auto& r = pg.rotation(v);
    out << "rot " << v << ' ' << r.size();
    auto start = std::min_element(r.begin(), r.end()) - r.begin();
    for (std::size_t i = 0; i < r.size(); ++i) out << ' ' << r[(start + i) % r.size()];
    out << '\n';
  }
  for (const NestLink& link : pg.nesting()) {
    out << "nest ";
    write_anchor(out, link.inner);
    out << ' ';
    write_anchor(out, link.outer);
    out << '\n';
  }
  return out.str();
}

ParsedGraph read_graph(std::string_view text) {
  auto lines = split_lines(text);
  int n = -1, m = -1, edges_seen = 0;
  Graph g;
  std::vector<std::vector<int>> rot;
  std::vector<char> has_rot;
  int rot_count = 0;
  std::vector<NestLink> nest;
  int last_line = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    int ln = static_cast<int>(i) + 1;
    std::string_view line = lines[i];
    auto first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') continue;
    last_line = ln;
    Tokens t(line, ln);
    const std::string& kw = t.items[0];
    if (n < 0) {
      if (kw != "graph" || t.items.size() != 3) throw ParseError(ln, "expected 'graph <n> <m>'");
      n = t.integer(1);
      m = t.integer(2);
      if (n < 0 || m < 0) throw ParseError(ln, "negative size");
      g = Graph(n);
      rot.assign(n, {});
      has_rot.assign(n, 0);
      continue;
    }
    if (kw == "e") {
      if (t.items.size() != 3) throw ParseError(ln, "expected 'e <u> <v>'");
      if (rot_count > 0 || !nest.empty()) throw ParseError(ln, "edge after embedding block");
      int u = t.integer(1), v = t.integer(2);
      if (!(0 <= u && u < v && v < n)) throw ParseError(ln, "edge needs 0 <= u < v < n");
      if (!g.add_edge(u, v)) throw ParseError(ln, "duplicate edge");
      ++edges_seen;
    } else if (kw == "rot") {
      int v = t.integer(1);
      if (v < 0 || v >= n) throw ParseError(ln, "rotation vertex out of range");
      if (has_rot[v]) throw ParseError(ln, "repeated rotation");
      int d = t.integer(2);
      if (d < 0 || static_cast<int>(t.items.size()) != 3 + d) throw ParseError(ln, "rotation length mismatch");
      for (int k = 0; k < d; ++k) {
        int w = t.integer(3 + k);
        if (w < 0 || w >= n) throw ParseError(ln, "rotation neighbour out of range");
        rot[v].push_back(w);
      }
      has_rot[v] = 1;
      ++rot_count;
    } else if (kw == "nest") {
      if (t.items.size() != 5) throw ParseError(ln, "expected 'nest <u> <v> <x> <y>'");
      auto anchor = [&](int a, int b) { return FaceAnchor{a, a == b ? -1 : b}; };
      nest.push_back({anchor(t.integer(1), t.integer(2)), anchor(t.integer(3), t.integer(4))});
    } else {
      throw ParseError(ln, "unknown record '" + kw + "'");
    }
  }
  if (n < 0) throw ParseError(last_line + 1, "missing 'graph' header");
  if (edges_seen != m) throw ParseError(last_line, "header announces " + std::to_string(m) +
                                                       " edges, found " + std::to_string(edges_seen));
  ParsedGraph out{g, std::nullopt};
  if (rot_count == 0 && nest.empty()) return out;
  if (rot_count != n) throw ParseError(last_line, "embedding block must list every vertex");
  try {
    out.plane.emplace(std::move(g), std::move(rot), std::move(nest));
  } catch (const MalformedRotation& e) {
    throw EulerViolation(e.what());
  }
  return out;
}

const VertexSet* Certificates::find(std::string_view name) const {
  for (const auto& [k, v] : certs)
    if (k == name) return &v;
  return nullptr;
}

int Certificates::label(std::string_view symbol) const {
  for (const auto& [k, v] : labels)
    if (k == symbol) return v;
  throw BadParameter("no label " + std::string(symbol));
}

std::map<std::string, int> Certificates::label_map() const {
  return {labels.begin(), labels.end()};
}

std::string write_certificates(const Certificates& c) {
  std::ostringstream out;
  for (const auto& [name, set] : c.certs) {
    out << "cert " << name << ' ' << set.size();
    for (int v : set) out << ' ' << v;
    out << '\n';
  }
  for (const auto& [sym, id] : c.labels) out << "label " << sym << ' ' << id << '\n';
  return out.str();
}

Certificates read_certificates(std::string_view text, int n) {
  Certificates c;
  auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    int ln = static_cast<int>(i) + 1;
    std::string_view line = lines[i];
    auto first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') continue;
    Tokens t(line, ln);
    if (t.items[0] == "cert") {
      if (t.items.size() < 3) throw ParseError(ln, "expected 'cert <name> <size> ...'");
      int s = t.integer(2);
      if (s < 0 || static_cast<int>(t.items.size()) != 3 + s) throw ParseError(ln, "cert size mismatch");
      std::vector<int> ids;
      for (int k = 0; k < s; ++k) {
        int v = t.integer(3 + k);
        if (v < 0 || v >= n) throw ParseError(ln, "cert vertex out of range");
        ids.push_back(v);
      }
      c.certs.emplace_back(t.items[1], VertexSet(n, std::move(ids)));
    } else if (t.items[0] == "label") {
      if (t.items.size() != 3) throw ParseError(ln, "expected 'label <symbol> <id>'");
      int v = t.integer(2);
      if (v < 0 || v >= n) throw ParseError(ln, "label vertex out of range");
      c.labels.emplace_back(t.items[1], v);
    } else {
      throw ParseError(ln, "unknown record '" + t.items[0] + "'");
    }
  }
  return c;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw BadParameter("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw BadParameter("cannot write " + path);
  out << text;
}

}  // namespace indsub
