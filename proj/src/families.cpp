#include "indsub/families.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "indsub/embedding_builder.hpp"
#include "indsub/errors.hpp"
#include "indsub/recognizers.hpp"

namespace indsub {

const VertexSet& FamilyInstance::cert(const std::string& name) const {
  const VertexSet* s = certificates.find(name);
  if (!s) throw BadParameter("no certificate " + name);
  return *s;
}

PlaneGraph triangulation_from_faces(int n, const std::vector<std::array<int, 3>>& faces) {
  if (faces.empty()) throw MalformedEmbedding("no faces");
  std::map<Edge, std::vector<int>> by_edge;
  for (int i = 0; i < static_cast<int>(faces.size()); ++i)
    for (int s = 0; s < 3; ++s) {
      int u = faces[i][s], v = faces[i][(s + 1) % 3];
      by_edge[{std::min(u, v), std::max(u, v)}].push_back(i);
    }
  for (const auto& [e, fs] : by_edge)
    if (fs.size() != 2) throw MalformedEmbedding("edge not on exactly two faces");

  auto has_dart = [](const std::array<int, 3>& f, int u, int v) {
    for (int s = 0; s < 3; ++s)
      if (f[s] == u && f[(s + 1) % 3] == v) return true;
    return false;
  };
  std::vector<std::array<int, 3>> oriented = faces;
  std::vector<char> done(faces.size(), 0);
  std::vector<int> queue{0};
  done[0] = 1;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const auto f = oriented[queue[qi]];
    for (int s = 0; s < 3; ++s) {
      int u = f[s], v = f[(s + 1) % 3];
      for (int j : by_edge[{std::min(u, v), std::max(u, v)}]) {
        if (j == queue[qi]) continue;
        if (!done[j]) {
          if (!has_dart(oriented[j], v, u)) std::swap(oriented[j][1], oriented[j][2]);
          done[j] = 1;
          queue.push_back(j);
        } else if (!has_dart(oriented[j], v, u)) {
          throw MalformedEmbedding("faces cannot be oriented consistently");
        }
      }
    }
  }
  if (queue.size() != faces.size()) throw MalformedEmbedding("faces do not form one surface");

  Graph g(n);
  for (const auto& [e, fs] : by_edge) g.add_edge(e.first, e.second);
  // Face a->b->c gives succ_b(a) = c.
  std::map<Edge, int> succ;
  for (const auto& f : oriented)
    for (int s = 0; s < 3; ++s) succ[{f[(s + 1) % 3], f[s]}] = f[(s + 2) % 3];
  std::vector<std::vector<int>> rot(n);
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == 0) continue;
    int start = g.neighbors(v)[0];
    int u = start;
    do {
      rot[v].push_back(u);
      u = succ.at({v, u});
    } while (u != start && static_cast<int>(rot[v].size()) <= g.degree(v));
    if (static_cast<int>(rot[v].size()) != g.degree(v)) throw MalformedEmbedding("vertex link is not a cycle");
  }
  return PlaneGraph(std::move(g), std::move(rot));
}

namespace {

std::string sub(const std::string& base, int j, int i) {
  return base + "_{" + std::to_string(j) + "," + std::to_string(i) + "}";
}

int face_with(const PlaneGraph& pg, std::vector<int> vs) {
  int f = find_face(pg, std::move(vs));
  if (f < 0) throw Error("construction lost a face");
  return f;
}

// Pastes gadget (boundary 0,1,2) into the host triangle host[0..2], mirroring
// the gadget when the orientations agree.
std::vector<int> paste(EmbeddingBuilder& b, const PlaneGraph& gadget, std::array<int, 3> host) {
  int f = face_with(b.current(), {host[0], host[1], host[2]});
  std::array<std::pair<int, int>, 3> ident{{{0, host[0]}, {1, host[1]}, {2, host[2]}}};
  try {
    return b.paste_into_face(f, gadget, face_with(gadget, {0, 1, 2}), ident);
  } catch (const OrientationMismatch&) {
    PlaneGraph m = gadget.mirrored();
    return b.paste_into_face(f, m, face_with(m, {0, 1, 2}), ident);
  }
}

void add_cert(FamilyInstance& fi, const std::string& name, VertexSet s) {
  fi.certificates.certs.emplace_back(name, std::move(s));
}

void add_label(FamilyInstance& fi, const std::string& sym, int v) { fi.certificates.labels.emplace_back(sym, v); }

void require(bool ok, const std::string& what) {
  if (!ok) throw Error("generated certificate failed: " + what);
}

void sort_labels(FamilyInstance& fi) {
  auto& l = fi.certificates.labels;
  std::stable_sort(l.begin(), l.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
}

void check_k(int k, int lo, const char* fam) {
  if (k < lo) throw BadParameter(std::string(fam) + " needs k >= " + std::to_string(lo));
}

}  // namespace

PlaneGraph gen_octahedron() {
  return triangulation_from_faces(
      6, {{{0, 1, 2}}, {{3, 4, 5}}, {{0, 1, 3}}, {{1, 2, 4}}, {{2, 0, 5}}, {{0, 3, 5}}, {{1, 3, 4}}, {{2, 4, 5}}});
}

PlaneGraph gen_R_prime() {
  EmbeddingBuilder b(gen_octahedron());
  b.insert_vertex_in_face(face_with(b.current(), {3, 4, 5}), {3, 4, 5});
  return b.current();
}

FamilyInstance gen_R() {
  EmbeddingBuilder b(triangulation_from_faces(4, {{{1, 2, 3}}, {{0, 1, 2}}, {{0, 2, 3}}, {{0, 3, 1}}}));
  PlaneGraph rp = gen_R_prime();
  FamilyInstance fi;
  fi.family = "r";
  add_cert(fi, "K4_1", VertexSet(16, {0, 1, 2, 3}));
  for (int i = 0; i < 4; ++i) add_label(fi, "x_" + std::to_string(i), i);
  for (int i = 1; i <= 3; ++i) {
    auto map = paste(b, rp, {i, i % 3 + 1, 0});
    add_cert(fi, "K4_" + std::to_string(i + 1), VertexSet(16, {map[3], map[4], map[5], map[6]}));
    for (int t = 1; t <= 3; ++t) add_label(fi, "v_" + std::to_string(t) + "(R'_" + std::to_string(i) + ")", map[2 + t]);
    add_label(fi, "v(R'_" + std::to_string(i) + ")", map[6]);
  }
  fi.pg = b.current();
  const Graph& g = fi.pg.graph();
  for (const auto& [name, s] : fi.certificates.certs)
    require(g.induced(s).size() == 6, name + " is a K4");
  return fi;
}

FamilyInstance gen_I() {
  PlaneGraph oct = gen_octahedron();
  EmbeddingBuilder b(oct);
  auto map = paste(b, oct, {3, 4, 5});
  const Graph& g = b.current().graph();
  // Name the inner vertices by their v-neighbours.
  std::vector<int> new_id(9);
  for (int v = 0; v < 6; ++v) new_id[v] = v;
  for (int t = 3; t <= 5; ++t) {
    int w = map[t];
    bool v1 = g.has_edge(w, 3), v3 = g.has_edge(w, 5);
    new_id[w] = v1 && v3 ? 6 : v1 ? 7 : 8;
  }
  FamilyInstance fi;
  fi.family = "i";
  fi.pg = b.current().relabeled(new_id);
  const char* names[] = {"u_1", "u_2", "u_3", "v_1", "v_2", "v_3", "w_1", "w_2", "w_3"};
  for (int v = 0; v < 9; ++v) add_label(fi, names[v], v);
  add_cert(fi, "S", VertexSet(9, {3, 6, 7, 8}));
  add_cert(fi, "T", VertexSet(9, {3, 6}));
  const Graph& h = fi.pg.graph();
  require(h.has_edge(6, 3) && h.has_edge(6, 5) && h.has_edge(7, 3) && h.has_edge(7, 4) && h.has_edge(8, 4) &&
              h.has_edge(8, 5),
          "I labels");
  return fi;
}

FamilyInstance gen_Dk(int k) {
  check_k(k, 4, "Dk");
  if (k % 2) throw BadParameter("Dk needs even k");
  auto x = [](int j, int t) { return 3 * (j - 1) + t - 1; };
  int z = 3 * k;
  std::vector<std::array<int, 3>> faces{{z, x(1, 1), x(1, 2)}, {z, x(1, 2), x(1, 3)}, {z, x(k, 1), x(k, 3)}};
  for (int j = 1; j <= k; ++j) faces.push_back({x(j, 1), x(j, 2), x(j, 3)});
  for (int j = 1; j < k; ++j) {
    faces.push_back({z, x(j, 1), x(j + 1, 1)});
    faces.push_back({x(j, 1), x(j, 3), x(j + 1, 1)});
    faces.push_back({z, x(j, 3), x(j + 1, 2)});
    faces.push_back({x(j, 3), x(j + 1, 1), x(j + 1, 2)});
    faces.push_back({z, x(j + 1, 2), x(j + 1, 3)});
  }
  EmbeddingBuilder b(triangulation_from_faces(3 * k + 1, faces));
  PlaneGraph rp = gen_R_prime();
  int n = 16 * k + 1;
  std::vector<int> new_id(n, -1);
  new_id[z] = 16 * k;
  FamilyInstance fi;
  fi.family = "dk";
  fi.params = {{"k", k}};
  std::vector<int> m, w;
  for (int j = 1; j <= k; ++j) {
    int base = 16 * (j - 1);
    int x0 = b.insert_vertex_in_face(face_with(b.current(), {x(j, 1), x(j, 2), x(j, 3)}),
                                     {x(j, 1), x(j, 2), x(j, 3)});
    new_id[x0] = base;
    for (int t = 1; t <= 3; ++t) {
      new_id[x(j, t)] = base + t;
      m.push_back(base + t);
    }
    for (int i = 1; i <= 3; ++i) {
      auto map = paste(b, rp, {x(j, i), x(j, i % 3 + 1), x0});
      int blk = base + 4 + 4 * (i - 1);
      for (int t = 0; t < 4; ++t) new_id[map[3 + t]] = blk + t;
      // Centre and the two inner vertices on the x_i x_{i+1} side.
      w.insert(w.end(), {blk, blk + 1, blk + 3});
      for (int t = 1; t <= 3; ++t) add_label(fi, "v_" + std::to_string(t) + "(R'_{" + std::to_string(j) + "," + std::to_string(i) + "})", blk + t - 1);
      add_label(fi, "v(R'_{" + std::to_string(j) + "," + std::to_string(i) + "})", blk + 3);
    }
    for (int t = 0; t <= 3; ++t) add_label(fi, sub("x", j, t), base + t);
  }
  add_label(fi, "z", 16 * k);
  sort_labels(fi);
  fi.pg = b.current().relabeled(new_id);
  VertexSet ms(n, m), ws(n, w), q = ms.united(ws);
  add_cert(fi, "M", ms);
  add_cert(fi, "W", ws);
  add_cert(fi, "Q", q);
  const Graph& g = fi.pg.graph();
  require(is_plane_triangulation(fi.pg), "Dk is a triangulation");
  require(q.size() == 12 * k, "|Q| = 12k");
  require(is_outerplanar(g.induced(ms)), "M outerplanar");
  require(is_k4_minor_free(g.induced(q)), "Q K4-minor free");
  return fi;
}

FamilyInstance gen_Gk(int k) {
  check_k(k, 4, "Gk");
  auto x = [](int j, int t) { return 3 * (j - 1) + t - 1; };
  std::vector<std::array<int, 3>> faces;
  for (int j = 1; j <= k; ++j) faces.push_back({x(j, 1), x(j, 2), x(j, 3)});
  for (int j = 1; j < k; ++j) {
    faces.push_back({x(j, 1), x(j, 3), x(j + 1, 1)});
    faces.push_back({x(j, 3), x(j + 1, 1), x(j + 1, 2)});
  }
  // Fan from x_{k,3} over x_{1,2}, x_{1,1}, x_{2,1}, ..., x_{k,1}.
  std::vector<int> top{x(1, 2)};
  for (int j = 1; j <= k; ++j) top.push_back(x(j, 1));
  for (std::size_t t = 0; t + 1 < top.size(); ++t) faces.push_back({x(k, 3), top[t], top[t + 1]});
  // Fan from x_{2,3} over x_{2,2}, x_{1,3}, x_{1,2}, x_{k,3}, x_{k,2}, ..., x_{3,3}, x_{3,2}.
  std::vector<int> bottom{x(2, 2), x(1, 3), x(1, 2)};
  for (int j = k; j >= 3; --j) {
    bottom.push_back(x(j, 3));
    bottom.push_back(x(j, 2));
  }
  for (std::size_t t = 0; t + 1 < bottom.size(); ++t) faces.push_back({x(2, 3), bottom[t], bottom[t + 1]});

  EmbeddingBuilder b(triangulation_from_faces(3 * k, faces));
  PlaneGraph gadget = gen_I().pg;
  int n = 22 * k;
  std::vector<int> new_id(n, -1), r;
  FamilyInstance fi;
  fi.family = "gk";
  fi.params = {{"k", k}};
  for (int j = 1; j <= k; ++j) {
    int base = 22 * (j - 1);
    int x0 = b.insert_vertex_in_face(face_with(b.current(), {x(j, 1), x(j, 2), x(j, 3)}),
                                     {x(j, 1), x(j, 2), x(j, 3)});
    new_id[x0] = base;
    for (int t = 1; t <= 3; ++t) new_id[x(j, t)] = base + t;
    for (int t = 0; t <= 3; ++t) add_label(fi, sub("x", j, t), base + t);
    r.insert(r.end(), {base, base + 1, base + 2});
    for (int i = 1; i <= 3; ++i) {
      auto map = paste(b, gadget, {x(j, i), x(j, i % 3 + 1), x0});
      int blk = base + 4 + 6 * (i - 1);
      for (int t = 0; t < 6; ++t) new_id[map[3 + t]] = blk + t;
      r.insert(r.end(), {blk, blk + 3, blk + 4, blk + 5});
      const char* names[] = {"v_1", "v_2", "v_3", "w_1", "w_2", "w_3"};
      for (int t = 0; t < 6; ++t)
        add_label(fi, std::string(names[t]) + "(I_{" + std::to_string(j) + "," + std::to_string(i) + "})", blk + t);
    }
  }
  sort_labels(fi);
  fi.pg = b.current().relabeled(new_id);
  VertexSet rs(n, r);
  add_cert(fi, "R", rs);
  require(is_plane_triangulation(fi.pg), "Gk is a triangulation");
  require(rs.size() == 15 * k, "|R| = 15k");
  require(is_outerplanar(fi.pg.graph().induced(rs)), "R outerplanar");
  return fi;
}

FamilyInstance gen_Tk(int k) {
  check_k(k, 2, "Tk");
  auto x = [](int j, int i) { return 6 * (j - 1) + (i - 1) % 3; };
  auto y = [](int j, int i) { return 6 * (j - 1) + 3 + (i - 1) % 3; };
  std::vector<std::array<int, 3>> faces{{x(1, 1), x(1, 2), x(1, 3)}, {y(k, 1), y(k, 2), y(k, 3)}};
  for (int j = 1; j <= k; ++j)
    for (int i = 1; i <= 3; ++i) {
      faces.push_back({x(j, i), x(j, i + 1), y(j, i)});
      faces.push_back({y(j, i), y(j, i + 1), x(j, i + 1)});
      if (j < k) {
        faces.push_back({y(j, i), y(j, i + 1), x(j + 1, i)});
        faces.push_back({x(j + 1, i), x(j + 1, i + 1), y(j, i + 1)});
      }
    }
  EmbeddingBuilder b(triangulation_from_faces(6 * k, faces));
  PlaneGraph gadget = gen_I().pg;
  FamilyInstance fi;
  fi.family = "tk";
  fi.params = {{"k", k}};
  int n = 24 * k;
  std::vector<int> cds;
  for (int j = 1; j <= k; ++j) {
    for (int i = 1; i <= 3; ++i) {
      add_label(fi, sub("x", j, i), x(j, i));
      add_label(fi, sub("y", j, i), y(j, i));
    }
    if (j < k) cds.insert(cds.end(), {x(j, 2), x(j, 3), y(j, 2)});
    else cds.insert(cds.end(), {x(j, 2), x(j, 3)});
  }
  VertexSet w(n, cds);
  for (int j = 1; j <= k; ++j)
    for (int i = 1; i <= 3; ++i) {
      auto map = paste(b, gadget, {x(j, i), x(j, i + 1), y(j, i)});
      const char* names[] = {"v_1", "v_2", "v_3", "w_1", "w_2", "w_3"};
      for (int t = 0; t < 6; ++t)
        add_label(fi, std::string(names[t]) + "(I_{" + std::to_string(j) + "," + std::to_string(i) + "})", map[3 + t]);
      cds.push_back(map[3]);
      cds.push_back(map[6]);
    }
  sort_labels(fi);
  fi.pg = b.current();
  VertexSet c(n, cds);
  add_cert(fi, "W", w);
  add_cert(fi, "CDS", c);
  add_cert(fi, "OUTERPLANE", c.complement());
  const Graph& g = fi.pg.graph();
  require(g.order() == n, "|V(Tk)| = 24k");
  require(is_plane_triangulation(fi.pg) && is_eulerian(g), "Tk is an Eulerian triangulation");
  require(c.size() == 9 * k - 1 && is_connected_dominating(g, c), "CDS");
  require(is_outerplane(fi.pg, c.complement()), "OUTERPLANE");
  return fi;
}

Graph gen_k113_chain(int m) {
  if (m < 1) throw BadParameter("k113chain needs m >= 1");
  Graph g(5 * m);
  for (int i = 0; i < m; ++i) {
    int b = 5 * i;
    g.add_edge(b, b + 1);
    for (int t = 2; t <= 4; ++t) {
      g.add_edge(b, b + t);
      g.add_edge(b + 1, b + t);
    }
    if (i + 1 < m) g.add_edge(b + 4, b + 7);
  }
  return g;
}

namespace {

PlaneGraph embed_k113_chain(int m) {
  EmbeddingBuilder b = EmbeddingBuilder::triangle();
  b.insert_vertex_in_face(b.current().face_of_dart(0, 1), {0, 1});
  b.insert_vertex_in_face(b.current().face_of_dart(0, 1), {0, 1});
  // Later copies grow from a pendant x1 hung on the previous x3:
  // insertion order x1, a, b, x2, x3.
  std::vector<int> new_id{0, 1, 2, 3, 4};
  for (int i = 1; i < m; ++i) {
    int prev = 5 * (i - 1) + 4;
    auto in_face = [&](int u) { return b.current().faces_at(u)[0]; };
    int x1 = b.insert_vertex_in_face(in_face(prev), {prev});
    int a = b.insert_vertex_in_face(in_face(x1), {x1});
    int c = b.insert_vertex_in_face(b.current().face_of_dart(x1, a), {x1, a});
    b.insert_vertex_in_face(b.current().face_of_dart(a, c), {a, c});
    b.insert_vertex_in_face(b.current().face_of_dart(a, c), {a, c});
    for (int t : {2, 0, 1, 3, 4}) new_id.push_back(5 * i + t);
  }
  return b.current().relabeled(new_id);
}

}  // namespace

PlaneGraph gen_nested_triangles(int k, int extras) {
  if (k < 1) throw BadParameter("nested needs k >= 1");
  if (extras < 0 || extras > 3) throw BadParameter("extras must be 0..3");
  EmbeddingBuilder b = EmbeddingBuilder::triangle();
  PlaneGraph tri = b.current();
  // Inside of C_i is the face of dart 3(i-1) -> 3(i-1)+1.
  for (int i = 2; i <= k; ++i) {
    int p = 3 * (i - 2);
    b.add_component_in_face(b.current().face_of_dart(p + 1, p), tri, tri.face_of_dart(0, 1));
  }
  int last = 3 * (k - 1);
  if (extras >= 1) b.insert_vertex_in_face(b.current().face_of_dart(0, 1), {});
  if (extras >= 2) b.insert_vertex_in_face(b.current().face_of_dart(last + 1, last), {});
  if (extras >= 3) b.insert_vertex_in_face(b.current().face_of_dart(0, 1), {});
  return b.current();
}

PlaneGraph random_2tree(int n, std::uint64_t seed) {
  if (n < 3) throw BadParameter("random_2tree needs n >= 3");
  std::mt19937_64 rng(seed);
  EmbeddingBuilder b = EmbeddingBuilder::triangle();
  while (b.order() < n) {
    const PlaneGraph& pg = b.current();
    std::vector<Dart> darts;
    for (int v = 0; v < pg.order(); ++v)
      for (int u : pg.graph().neighbors(v)) darts.push_back({v, u});
    Dart d = darts[std::uniform_int_distribution<std::size_t>(0, darts.size() - 1)(rng)];
    b.insert_vertex_in_face(pg.face_of_dart(d.tail, d.head), {d.tail, d.head});
  }
  return b.current();
}

PlaneGraph random_apollonian(int n, std::uint64_t seed) {
  if (n < 4) throw BadParameter("random_apollonian needs n >= 4");
  std::mt19937_64 rng(seed);
  EmbeddingBuilder b = EmbeddingBuilder::triangle();
  while (b.order() < n) {
    int f = std::uniform_int_distribution<int>(0, b.current().face_count() - 1)(rng);
    b.insert_vertex_in_face(f, b.current().faces()[f].vertices());
  }
  return b.current();
}

Graph random_ktree(int n, int k, std::uint64_t seed) {
  if (k < 1 || n < k + 1) throw BadParameter("random_ktree needs k >= 1 and n >= k + 1");
  std::mt19937_64 rng(seed);
  Graph g = complete_graph(k + 1);
  Graph out(n);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  std::vector<std::vector<int>> cliques;
  for (int drop = 0; drop <= k; ++drop) {
    std::vector<int> c;
    for (int v = 0; v <= k; ++v)
      if (v != drop) c.push_back(v);
    cliques.push_back(c);
  }
  for (int v = k + 1; v < n; ++v) {
    std::vector<int> c = cliques[std::uniform_int_distribution<std::size_t>(0, cliques.size() - 1)(rng)];
    for (int u : c) out.add_edge(u, v);
    for (int drop = 0; drop < k; ++drop) {
      std::vector<int> d = c;
      d[drop] = v;
      cliques.push_back(std::move(d));
    }
  }
  return out;
}

std::vector<std::string> family_names() {
  return {"octahedron", "rprime", "r", "dk", "i", "gk", "tk", "k113chain", "nested", "rand2tree", "apollonian"};
}

FamilyInstance make_family(const std::string& name, int k, int n, std::uint64_t seed, int extras) {
  FamilyInstance fi;
  if (name == "octahedron") {
    fi.pg = gen_octahedron();
    const char* names[] = {"u_1", "u_2", "u_3", "v_1", "v_2", "v_3"};
    for (int v = 0; v < 6; ++v) add_label(fi, names[v], v);
  } else if (name == "rprime") {
    fi.pg = gen_R_prime();
    const char* names[] = {"a", "b", "c", "v_1", "v_2", "v_3", "v"};
    for (int v = 0; v < 7; ++v) add_label(fi, names[v], v);
  } else if (name == "r") {
    fi = gen_R();
  } else if (name == "i") {
    fi = gen_I();
  } else if (name == "dk") {
    fi = gen_Dk(k);
  } else if (name == "gk") {
    fi = gen_Gk(k);
  } else if (name == "tk") {
    fi = gen_Tk(k);
  } else if (name == "k113chain") {
    fi.pg = embed_k113_chain(k);
    fi.params = {{"m", k}};
    require(fi.pg.graph() == gen_k113_chain(k), "k113chain embedding");
  } else if (name == "nested") {
    fi.pg = gen_nested_triangles(k, extras);
    fi.params = {{"k", k}, {"extras", extras}};
  } else if (name == "rand2tree") {
    fi.pg = random_2tree(n, seed);
    fi.params = {{"n", n}, {"seed", static_cast<std::int64_t>(seed)}};
  } else if (name == "apollonian") {
    fi.pg = random_apollonian(n, seed);
    fi.params = {{"n", n}, {"seed", static_cast<std::int64_t>(seed)}};
  } else {
    throw BadParameter("unknown family " + name);
  }
  fi.family = name;
  return fi;
}

}  // namespace indsub
