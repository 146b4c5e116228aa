#include "tautfill/sphere.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <queue>
#include <sstream>

namespace tautfill {

Edge make_edge(VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  return {a, b};
}

Triangle make_triangle(VertexId a, VertexId b, VertexId c) {
  Triangle t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

namespace {

std::string tri_str(const Triangle& t) {
  std::ostringstream out;
  out << "{" << t[0] << "," << t[1] << "," << t[2] << "}";
  return out.str();
}

std::array<Edge, 3> face_edges(const Triangle& t) {
  return {make_edge(t[0], t[1]), make_edge(t[0], t[2]),
          make_edge(t[1], t[2])};
}

}  // namespace

int SphereTriangulation::vertex_degree(VertexId x) const {
  int d = 0;
  for (const Edge& e : edges)
    if (e[0] == x || e[1] == x) ++d;
  return d;
}

int SphereTriangulation::max_degree() const {
  int best = 0;
  for (VertexId x : vertices) best = std::max(best, vertex_degree(x));
  return best;
}

std::vector<VertexId> SphereTriangulation::degree3_vertices() const {
  std::vector<VertexId> out;
  for (VertexId x : vertices)
    if (vertex_degree(x) == 3) out.push_back(x);
  return out;
}

SphereTriangulation validate(const std::vector<Triangle>& input) {
  if (input.empty()) throw ValidationError("no faces given");

  SphereTriangulation s;
  for (const Triangle& raw : input) {
    Triangle t = make_triangle(raw[0], raw[1], raw[2]);
    if (t[0] == t[1] || t[1] == t[2])
      throw ValidationError("face with repeated vertex: " + tri_str(raw));
    if (t[0] < 0) throw ValidationError("negative vertex label");
    if (!s.faces.insert(t).second)
      throw ValidationError("duplicate face: " + tri_str(t));
  }

  std::map<Edge, std::vector<Triangle>> at_edge;
  std::set<VertexId> vset;
  for (const Triangle& t : s.faces) {
    vset.insert(t.begin(), t.end());
    for (const Edge& e : face_edges(t)) {
      s.edges.insert(e);
      at_edge[e].push_back(t);
    }
  }
  s.vertices.assign(vset.begin(), vset.end());

  for (const auto& [e, fs] : at_edge)
    if (fs.size() != 2)
      throw ValidationError("edge {" + std::to_string(e[0]) + "," +
                            std::to_string(e[1]) + "} lies in " +
                            std::to_string(fs.size()) +
                            " faces, expected 2");

  // Each vertex link must be one cycle.  Edge regularity already forces
  // every link vertex to have degree 2, so a connected link is a cycle.
  for (VertexId x : s.vertices) {
    std::map<VertexId, std::vector<VertexId>> link;
    for (const Triangle& t : s.faces) {
      if (t[0] != x && t[1] != x && t[2] != x) continue;
      VertexId u = -1, v = -1;
      for (VertexId w : t)
        if (w != x) (u < 0 ? u : v) = w;
      link[u].push_back(v);
      link[v].push_back(u);
    }
    if (link.size() < 3)
      throw ValidationError("vertex " + std::to_string(x) +
                            " has degree " + std::to_string(link.size()));
    std::set<VertexId> seen;
    std::queue<VertexId> bfs;
    bfs.push(link.begin()->first);
    seen.insert(link.begin()->first);
    while (!bfs.empty()) {
      VertexId u = bfs.front();
      bfs.pop();
      for (VertexId w : link[u])
        if (seen.insert(w).second) bfs.push(w);
    }
    if (seen.size() != link.size())
      throw ValidationError("link of vertex " + std::to_string(x) +
                            " is not a single cycle");
  }

  // Connectivity through shared edges.
  {
    std::set<Triangle> seen;
    std::queue<Triangle> bfs;
    bfs.push(*s.faces.begin());
    seen.insert(*s.faces.begin());
    while (!bfs.empty()) {
      Triangle t = bfs.front();
      bfs.pop();
      for (const Edge& e : face_edges(t))
        for (const Triangle& u : at_edge[e])
          if (seen.insert(u).second) bfs.push(u);
    }
    if (seen.size() != s.faces.size())
      throw ValidationError("surface is not connected");
  }

  long chi = static_cast<long>(s.vertices.size()) -
             static_cast<long>(s.edges.size()) +
             static_cast<long>(s.faces.size());
  if (chi != 2)
    throw ValidationError("Euler characteristic " + std::to_string(chi) +
                          ", expected 2");

  // Canonical orientation: +1 on the lexicographically smallest face,
  // propagated so that adjacent faces cancel on their shared edge.
  std::map<Triangle, int> sign;
  sign[*s.faces.begin()] = 1;
  std::queue<Triangle> bfs;
  bfs.push(*s.faces.begin());
  auto edge_coeff = [](const Triangle& t, const Edge& e) {
    // Coefficient of e in the boundary of +1 * [t].
    for (int i = 0; i < 3; ++i) {
      Triangle u = t;
      VertexId dropped = u[i];
      Edge rest{};
      int k = 0;
      for (VertexId w : t)
        if (w != dropped) rest[k++] = w;
      if (rest == e) return i % 2 == 0 ? 1 : -1;
    }
    return 0;
  };
  while (!bfs.empty()) {
    Triangle t = bfs.front();
    bfs.pop();
    for (const Edge& e : face_edges(t)) {
      for (const Triangle& u : at_edge[e]) {
        if (u == t || sign.contains(u)) continue;
        int needed = -sign[t] * edge_coeff(t, e);
        sign[u] = needed * edge_coeff(u, e);
        bfs.push(u);
      }
    }
  }
  for (const auto& [t, sg] : sign)
    s.orientation.add_term({t[0], t[1], t[2]}, sg);
  if (!boundary(s.orientation).is_zero())
    throw ValidationError("surface is not orientable");
  return s;
}

const Chain& orientation_cycle(const SphereTriangulation& s) {
  return s.orientation;
}

SphereTriangulation relabel(const SphereTriangulation& s,
                            const std::map<VertexId, VertexId>& to) {
  std::set<VertexId> image;
  for (VertexId x : s.vertices) {
    auto it = to.find(x);
    if (it == to.end())
      throw std::invalid_argument("relabel map misses vertex " +
                                  std::to_string(x));
    if (!image.insert(it->second).second)
      throw std::invalid_argument("relabel map is not injective");
  }
  SphereTriangulation out;
  out.vertices.assign(image.begin(), image.end());
  for (const Triangle& t : s.faces)
    out.faces.insert(
        make_triangle(to.at(t[0]), to.at(t[1]), to.at(t[2])));
  for (const Edge& e : s.edges)
    out.edges.insert(make_edge(to.at(e[0]), to.at(e[1])));
  for (const auto& [t, c] : s.orientation.terms())
    out.orientation.add_term({to.at(t[0]), to.at(t[1]), to.at(t[2])}, c);
  return out;
}

// --- catalog ---------------------------------------------------------------

namespace {

SphereTriangulation build_tetrahedron() {
  return validate({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

SphereTriangulation build_bipyramid(int k) {
  if (k < 3) throw std::invalid_argument("bipyramid needs parameter >= 3");
  std::vector<Triangle> fs;
  for (int i = 0; i < k; ++i) {
    VertexId r = 2 + i, rn = 2 + (i + 1) % k;
    fs.push_back(make_triangle(0, r, rn));
    fs.push_back(make_triangle(1, r, rn));
  }
  return validate(fs);
}

SphereTriangulation build_wheel_double(int k) {
  if (k < 3) throw std::invalid_argument("wheel_double needs parameter >= 3");
  std::vector<Triangle> fs;
  auto r = [&](int i) { return 2 + (i % k + k) % k; };
  auto b = [&](int i) { return 2 + k + (i % k + k) % k; };
  for (int i = 0; i < k; ++i) {
    fs.push_back(make_triangle(0, r(i), r(i + 1)));
    fs.push_back(make_triangle(1, b(i), b(i + 1)));
    fs.push_back(make_triangle(r(i), r(i + 1), b(i)));
    fs.push_back(make_triangle(b(i), b(i + 1), r(i + 1)));
  }
  return validate(fs);
}

SphereTriangulation build_stacked(int k) {
  if (k < 0) throw std::invalid_argument("stacked needs parameter >= 0");
  std::set<Triangle> fs{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  VertexId next = 4;
  for (int i = 0; i < k; ++i) {
    Triangle t = *fs.begin();
    fs.erase(fs.begin());
    fs.insert(make_triangle(t[0], t[1], next));
    fs.insert(make_triangle(t[0], t[2], next));
    fs.insert(make_triangle(t[1], t[2], next));
    ++next;
  }
  return validate({fs.begin(), fs.end()});
}

}  // namespace

SphereTriangulation catalog(const std::string& name, int parameter) {
  if (name == "tetrahedron") return build_tetrahedron();
  if (name == "octahedron") return build_bipyramid(4);
  if (name == "icosahedron") return build_wheel_double(5);
  if (name == "bipyramid") return build_bipyramid(parameter);
  if (name == "wheel_double") return build_wheel_double(parameter);
  if (name == "stacked") return build_stacked(parameter);
  throw std::invalid_argument("unknown catalog name: " + name);
}

std::vector<CatalogEntry> catalog_entries() {
  return {
      {"tetrahedron", false, -1, "boundary of the 3-simplex (v=4)"},
      {"bipyramid", true, 3, "two apexes over a k-gon ring (v=k+2)"},
      {"octahedron", false, -1, "bipyramid over a square (v=6)"},
      {"icosahedron", false, -1, "regular icosahedron (v=12)"},
      {"wheel_double", true, 3,
       "k-gon antiprism capped by two apex pyramids (v=2k+2)"},
      {"stacked", true, 0,
       "k face stackings of the tetrahedron (v=k+4)"},
  };
}

// --- connected sum ---------------------------------------------------------

ConnectedSum connected_sum(const SphereTriangulation& s1, const Triangle& f1,
                           const SphereTriangulation& s2, const Triangle& f2) {
  if (!s1.has_face(f1))
    throw std::invalid_argument("gluing face " + tri_str(f1) +
                                " is not a face of the first summand");
  if (!s2.has_face(f2))
    throw std::invalid_argument("gluing face " + tri_str(f2) +
                                " is not a face of the second summand");

  Rational c1 = s1.orientation.coefficient({f1[0], f1[1], f1[2]});
  Rational c2 = s2.orientation.coefficient({f2[0], f2[1], f2[2]});

  // Identify f2 with f1 so that the orientations cancel: the relabeled
  // second cycle must carry -c1 on the shared triangle.
  std::map<VertexId, VertexId> to;
  if (c1 == c2) {
    to[f2[0]] = f1[0];
    to[f2[1]] = f1[2];
    to[f2[2]] = f1[1];
  } else {
    to[f2[0]] = f1[0];
    to[f2[1]] = f1[1];
    to[f2[2]] = f1[2];
  }
  VertexId fresh = s1.vertices.back() + 1;
  for (VertexId x : s2.vertices)
    if (!to.contains(x)) to[x] = fresh++;

  SphereTriangulation m2 = relabel(s2, to);

  std::vector<Triangle> fs;
  for (const Triangle& t : s1.faces)
    if (t != f1) fs.push_back(t);
  for (const Triangle& t : m2.faces)
    if (t != f1) fs.push_back(t);

  ConnectedSum out;
  out.sphere = validate(fs);
  out.side_x = s1.orientation;
  out.side_y = m2.orientation;
  out.shared = f1;
  Chain glued = out.side_x + out.side_y;
  for (const auto& [t, c] : glued.terms())
    if (c != 1 && c != -1)
      throw std::logic_error("connected sum orientation did not cancel");
  if (glued.term_count() != out.sphere.faces.size())
    throw std::logic_error("connected sum orientation mismatch");
  out.sphere.orientation = glued;
  return out;
}

ConnectedSum connected_sum(const SphereTriangulation& s1,
                           const SphereTriangulation& s2) {
  return connected_sum(s1, *s1.faces.begin(), s2, *s2.faces.begin());
}

// --- prime decomposition ---------------------------------------------------

std::vector<Triangle> separating_triangles(const SphereTriangulation& s) {
  std::map<VertexId, std::set<VertexId>> adj;
  for (const Edge& e : s.edges) {
    adj[e[0]].insert(e[1]);
    adj[e[1]].insert(e[0]);
  }
  std::vector<Triangle> out;
  for (const Edge& e : s.edges) {
    for (VertexId c : adj[e[0]]) {
      if (c <= e[1]) continue;
      if (!adj[e[1]].contains(c)) continue;
      Triangle t = make_triangle(e[0], e[1], c);
      if (!s.faces.contains(t)) out.push_back(t);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_prime(const SphereTriangulation& s) {
  return separating_triangles(s).empty();
}

namespace {

// Splits the face set along a non-face 3-clique; each side keeps its labels
// and gains the cut triangle as a face.
std::pair<SphereTriangulation, SphereTriangulation> cut_along(
    const SphereTriangulation& s, const Triangle& cut) {
  std::set<Edge> blocked = {make_edge(cut[0], cut[1]),
                            make_edge(cut[0], cut[2]),
                            make_edge(cut[1], cut[2])};
  std::map<Edge, std::vector<Triangle>> at_edge;
  for (const Triangle& t : s.faces)
    for (const Edge& e : face_edges(t))
      if (!blocked.contains(e)) at_edge[e].push_back(t);

  std::map<Triangle, int> comp;
  int n_comp = 0;
  for (const Triangle& seed : s.faces) {
    if (comp.contains(seed)) continue;
    std::queue<Triangle> bfs;
    bfs.push(seed);
    comp[seed] = n_comp;
    while (!bfs.empty()) {
      Triangle t = bfs.front();
      bfs.pop();
      for (const Edge& e : face_edges(t)) {
        if (blocked.contains(e)) continue;
        for (const Triangle& u : at_edge[e])
          if (!comp.contains(u)) {
            comp[u] = n_comp;
            bfs.push(u);
          }
      }
    }
    ++n_comp;
  }
  if (n_comp != 2)
    throw ValidationError("3-clique " + tri_str(cut) + " separates into " +
                          std::to_string(n_comp) + " parts, expected 2");
  std::vector<Triangle> side0{cut}, side1{cut};
  for (const auto& [t, c] : comp) (c == 0 ? side0 : side1).push_back(t);
  return {validate(side0), validate(side1)};
}

void decompose_into(const SphereTriangulation& s, PrimeDecomposition& out) {
  std::vector<Triangle> cuts = separating_triangles(s);
  if (cuts.empty()) {
    out.components.push_back(s);
    return;
  }
  Triangle cut = cuts.front();
  auto [a, b] = cut_along(s, cut);

  std::size_t first_a = out.components.size();
  decompose_into(a, out);
  std::size_t first_b = out.components.size();
  decompose_into(b, out);

  auto holder = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i)
      if (out.components[i].faces.contains(cut)) return static_cast<int>(i);
    throw std::logic_error("cut triangle lost during decomposition");
  };
  out.gluing_tree.push_back(
      {holder(first_a, first_b), holder(first_b, out.components.size()), cut});
}

}  // namespace

PrimeDecomposition prime_decompose(const SphereTriangulation& s) {
  PrimeDecomposition out;
  decompose_into(s, out);
  return out;
}

bool is_flag(const SphereTriangulation& s) {
  if (!separating_triangles(s).empty()) return false;
  // All 3-cliques are faces; a 4-clique would make the sphere the
  // tetrahedron boundary, whose solid simplex is missing.
  std::map<VertexId, std::set<VertexId>> adj;
  for (const Edge& e : s.edges) {
    adj[e[0]].insert(e[1]);
    adj[e[1]].insert(e[0]);
  }
  for (const Triangle& t : s.faces)
    for (VertexId d : adj[t[0]])
      if (d != t[1] && d != t[2] && adj[t[1]].contains(d) &&
          adj[t[2]].contains(d))
        return false;
  return true;
}

// --- text format -------------------------------------------------------- --

SphereTriangulation read_sphere(std::istream& in) {
  std::vector<std::vector<long>> rows;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    if (rows.empty()) {
      std::string word;
      if (!(ls >> word)) continue;  // blank line before header
      if (word != "sphere")
        throw ValidationError("expected 'sphere <v> <f>' header, got '" +
                              word + "'");
      long v, f;
      if (!(ls >> v >> f) || v < 4 || f < 4)
        throw ValidationError("malformed sphere header");
      std::string extra;
      if (ls >> extra) throw ValidationError("trailing tokens after header");
      rows.push_back({v, f});
      continue;
    }
    long a, b, c;
    if (!(ls >> a)) continue;  // blank or comment-only line
    if (!(ls >> b >> c)) throw ValidationError("malformed face line: " + line);
    std::string extra;
    if (ls >> extra) throw ValidationError("trailing tokens on face line");
    rows.push_back({a, b, c});
  }
  if (rows.empty()) throw ValidationError("empty sphere file");
  long v = rows[0][0], f = rows[0][1];
  if (static_cast<long>(rows.size()) - 1 != f)
    throw ValidationError("header promises " + std::to_string(f) +
                          " faces, file has " +
                          std::to_string(rows.size() - 1));

  std::vector<Triangle> faces;
  Chain given(2);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    VertexId a = static_cast<VertexId>(rows[i][0]);
    VertexId b = static_cast<VertexId>(rows[i][1]);
    VertexId c = static_cast<VertexId>(rows[i][2]);
    faces.push_back(make_triangle(a, b, c));
    given.add_term({a, b, c}, 1);
  }
  SphereTriangulation s = validate(faces);
  if (s.vertex_count() != v)
    throw ValidationError("header promises " + std::to_string(v) +
                          " vertices, faces use " +
                          std::to_string(s.vertex_count()));
  // Keep the input orientation when it is one.
  if (given.term_count() == s.faces.size() && boundary(given).is_zero())
    s.orientation = given;
  return s;
}

SphereTriangulation read_sphere_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  return read_sphere(in);
}

void write_sphere(std::ostream& out, const SphereTriangulation& s) {
  out << "sphere " << s.vertex_count() << " " << s.face_count() << "\n";
  for (const auto& [t, c] : s.orientation.terms()) {
    if (c == 1)
      out << t[0] << " " << t[1] << " " << t[2] << "\n";
    else
      out << t[0] << " " << t[2] << " " << t[1] << "\n";
  }
}

}  // namespace tautfill
