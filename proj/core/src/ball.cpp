#include "tautfill/ball.hpp"

#include <algorithm>
#include <optional>
#include <queue>
#include <sstream>

#include "json.hpp"

namespace tautfill {

namespace {

std::string tri_str(const Triangle& t) {
  std::ostringstream out;
  out << "{" << t[0] << "," << t[1] << "," << t[2] << "}";
  return out.str();
}

std::string tet_str(const Tet& t) {
  std::ostringstream out;
  out << "[" << t[0] << "," << t[1] << "," << t[2] << "," << t[3] << "]";
  return out.str();
}

std::array<Triangle, 4> faces_of(const Tet& t) {
  return {make_triangle(t[1], t[2], t[3]), make_triangle(t[0], t[2], t[3]),
          make_triangle(t[0], t[1], t[3]), make_triangle(t[0], t[1], t[2])};
}

std::array<Edge, 6> edges_of(const Tet& t) {
  return {make_edge(t[0], t[1]), make_edge(t[0], t[2]),
          make_edge(t[0], t[3]), make_edge(t[1], t[2]),
          make_edge(t[1], t[3]), make_edge(t[2], t[3])};
}

// Builds a sphere triangulation from a +-1 two-cycle, keeping its
// orientation.  Throws ValidationError when the support is not a sphere.
SphereTriangulation sphere_from_cycle(const Chain& x) {
  std::vector<Triangle> fs;
  for (const auto& [t, c] : x.terms()) {
    if (c != 1 && c != -1)
      throw ValidationError("surface cycle has coefficient " + rat_str(c) +
                            " on " + tri_str({t[0], t[1], t[2]}));
    fs.push_back({t[0], t[1], t[2]});
  }
  SphereTriangulation s = validate(fs);
  s.orientation = x;
  return s;
}

// Tet-adjacency components (shared triangle) of the chain's support.
std::vector<std::vector<Tet>> tet_components(const Chain& m) {
  std::map<Triangle, std::vector<Tet>> at_face;
  std::vector<Tet> all;
  for (const auto& [t, c] : m.terms()) {
    Tet tet{t[0], t[1], t[2], t[3]};
    all.push_back(tet);
    for (const Triangle& f : faces_of(tet)) at_face[f].push_back(tet);
  }
  std::map<Tet, int> comp;
  std::vector<std::vector<Tet>> out;
  for (const Tet& seed : all) {
    if (comp.contains(seed)) continue;
    out.emplace_back();
    std::queue<Tet> bfs;
    bfs.push(seed);
    comp[seed] = static_cast<int>(out.size()) - 1;
    while (!bfs.empty()) {
      Tet t = bfs.front();
      bfs.pop();
      out.back().push_back(t);
      for (const Triangle& f : faces_of(t))
        for (const Tet& u : at_face[f])
          if (!comp.contains(u)) {
            comp[u] = comp[t];
            bfs.push(u);
          }
    }
  }
  return out;
}

}  // namespace

int BallComplex::sign(const Tet& t) const {
  Rational c = chain.coefficient({t[0], t[1], t[2], t[3]});
  return c > 0 ? 1 : -1;
}

bool BallComplex::is_boundary_face(const Triangle& f) const {
  auto it = face_incidence.find(f);
  return it != face_incidence.end() && it->second.size() == 1;
}

std::vector<Triangle> BallComplex::tet_faces(const Tet& t) const {
  auto fs = faces_of(t);
  return {fs.begin(), fs.end()};
}

int BallComplex::boundary_face_count(const Tet& t) const {
  int n = 0;
  for (const Triangle& f : faces_of(t))
    if (is_boundary_face(f)) ++n;
  return n;
}

BallComplex to_ball_complex(const Chain& m, const SphereTriangulation& sigma) {
  if (m.dimension() != 3)
    throw BallError("filling must be a dimension-3 chain");
  if (m.is_zero()) throw BallError("filling is the zero chain");

  BallComplex tau;
  for (const auto& [t, c] : m.terms()) {
    if (c != 1 && c != -1)
      throw BallError("coefficient with |value| != 1: " + rat_str(c) +
                      " on tet " + tet_str({t[0], t[1], t[2], t[3]}));
    Tet tet{t[0], t[1], t[2], t[3]};
    tau.tets.insert(tet);
    tau.vertices.insert(tet.begin(), tet.end());
    for (const Triangle& f : faces_of(tet)) tau.face_incidence[f].push_back(tet);
    for (const Edge& e : edges_of(tet)) tau.edges.insert(e);
  }
  tau.chain = m;

  for (const auto& [f, ts] : tau.face_incidence) {
    if (ts.size() > 2)
      throw BallError("triangle in >= 3 tets: " + tri_str(f) + " lies in " +
                      std::to_string(ts.size()));
    bool on_sphere = sigma.faces.contains(f);
    if (ts.size() == 1 && !on_sphere)
      throw BallError("interior triangle mismatch: " + tri_str(f) +
                      " lies in one tet but is not a boundary face");
    if (ts.size() == 2 && on_sphere)
      throw BallError("interior triangle mismatch: " + tri_str(f) +
                      " lies in two tets but is a boundary face");
  }
  for (const Triangle& f : sigma.faces)
    if (!tau.face_incidence.contains(f))
      throw BallError("interior triangle mismatch: boundary face " +
                      tri_str(f) + " lies in no tet");

  if (boundary(m) != sigma.orientation)
    throw BallError(
        "chain boundary does not match the boundary orientation cycle");

  if (tet_components(m).size() != 1)
    throw BallError("tet graph is not connected");

  long chi = static_cast<long>(tau.vertices.size()) -
             static_cast<long>(tau.edges.size()) +
             static_cast<long>(tau.face_incidence.size()) -
             static_cast<long>(tau.tets.size());
  if (chi != 1)
    throw BallError("Euler characteristic " + std::to_string(chi) +
                    ", expected 1");

  tau.boundary = sigma;
  return tau;
}

std::vector<Tet> eligible_tets(const BallComplex& tau) {
  bool no_degree3 = tau.boundary.degree3_vertices().empty();
  std::vector<Tet> out;
  for (const Tet& t : tau.tets) {
    int n = tau.boundary_face_count(t);
    if (n >= 3 && no_degree3 && tau.tets.size() > 1)
      throw BallError("tet " + tet_str(t) + " has " + std::to_string(n) +
                      " boundary faces though the boundary has no degree-3 "
                      "vertex");
    if (n == 2) out.push_back(t);
  }
  return out;
}

std::vector<Tet> disjointly_eligible_tets(const BallComplex& tau) {
  std::vector<Tet> out = eligible_tets(tau);
  std::set<Triangle> seen;
  for (const Tet& t : out)
    for (const Triangle& f : faces_of(t))
      if (tau.is_boundary_face(f) && !seen.insert(f).second)
        throw BallError("boundary face " + tri_str(f) +
                        " shared by two eligible tets");
  return out;
}

RemoveOutcome remove_tet(const BallComplex& tau, const Tet& t) {
  if (!tau.tets.contains(t))
    throw std::invalid_argument("remove_tet: tet not in complex");
  if (tau.tets.size() < 2)
    throw std::invalid_argument("remove_tet: cannot remove the last tet");

  Chain rest = tau.chain;
  rest.add_term(std::span<const VertexId>(t.data(), t.size()),
                Rational(-tau.sign(t)));

  RemoveOutcome out;
  std::vector<std::vector<Tet>> comps = tet_components(rest);
  if (comps.size() > 2) {
    out.kind = RemoveOutcome::Kind::invalid;
    out.diagnostic = "removal disconnects interior into " +
                     std::to_string(comps.size()) + " parts";
    return out;
  }

  std::vector<BallComplex> parts;
  for (const auto& comp : comps) {
    Chain mc(3);
    for (const Tet& u : comp)
      mc.add_term(std::span<const VertexId>(u.data(), u.size()),
                  rest.coefficient({u[0], u[1], u[2], u[3]}));
    try {
      SphereTriangulation s = sphere_from_cycle(boundary(mc));
      parts.push_back(to_ball_complex(mc, s));
    } catch (const ValidationError& e) {
      out.kind = RemoveOutcome::Kind::invalid;
      out.diagnostic = std::string("boundary after removal: ") + e.what();
      return out;
    } catch (const BallError& e) {
      out.kind = RemoveOutcome::Kind::invalid;
      out.diagnostic = e.what();
      return out;
    }
  }

  if (parts.size() == 2) {
    std::vector<VertexId> common;
    std::set_intersection(parts[0].vertices.begin(), parts[0].vertices.end(),
                          parts[1].vertices.begin(), parts[1].vertices.end(),
                          std::back_inserter(common));
    if (common.size() > 3) {
      out.kind = RemoveOutcome::Kind::invalid;
      out.diagnostic = "split parts share " + std::to_string(common.size()) +
                       " vertices";
      return out;
    }
    out.kind = RemoveOutcome::Kind::split;
  } else {
    out.kind = RemoveOutcome::Kind::sphere;
  }
  out.parts = std::move(parts);
  return out;
}

// --- shucking ----------------------------------------------------------- --

namespace {

// The single tet containing x, when x lies in exactly one.
std::optional<Tet> corner_tet(const BallComplex& tau, VertexId x) {
  std::optional<Tet> found;
  for (const Tet& t : tau.tets) {
    if (std::find(t.begin(), t.end(), x) == t.end()) continue;
    if (found) return std::nullopt;
    found = t;
  }
  return found;
}

bool share_face(const Tet& a, const Tet& b) {
  for (const Triangle& f : faces_of(a))
    for (const Triangle& g : faces_of(b))
      if (f == g) return true;
  return false;
}

void removal_sequence(const BallComplex& tau, const Tet& last,
                      std::vector<Tet>& out) {
  if (!tau.tets.contains(last))
    throw ShuckError("no admissible tet found: designated tet " +
                     tet_str(last) + " missing from component");
  if (tau.tets.size() == 1) {
    out.push_back(last);
    return;
  }

  std::vector<VertexId> d3 = tau.boundary.degree3_vertices();
  if (!d3.empty()) {
    std::vector<Tet> corners;
    for (VertexId x : d3) {
      std::optional<Tet> c = corner_tet(tau, x);
      if (!c)
        throw ShuckError("no admissible tet found: degree-3 boundary vertex " +
                         std::to_string(x) + " lies in more than one tet");
      corners.push_back(*c);
    }
    for (const Tet& t : corners) {
      if (t == last) continue;
      RemoveOutcome o = remove_tet(tau, t);
      if (o.kind != RemoveOutcome::Kind::sphere)
        throw ShuckError("no admissible tet found: pulling off corner tet " +
                         tet_str(t) + " failed: " + o.diagnostic);
      out.push_back(t);
      removal_sequence(o.parts[0], last, out);
      return;
    }
    // Every corner is `last`: disassemble the rest first, ending at the
    // tet `last` is attached to.
    std::optional<Tet> t2;
    for (const Triangle& f : faces_of(last)) {
      const auto& ts = tau.face_incidence.at(f);
      if (ts.size() != 2) continue;
      t2 = ts[0] == last ? ts[1] : ts[0];
      break;
    }
    if (!t2)
      throw ShuckError("no admissible tet found: corner tet " +
                       tet_str(last) + " has no interior face");
    RemoveOutcome o = remove_tet(tau, last);
    if (o.kind != RemoveOutcome::Kind::sphere)
      throw ShuckError("no admissible tet found: pulling off corner tet " +
                       tet_str(last) + " failed: " + o.diagnostic);
    removal_sequence(o.parts[0], *t2, out);
    out.push_back(last);
    return;
  }

  for (const Tet& t : disjointly_eligible_tets(tau)) {
    if (t == last || share_face(t, last)) continue;
    RemoveOutcome o = remove_tet(tau, t);
    if (o.kind == RemoveOutcome::Kind::invalid) continue;
    if (o.kind == RemoveOutcome::Kind::sphere) {
      out.push_back(t);
      removal_sequence(o.parts[0], last, out);
      return;
    }
    // Split: disassemble the side away from `last` down to the tet where
    // t attached, then t, then the rest.
    const BallComplex* keep = nullptr;
    const BallComplex* far = nullptr;
    if (o.parts[0].tets.contains(last)) {
      keep = &o.parts[0];
      far = &o.parts[1];
    } else if (o.parts[1].tets.contains(last)) {
      keep = &o.parts[1];
      far = &o.parts[0];
    } else {
      throw ShuckError("no admissible tet found: split lost the designated "
                       "tet " + tet_str(last));
    }
    std::optional<Tet> t2;
    for (const Triangle& f : faces_of(t)) {
      auto it = far->face_incidence.find(f);
      if (it == far->face_incidence.end()) continue;
      t2 = it->second[0];
      break;
    }
    if (!t2)
      throw ShuckError(
          "no admissible tet found: split part does not attach to " +
          tet_str(t));
    removal_sequence(*far, *t2, out);
    out.push_back(t);
    removal_sequence(*keep, last, out);
    return;
  }
  throw ShuckError("no admissible tet found");
}

}  // namespace

ShellingOrder shuck(const BallComplex& tau, const Tet& last) {
  if (!tau.tets.contains(last))
    throw std::invalid_argument("shuck: tet not in complex");
  std::vector<Tet> removal;
  removal_sequence(tau, last, removal);
  ShellingOrder order;
  order.order.assign(removal.rbegin(), removal.rend());
  ShellingCertification cert = certify_shelling(tau, order);
  if (!cert.ok)
    throw ShuckError("shelling certification failed: " + cert.diagnostic);
  return order;
}

ShellingCertification certify_shelling(const BallComplex& tau,
                                       ShellingOrder& order) {
  auto fail = [](std::string msg) {
    return ShellingCertification{false, std::move(msg)};
  };
  if (order.order.size() != tau.tets.size())
    return fail("order has " + std::to_string(order.order.size()) +
                " tets, complex has " + std::to_string(tau.tets.size()));
  {
    std::set<Tet> seen;
    for (const Tet& t : order.order) {
      if (!tau.tets.contains(t))
        return fail("order contains foreign tet " + tet_str(t));
      if (!seen.insert(t).second)
        return fail("order repeats tet " + tet_str(t));
    }
  }

  order.types.assign(order.order.size(), 0);
  std::set<VertexId> pv;
  std::set<Edge> pe;
  std::map<Triangle, int> pf;  // triangle -> incidence count in prefix
  Chain pchain(3);

  for (std::size_t k = 0; k < order.order.size(); ++k) {
    const Tet& t = order.order[k];
    auto fs = faces_of(t);
    auto es = edges_of(t);

    if (k > 0) {
      std::vector<Triangle> shared;
      for (const Triangle& f : fs) {
        auto it = pf.find(f);
        if (it == pf.end()) continue;
        if (it->second == 2)
          return fail("step " + std::to_string(k + 1) + ": face " +
                      tri_str(f) + " is already interior");
        shared.push_back(f);
      }
      if (shared.empty() || shared.size() > 2)
        return fail("step " + std::to_string(k + 1) + ": tet " + tet_str(t) +
                    " attaches along " + std::to_string(shared.size()) +
                    " faces (type " + std::to_string(shared.size()) + ")");
      order.types[k] = static_cast<int>(shared.size());

      // The intersection with the prefix must be exactly the closure of
      // the shared faces; anything extra pinches the ball.
      std::set<VertexId> cv;
      std::set<Edge> ce;
      for (const Triangle& f : shared) {
        cv.insert(f.begin(), f.end());
        ce.insert(make_edge(f[0], f[1]));
        ce.insert(make_edge(f[0], f[2]));
        ce.insert(make_edge(f[1], f[2]));
      }
      for (VertexId v : t)
        if (pv.contains(v) && !cv.contains(v))
          return fail("step " + std::to_string(k + 1) + ": vertex " +
                      std::to_string(v) + " met outside the attaching disc");
      for (const Edge& e : es)
        if (pe.contains(e) && !ce.contains(e))
          return fail("step " + std::to_string(k + 1) + ": edge {" +
                      std::to_string(e[0]) + "," + std::to_string(e[1]) +
                      "} met outside the attaching disc");
      for (const Triangle& f : fs)
        if (pf.contains(f) &&
            std::find(shared.begin(), shared.end(), f) == shared.end())
          return fail("step " + std::to_string(k + 1) + ": face " +
                      tri_str(f) + " met outside the attaching disc");
    }

    pv.insert(t.begin(), t.end());
    pe.insert(es.begin(), es.end());
    for (const Triangle& f : fs) ++pf[f];
    pchain.add_term(std::span<const VertexId>(t.data(), t.size()),
                    Rational(tau.sign(t)));

    // The prefix boundary must stay a single sphere.
    Chain px = boundary(pchain);
    std::vector<Triangle> bfaces;
    for (const auto& [f, cnt] : pf)
      if (cnt == 1) bfaces.push_back(f);
    if (px.term_count() != bfaces.size())
      return fail("step " + std::to_string(k + 1) +
                  ": prefix boundary support mismatch");
    try {
      validate(bfaces);
    } catch (const ValidationError& e) {
      return fail("step " + std::to_string(k + 1) +
                  ": prefix boundary is not a sphere: " + e.what());
    }
  }

  // From-scratch finish: whole complex, correct boundary, connected, chi 1.
  if (pchain != tau.chain) return fail("replayed chain differs from complex");
  Chain bx = boundary(pchain);
  if (bx != tau.boundary.orientation)
    return fail("final boundary differs from the boundary sphere");
  if (tet_components(pchain).size() != 1)
    return fail("final complex is not connected");
  long chi = static_cast<long>(pv.size()) - static_cast<long>(pe.size()) +
             static_cast<long>(pf.size()) -
             static_cast<long>(order.order.size());
  if (chi != 1)
    return fail("final Euler characteristic " + std::to_string(chi) +
                ", expected 1");
  return {};
}

FreeShellingReport verify_freely_shellable(const BallComplex& tau) {
  FreeShellingReport rep;
  for (const Tet& t : tau.tets) {
    FreeShellingReport::Entry e;
    e.first = t;
    try {
      ShellingOrder order = shuck(tau, t);
      e.ok = true;
      for (int ty : order.types)
        if (ty == 3) ++rep.type3_steps;
    } catch (const ShuckError& err) {
      e.ok = false;
      e.note = err.what();
      rep.all_ok = false;
    }
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

// --- flag property ------------------------------------------------------ --

FlagReport flag_check_skeleton(const std::set<Edge>& edges,
                               const std::set<Triangle>& triangles,
                               const std::set<Tet>& tets) {
  FlagReport rep;
  std::set<VertexId> vset;
  for (const Edge& e : edges) vset.insert(e.begin(), e.end());
  std::vector<VertexId> vs(vset.begin(), vset.end());
  auto adj = [&](VertexId a, VertexId b) {
    return edges.contains(make_edge(a, b));
  };

  const std::size_t n = vs.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!adj(vs[i], vs[j])) continue;
      for (std::size_t k = j + 1; k < n; ++k) {
        if (!adj(vs[i], vs[k]) || !adj(vs[j], vs[k])) continue;
        Triangle f{vs[i], vs[j], vs[k]};
        if (!triangles.contains(f)) rep.empty_triangles.push_back(f);
        for (std::size_t l = k + 1; l < n; ++l) {
          if (!adj(vs[i], vs[l]) || !adj(vs[j], vs[l]) || !adj(vs[k], vs[l]))
            continue;
          Tet t{vs[i], vs[j], vs[k], vs[l]};
          auto tf = faces_of(t);
          bool all_tris = std::all_of(
              tf.begin(), tf.end(),
              [&](const Triangle& x) { return triangles.contains(x); });
          if (all_tris && !tets.contains(t)) rep.empty_k4.push_back(t);
          for (std::size_t m = l + 1; m < n; ++m) {
            if (adj(vs[i], vs[m]) && adj(vs[j], vs[m]) &&
                adj(vs[k], vs[m]) && adj(vs[l], vs[m]))
              rep.k5_cliques.push_back(
                  {vs[i], vs[j], vs[k], vs[l], vs[m]});
          }
        }
      }
    }
  return rep;
}

FlagReport flag_check(const BallComplex& tau) {
  std::set<Triangle> tris;
  for (const auto& [f, ts] : tau.face_incidence) tris.insert(f);
  return flag_check_skeleton(tau.edges, tris, tau.tets);
}

// --- certificate -------------------------------------------------------- --

namespace {

nlohmann::json to_json(const Tet& t) {
  return nlohmann::json::array({t[0], t[1], t[2], t[3]});
}

nlohmann::json to_json(const Triangle& t) {
  return nlohmann::json::array({t[0], t[1], t[2]});
}

}  // namespace

std::string certificate_json(const BallComplex& tau,
                             const ShellingOrder& shelling,
                             const FreeShellingReport& free_report,
                             const FlagReport& flag_report) {
  nlohmann::json doc;
  doc["tets"] = nlohmann::json::array();
  for (const Tet& t : tau.tets)
    doc["tets"].push_back({{"vertices", to_json(t)}, {"sign", tau.sign(t)}});
  doc["boundary"] = {{"vertices", tau.boundary.vertex_count()},
                     {"faces", tau.boundary.face_count()}};

  nlohmann::json order = nlohmann::json::array();
  for (const Tet& t : shelling.order) order.push_back(to_json(t));
  doc["shelling"] = {{"order", order}, {"types", shelling.types}};

  int passed = 0;
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& e : free_report.entries) {
    if (e.ok)
      ++passed;
    else
      failures.push_back({{"first", to_json(e.first)}, {"error", e.note}});
  }
  doc["free_shelling"] = {
      {"checked", free_report.entries.size()},
      {"passed", passed},
      {"type3_steps", free_report.type3_steps},
      {"all_ok", free_report.all_ok},
      {"failures", failures}};

  nlohmann::json empty_tris = nlohmann::json::array();
  for (const Triangle& t : flag_report.empty_triangles)
    empty_tris.push_back(to_json(t));
  nlohmann::json empty_k4 = nlohmann::json::array();
  for (const Tet& t : flag_report.empty_k4) empty_k4.push_back(to_json(t));
  nlohmann::json k5 = nlohmann::json::array();
  for (const auto& c : flag_report.k5_cliques)
    k5.push_back(nlohmann::json::array({c[0], c[1], c[2], c[3], c[4]}));
  doc["flag"] = {{"empty_triangles", empty_tris},
                 {"empty_k4", empty_k4},
                 {"k5_cliques", k5},
                 {"is_flag", flag_report.is_flag()}};
  return doc.dump(2);
}

}  // namespace tautfill
