#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <string>

#include "json.hpp"
#include "tautfill/ball.hpp"
#include "tautfill/fill.hpp"
#include "tautfill/sphere.hpp"

using namespace tautfill;

namespace {

bool throws_with_substring(const std::function<void()>& f,
                           const std::string& needle) {
  try {
    f();
  } catch (const std::exception& e) {
    return std::string(e.what()).find(needle) != std::string::npos;
  }
  return false;
}

// The double cone over the ring of the triangle bipyramid, oriented to
// match the canonical cycle, then a third tet glued on boundary face
// {1,2,3} through the fresh vertex 5.
Chain two_tets() {
  Chain m(3);
  m.add_term({0, 2, 3, 4}, -1);
  m.add_term({1, 2, 3, 4}, 1);
  return m;
}

Chain three_tets() {
  Chain m = two_tets();
  m.add_term({1, 2, 3, 5}, -1);
  return m;
}

BallComplex ball_of(const Chain& m) {
  Chain b = boundary(m);
  std::vector<Triangle> fs;
  for (const auto& [t, c] : b.terms()) fs.push_back({t[0], t[1], t[2]});
  SphereTriangulation s = validate(fs);
  if (orientation_cycle(s) != b) {
    s.orientation = -s.orientation;
    REQUIRE(orientation_cycle(s) == b);
  }
  return to_ball_complex(m, s);
}

}  // namespace

TEST_CASE("single tet is a ball") {
  SphereTriangulation sigma = catalog("tetrahedron");
  FillResult z = zvol(orientation_cycle(sigma));
  BallComplex tau = to_ball_complex(z.filling, sigma);
  CHECK(tau.tet_count() == 1);
  CHECK(tau.boundary.face_count() == 4);
  Tet only = *tau.tets.begin();
  CHECK(tau.boundary_face_count(only) == 4);
  CHECK(tau.vertices.size() == 4);
}

TEST_CASE("bipyramid filling is a two-tet ball") {
  Chain m = two_tets();
  BallComplex tau = ball_of(m);
  CHECK(tau.tet_count() == 2);
  CHECK(tau.boundary.face_count() == 6);
  CHECK(tau.is_boundary_face({0, 2, 3}));
  CHECK_FALSE(tau.is_boundary_face({2, 3, 4}));  // the shared triangle
  for (const Tet& t : tau.tets) CHECK(tau.boundary_face_count(t) == 3);
}

TEST_CASE("octahedron fillings are four-tet balls") {
  SphereTriangulation sigma = catalog("octahedron");
  FillResult z = zvol(orientation_cycle(sigma));
  BallComplex tau = to_ball_complex(z.filling, sigma);
  CHECK(tau.tet_count() == 4);
  CHECK(tau.boundary.faces == sigma.faces);
  // interior faces form the fan around one diagonal
  int interior = 0;
  for (const auto& [f, ts] : tau.face_incidence)
    if (ts.size() == 2) ++interior;
  CHECK(interior == 4);
}

TEST_CASE("ball construction rejects bad chains") {
  SphereTriangulation sigma = catalog("tetrahedron");
  Chain twice(3);
  twice.add_term({0, 1, 2, 3}, 2);
  CHECK(throws_with_substring([&] { to_ball_complex(twice, sigma); },
                              "coefficient with |value| != 1"));

  Chain crowded(3);
  crowded.add_term({0, 1, 2, 3}, 1);
  crowded.add_term({0, 1, 2, 4}, 1);
  crowded.add_term({0, 1, 2, 5}, -1);
  CHECK(throws_with_substring([&] { to_ball_complex(crowded, sigma); },
                              "triangle in >= 3 tets"));

  Chain solo(3);
  solo.add_term({0, 1, 2, 3}, 1);
  CHECK(throws_with_substring(
      [&] { to_ball_complex(solo, catalog("octahedron")); },
      "interior triangle mismatch"));

  // correct faces, wrong orientation sign
  Chain neg = -zvol(orientation_cycle(sigma)).filling;
  CHECK(throws_with_substring([&] { to_ball_complex(neg, sigma); },
                              "does not match"));

  // a far-away closed 3-cycle does not change the boundary but
  // disconnects the support
  Chain drift = zvol(orientation_cycle(sigma)).filling;
  Chain penta(4);
  penta.add_term({4, 5, 6, 7, 8}, 1);
  drift += boundary(penta);
  CHECK(throws_with_substring([&] { to_ball_complex(drift, sigma); },
                              "not connected"));
}

TEST_CASE("eligible tets in the octahedron fan") {
  SphereTriangulation sigma = catalog("octahedron");
  BallComplex tau = to_ball_complex(zvol(orientation_cycle(sigma)).filling, sigma);
  std::vector<Tet> el = eligible_tets(tau);
  CHECK(el.size() == 4);  // every tet of the fan touches two boundary faces
  CHECK(disjointly_eligible_tets(tau).size() == 4);
}

TEST_CASE("removing an end tet keeps one ball") {
  BallComplex tau = ball_of(three_tets());
  RemoveOutcome o = remove_tet(tau, Tet{0, 2, 3, 4});
  REQUIRE(o.kind == RemoveOutcome::Kind::sphere);
  REQUIRE(o.parts.size() == 1);
  CHECK(o.parts[0].tet_count() == 2);
  CHECK(o.parts[0].boundary.face_count() == 6);
}

TEST_CASE("removing the middle tet splits the chain of three") {
  BallComplex tau = ball_of(three_tets());
  RemoveOutcome o = remove_tet(tau, Tet{1, 2, 3, 4});
  REQUIRE(o.kind == RemoveOutcome::Kind::split);
  REQUIRE(o.parts.size() == 2);
  std::vector<VertexId> common;
  std::set_intersection(o.parts[0].vertices.begin(), o.parts[0].vertices.end(),
                        o.parts[1].vertices.begin(), o.parts[1].vertices.end(),
                        std::back_inserter(common));
  CHECK(common.size() <= 3);
  for (const BallComplex& part : o.parts) CHECK(part.tet_count() == 1);
}

TEST_CASE("every removal from the cyclic fan leaves a ball") {
  SphereTriangulation sigma = catalog("octahedron");
  BallComplex tau = to_ball_complex(zvol(orientation_cycle(sigma)).filling, sigma);
  // the four tets wrap around an interior diagonal, so dropping any one
  // leaves a path of three
  for (const Tet& t : tau.tets) {
    RemoveOutcome o = remove_tet(tau, t);
    REQUIRE(o.kind == RemoveOutcome::Kind::sphere);
    CHECK(o.parts[0].tet_count() == 3);
  }

  BallComplex single = ball_of(zvol(orientation_cycle(catalog("tetrahedron"))).filling);
  CHECK_THROWS_AS(remove_tet(single, *single.tets.begin()),
                  std::invalid_argument);
  CHECK_THROWS_AS(remove_tet(tau, Tet{0, 1, 2, 9}), std::invalid_argument);
}

TEST_CASE("a book of three pages sheds any page") {
  // three tets glued in a cycle around the spine edge {0,1}; removing a
  // page leaves the other two glued along the opposite spine face
  Chain book(3);
  book.add_term({0, 1, 2, 3}, 1);
  book.add_term({0, 1, 3, 4}, 1);
  book.add_term({0, 1, 2, 4}, -1);
  BallComplex tau = ball_of(book);
  CHECK(tau.tet_count() == 3);
  CHECK(eligible_tets(tau).size() == 3);
  for (const Tet& t : tau.tets) {
    RemoveOutcome o = remove_tet(tau, t);
    REQUIRE(o.kind == RemoveOutcome::Kind::sphere);
    CHECK(o.parts[0].tet_count() == 2);
  }
  // the boundary apexes 0 and 1 have degree 3 but lie in all three tets,
  // so the corner rule finds no tet to pull off
  CHECK(throws_with_substring([&] { shuck(tau, *tau.tets.begin()); },
                              "no admissible tet found"));
}

TEST_CASE("removing a hub disconnects its spokes") {
  // central tet with three neighbours stacked on disjoint faces
  Chain m(3);
  m.add_term({0, 1, 2, 3}, 1);
  m.add_term({0, 1, 2, 4}, -1);
  m.add_term({0, 1, 3, 5}, 1);
  m.add_term({0, 2, 3, 6}, -1);
  BallComplex tau = ball_of(m);
  CHECK(tau.tet_count() == 4);
  RemoveOutcome o = remove_tet(tau, Tet{0, 1, 2, 3});
  CHECK(o.kind == RemoveOutcome::Kind::invalid);
  CHECK(o.diagnostic.find("disconnects interior into 3 parts") !=
        std::string::npos);
}

TEST_CASE("removals that pinch the boundary are invalid") {
  // cone over the octahedron with one tet already missing: removing a tet
  // next to the dent widens it, but any other removal makes a second dent
  // meeting the first in a pinched vertex
  Chain m = cone(6, orientation_cycle(catalog("octahedron")));
  auto first = m.terms().begin()->first;
  m.add_term(first, -m.coefficient(first));
  REQUIRE(l1_norm(m) == 7);
  BallComplex tau = ball_of(m);
  int spheres = 0, invalids = 0;
  for (const Tet& t : tau.tets) {
    RemoveOutcome o = remove_tet(tau, t);
    if (o.kind == RemoveOutcome::Kind::invalid) {
      ++invalids;
      CHECK(o.diagnostic.find("boundary after removal") != std::string::npos);
    } else if (o.kind == RemoveOutcome::Kind::sphere) {
      ++spheres;
    }
  }
  CHECK(spheres == 3);   // the three tets sharing a cone face with the dent
  CHECK(invalids == 4);  // dents meeting in a vertex, or at the apex
  CHECK(throws_with_substring([&] { shuck(tau, *tau.tets.begin()); },
                              "no admissible tet found"));
}

TEST_CASE("shuck produces certified shellings from every start") {
  for (const Chain& m : {two_tets(), three_tets()}) {
    BallComplex tau = ball_of(m);
    for (const Tet& t : tau.tets) {
      ShellingOrder order = shuck(tau, t);
      CHECK(order.order.size() == tau.tets.size());
      CHECK(order.order[0] == t);
      CHECK(order.types[0] == 0);
      for (std::size_t k = 1; k < order.types.size(); ++k)
        CHECK((order.types[k] == 1 || order.types[k] == 2));
    }
  }
}

TEST_CASE("free shellability of small optimal fillings") {
  for (const char* name : {"tetrahedron", "octahedron"}) {
    SphereTriangulation sigma = catalog(name);
    BallComplex tau =
        to_ball_complex(zvol(orientation_cycle(sigma)).filling, sigma);
    FreeShellingReport rep = verify_freely_shellable(tau);
    CHECK(rep.all_ok);
    CHECK(rep.entries.size() == tau.tets.size());
    CHECK(rep.type3_steps == 0);
    for (const auto& e : rep.entries) CHECK(e.ok);
  }
}

TEST_CASE("certification rejects wrong orders") {
  BallComplex tau = ball_of(three_tets());

  ShellingOrder gap;
  gap.order = {Tet{0, 2, 3, 4}, Tet{1, 2, 3, 5}, Tet{1, 2, 3, 4}};
  ShellingCertification c1 = certify_shelling(tau, gap);
  CHECK_FALSE(c1.ok);
  CHECK(c1.diagnostic.find("attaches along 0 faces") != std::string::npos);

  ShellingOrder dup;
  dup.order = {Tet{0, 2, 3, 4}, Tet{0, 2, 3, 4}, Tet{1, 2, 3, 4}};
  CHECK_FALSE(certify_shelling(tau, dup).ok);

  ShellingOrder short_order;
  short_order.order = {Tet{0, 2, 3, 4}};
  CHECK_FALSE(certify_shelling(tau, short_order).ok);

  ShellingOrder good;
  good.order = {Tet{0, 2, 3, 4}, Tet{1, 2, 3, 4}, Tet{1, 2, 3, 5}};
  ShellingCertification c2 = certify_shelling(tau, good);
  CHECK(c2.ok);
  CHECK(good.types == std::vector<int>{0, 1, 1});
}

TEST_CASE("a cone with an interior apex cannot be shucked") {
  // cone over the whole octahedron from a fresh vertex: a ball, but its
  // internal vertex leaves no tet with two boundary faces
  Chain x = orientation_cycle(catalog("octahedron"));
  Chain m = cone(6, x);
  BallComplex tau = ball_of(m);
  CHECK(eligible_tets(tau).empty());
  CHECK(throws_with_substring([&] { shuck(tau, *tau.tets.begin()); },
                              "no admissible tet found"));
  FreeShellingReport rep = verify_freely_shellable(tau);
  CHECK_FALSE(rep.all_ok);
}

TEST_CASE("flag checks on skeletons") {
  // K4 skeleton with all triangles but no tet: an empty K4
  std::set<Edge> edges;
  std::set<Triangle> tris;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) edges.insert(make_edge(i, j));
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k) tris.insert(make_triangle(i, j, k));
  FlagReport r1 = flag_check_skeleton(edges, tris, {});
  CHECK(r1.empty_triangles.empty());
  REQUIRE(r1.empty_k4.size() == 1);
  CHECK(r1.empty_k4[0] == Tet{0, 1, 2, 3});
  CHECK_FALSE(r1.is_flag());

  // missing triangle: empty triangle taboo
  std::set<Triangle> fewer = tris;
  fewer.erase(make_triangle(0, 1, 2));
  FlagReport r2 = flag_check_skeleton(edges, fewer, {});
  REQUIRE(r2.empty_triangles.size() == 1);
  CHECK(r2.empty_triangles[0] == Triangle{0, 1, 2});

  // complete graph on five vertices: K5 taboo
  std::set<Edge> k5edges;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) k5edges.insert(make_edge(i, j));
  FlagReport r3 = flag_check_skeleton(k5edges, {}, {});
  CHECK_FALSE(r3.k5_cliques.empty());
}

TEST_CASE("two tets plus bridging edges form the classic taboos") {
  // complex {0,1,2,3} and {2,3,4,5} with extra edges 0-4 and 1-4 added to
  // the skeleton: 3-cliques appear that span no triangle
  Chain m(3);
  m.add_term({0, 1, 2, 3}, 1);
  m.add_term({2, 3, 4, 5}, 1);
  std::set<Edge> edges;
  std::set<Triangle> tris;
  std::set<Tet> tets;
  for (const auto& [t, c] : m.terms()) {
    Tet tet{t[0], t[1], t[2], t[3]};
    tets.insert(tet);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        edges.insert(make_edge(tet[i], tet[j]));
        for (int k = j + 1; k < 4; ++k)
          tris.insert(make_triangle(tet[i], tet[j], tet[k]));
      }
  }
  CHECK(flag_check_skeleton(edges, tris, tets).is_flag());

  edges.insert(make_edge(0, 4));
  edges.insert(make_edge(1, 4));
  FlagReport r = flag_check_skeleton(edges, tris, tets);
  CHECK_FALSE(r.is_flag());
  // 0-4 closes triangles through the shared edge {2,3}: {0,2,4}, {0,3,4};
  // likewise for 1-4, and {0,1,4} closes through the edge {0,1}
  CHECK(r.empty_triangles.size() == 5);
}

TEST_CASE("flag report of optimal fillings is clean") {
  for (const char* name : {"tetrahedron", "octahedron"}) {
    SphereTriangulation sigma = catalog(name);
    BallComplex tau =
        to_ball_complex(zvol(orientation_cycle(sigma)).filling, sigma);
    FlagReport rep = flag_check(tau);
    CHECK(rep.is_flag());
  }
}

TEST_CASE("certificates serialize to JSON") {
  SphereTriangulation sigma = catalog("octahedron");
  BallComplex tau = to_ball_complex(zvol(orientation_cycle(sigma)).filling, sigma);
  ShellingOrder order = shuck(tau, *tau.tets.begin());
  FreeShellingReport fs = verify_freely_shellable(tau);
  FlagReport fl = flag_check(tau);
  std::string text = certificate_json(tau, order, fs, fl);

  nlohmann::json doc = nlohmann::json::parse(text);
  CHECK(doc["tets"].size() == 4);
  CHECK(doc["shelling"]["order"].size() == 4);
  CHECK(doc["shelling"]["types"][0] == 0);
  CHECK(doc["free_shelling"]["all_ok"] == true);
  CHECK(doc["free_shelling"]["checked"] == 4);
  CHECK(doc["free_shelling"]["passed"] == 4);
  CHECK(doc["flag"]["is_flag"] == true);
  CHECK(doc["flag"]["empty_triangles"].empty());
}
