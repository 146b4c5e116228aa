#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <sstream>

#include "tautfill/sphere.hpp"

using namespace tautfill;

namespace {

std::vector<std::pair<std::string, int>> catalog_instances() {
  return {{"tetrahedron", -1}, {"bipyramid", 3},    {"bipyramid", 4},
          {"bipyramid", 5},    {"bipyramid", 6},    {"octahedron", -1},
          {"icosahedron", -1}, {"wheel_double", 3}, {"wheel_double", 4},
          {"wheel_double", 5}, {"wheel_double", 6}, {"stacked", 0},
          {"stacked", 2},      {"stacked", 5},      {"stacked", 9}};
}

}  // namespace

TEST_CASE("catalog triangulations validate with the sphere equalities") {
  for (const auto& [name, param] : catalog_instances()) {
    CAPTURE(name);
    CAPTURE(param);
    SphereTriangulation s = catalog(name, param);
    // re-validate from the raw face list
    std::vector<Triangle> fs(s.faces.begin(), s.faces.end());
    SphereTriangulation again = validate(fs);
    CHECK(again.faces == s.faces);

    CHECK(s.edge_count() == 3 * s.vertex_count() - 6);
    CHECK(s.face_count() == 2 * s.vertex_count() - 4);

    const Chain& x = orientation_cycle(s);
    CHECK(boundary(x).is_zero());
    CHECK(x.term_count() == s.faces.size());
    for (const auto& [t, c] : x.terms()) {
      CHECK((c == 1 || c == -1));
      CHECK(s.faces.contains(Triangle{t[0], t[1], t[2]}));
    }
    // canonical orientation: +1 on the lexicographically smallest face
    Triangle least = *s.faces.begin();
    CHECK(again.orientation.coefficient({least[0], least[1], least[2]}) == 1);
  }
}

TEST_CASE("catalog shapes and degrees") {
  SphereTriangulation tet = catalog("tetrahedron");
  CHECK(tet.vertex_count() == 4);
  CHECK(tet.face_count() == 4);
  CHECK(tet.degree3_vertices().size() == 4);

  SphereTriangulation oct = catalog("octahedron");
  CHECK(oct.vertex_count() == 6);
  CHECK(oct.face_count() == 8);
  CHECK(oct.max_degree() == 4);
  CHECK(oct.degree3_vertices().empty());

  SphereTriangulation ico = catalog("icosahedron");
  CHECK(ico.vertex_count() == 12);
  CHECK(ico.face_count() == 20);
  CHECK(ico.max_degree() == 5);

  SphereTriangulation wd6 = catalog("wheel_double", 6);
  CHECK(wd6.vertex_count() == 14);
  CHECK(wd6.face_count() == 24);
  CHECK(wd6.max_degree() == 6);

  SphereTriangulation st9 = catalog("stacked", 9);
  CHECK(st9.vertex_count() == 13);
  CHECK(st9.face_count() == 22);

  CHECK_THROWS_AS(catalog("dodecahedron"), std::invalid_argument);
  CHECK_THROWS_AS(catalog("bipyramid", 2), std::invalid_argument);
  CHECK_FALSE(catalog_entries().empty());
}

TEST_CASE("validate rejects broken inputs") {
  // duplicate face
  CHECK_THROWS_AS(validate({{0, 1, 2}, {0, 1, 2}, {0, 1, 3}, {1, 2, 3}}),
                  ValidationError);
  // edge {0,1} in more than two faces
  CHECK_THROWS_AS(validate({{0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {0, 2, 3},
                            {1, 2, 3}, {0, 2, 4}, {1, 2, 4}}),
                  ValidationError);
  // two tetrahedra pinched at vertex 0
  std::vector<Triangle> pinched = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3},
                                   {0, 4, 5}, {0, 4, 6}, {0, 5, 6}, {4, 5, 6}};
  CHECK_THROWS_AS(validate(pinched), ValidationError);
  // two disjoint tetrahedra
  std::vector<Triangle> disjoint = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3},
                                    {1, 2, 3}, {4, 5, 6}, {4, 5, 7},
                                    {4, 6, 7}, {5, 6, 7}};
  CHECK_THROWS_AS(validate(disjoint), ValidationError);
  // degenerate face
  CHECK_THROWS_AS(validate({{0, 1, 1}, {0, 1, 2}, {0, 2, 3}, {1, 2, 3}}),
                  ValidationError);
}

TEST_CASE("relabel carries faces and orientation") {
  SphereTriangulation tet = catalog("tetrahedron");
  std::map<VertexId, VertexId> to = {{0, 10}, {1, 7}, {2, 3}, {3, 0}};
  SphereTriangulation moved = relabel(tet, to);
  CHECK(moved.vertex_count() == 4);
  CHECK(moved.faces.contains(Triangle{0, 3, 7}));
  CHECK(boundary(moved.orientation).is_zero());

  std::map<VertexId, VertexId> collide = {{0, 5}, {1, 5}, {2, 6}, {3, 7}};
  CHECK_THROWS_AS(relabel(tet, collide), std::invalid_argument);
}

TEST_CASE("connected sum of two tetrahedra") {
  SphereTriangulation tet = catalog("tetrahedron");
  ConnectedSum sum = connected_sum(tet, tet);
  CHECK(sum.sphere.vertex_count() == 5);
  CHECK(sum.sphere.face_count() == 6);
  CHECK(orientation_cycle(sum.sphere) == sum.side_x + sum.side_y);
  CHECK(boundary(sum.side_x).is_zero());
  CHECK(boundary(sum.side_y).is_zero());
  CHECK(l1_norm(sum.side_x) == 4);
  CHECK(l1_norm(sum.side_y) == 4);
  // the glued triangle survives as a 3-clique but not as a face
  CHECK_FALSE(sum.sphere.faces.contains(sum.shared));
  for (int i = 0; i < 2; ++i)
    for (int j = i + 1; j < 3; ++j)
      CHECK(sum.sphere.edges.contains(make_edge(sum.shared[i], sum.shared[j])));
  // overlap of the two sides is exactly the glued triangle
  std::set<VertexId> vx = vert(sum.side_x);
  std::set<VertexId> vy = vert(sum.side_y);
  std::vector<VertexId> common;
  std::set_intersection(vx.begin(), vx.end(), vy.begin(), vy.end(),
                        std::back_inserter(common));
  CHECK(common == std::vector<VertexId>(sum.shared.begin(), sum.shared.end()));
}

TEST_CASE("connected sum along chosen faces") {
  SphereTriangulation oct = catalog("octahedron");
  SphereTriangulation tet = catalog("tetrahedron");
  Triangle f1 = *std::next(oct.faces.begin(), 3);
  Triangle f2 = {0, 1, 3};
  ConnectedSum sum = connected_sum(oct, f1, tet, f2);
  CHECK(sum.sphere.vertex_count() == 7);
  CHECK(sum.sphere.face_count() == 10);
  CHECK(orientation_cycle(sum.sphere) == sum.side_x + sum.side_y);
  CHECK_THROWS_AS(connected_sum(oct, Triangle{0, 1, 2}, tet, f2),
                  std::invalid_argument);  // {0,1,2} is not a face of oct
}

TEST_CASE("separating triangles and primality") {
  CHECK(is_prime(catalog("tetrahedron")));
  CHECK(is_prime(catalog("octahedron")));
  CHECK(is_prime(catalog("icosahedron")));
  CHECK(separating_triangles(catalog("octahedron")).empty());

  // bipyramid over a triangle: the ring {2,3,4} spans no face
  SphereTriangulation bp3 = catalog("bipyramid", 3);
  auto seps = separating_triangles(bp3);
  REQUIRE(seps.size() == 1);
  CHECK(seps[0] == Triangle{2, 3, 4});
  CHECK_FALSE(is_prime(bp3));

  ConnectedSum sum = connected_sum(catalog("tetrahedron"), catalog("tetrahedron"));
  auto s2 = separating_triangles(sum.sphere);
  REQUIRE(s2.size() == 1);
  CHECK(s2[0] == sum.shared);
}

TEST_CASE("prime decomposition splits sums and re-glues") {
  SphereTriangulation oct = catalog("octahedron");
  SphereTriangulation tet = catalog("tetrahedron");
  ConnectedSum sum = connected_sum(oct, tet);

  PrimeDecomposition dec = prime_decompose(sum.sphere);
  REQUIRE(dec.components.size() == 2);
  REQUIRE(dec.gluing_tree.size() == 1);
  CHECK(dec.gluing_tree[0].triangle == sum.shared);
  for (const auto& comp : dec.components) CHECK(is_prime(comp));

  // labels are preserved, so re-gluing is face-set surgery
  std::set<Triangle> reglued;
  for (const auto& comp : dec.components)
    reglued.insert(comp.faces.begin(), comp.faces.end());
  for (const auto& glue : dec.gluing_tree) reglued.erase(glue.triangle);
  CHECK(reglued == sum.sphere.faces);

  // component face counts: the cut face is restored on both sides
  std::vector<std::size_t> sizes;
  for (const auto& comp : dec.components) sizes.push_back(comp.faces.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{4, 8});

  // a prime input decomposes into itself
  PrimeDecomposition trivial = prime_decompose(oct);
  REQUIRE(trivial.components.size() == 1);
  CHECK(trivial.components[0].faces == oct.faces);
  CHECK(trivial.gluing_tree.empty());
}

TEST_CASE("triple sums decompose into three primes") {
  SphereTriangulation tet = catalog("tetrahedron");
  ConnectedSum once = connected_sum(catalog("octahedron"), tet);
  ConnectedSum twice = connected_sum(once.sphere, tet);
  PrimeDecomposition dec = prime_decompose(twice.sphere);
  REQUIRE(dec.components.size() == 3);
  CHECK(dec.gluing_tree.size() == 2);
  std::set<Triangle> reglued;
  for (const auto& comp : dec.components) {
    CHECK(is_prime(comp));
    reglued.insert(comp.faces.begin(), comp.faces.end());
  }
  for (const auto& glue : dec.gluing_tree) reglued.erase(glue.triangle);
  CHECK(reglued == twice.sphere.faces);
}

TEST_CASE("flag iff prime and not the tetrahedron boundary") {
  std::mt19937 rng(21);
  std::vector<SphereTriangulation> pool;
  for (const auto& [name, param] : catalog_instances())
    pool.push_back(catalog(name, param));
  // a few random sums on top of the catalog
  for (int i = 0; i < 6; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    const SphereTriangulation& a = pool[pick(rng)];
    const SphereTriangulation& b = pool[pick(rng)];
    pool.push_back(connected_sum(a, b).sphere);
  }
  for (const SphereTriangulation& s : pool) {
    bool tet_boundary = s.vertex_count() == 4;
    CHECK(is_flag(s) == (is_prime(s) && !tet_boundary));
  }
}

TEST_CASE("text format round-trips") {
  for (const auto& [name, param] :
       {std::pair<std::string, int>{"octahedron", -1},
        std::pair<std::string, int>{"stacked", 3}}) {
    SphereTriangulation s = catalog(name, param);
    std::ostringstream out;
    write_sphere(out, s);
    std::istringstream in(out.str());
    SphereTriangulation back = read_sphere(in);
    CHECK(back.faces == s.faces);
    CHECK(back.orientation == s.orientation);
  }

  std::istringstream plain(
      "# a tetrahedron\nsphere 4 4\n0 1 2\n0 1 3\n0 2 3\n1 2 3\n");
  SphereTriangulation tet = read_sphere(plain);
  CHECK(tet.faces == catalog("tetrahedron").faces);

  std::istringstream bad_header("simplex 4 4\n0 1 2\n");
  CHECK_THROWS_AS(read_sphere(bad_header), ValidationError);
  std::istringstream bad_count("sphere 4 5\n0 1 2\n0 1 3\n0 2 3\n1 2 3\n");
  CHECK_THROWS_AS(read_sphere(bad_count), ValidationError);
  std::istringstream not_sphere("sphere 4 2\n0 1 2\n0 1 3\n");
  CHECK_THROWS_AS(read_sphere(not_sphere), ValidationError);
}
