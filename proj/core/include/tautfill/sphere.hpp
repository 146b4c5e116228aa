#ifndef TAUTFILL_SPHERE_HPP
#define TAUTFILL_SPHERE_HPP

#include <array>
#include <iosfwd>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "tautfill/chain.hpp"

namespace tautfill {

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Edge = std::array<VertexId, 2>;      // sorted
using Triangle = std::array<VertexId, 3>;  // sorted
using Tet = std::array<VertexId, 4>;       // sorted

Edge make_edge(VertexId a, VertexId b);
Triangle make_triangle(VertexId a, VertexId b, VertexId c);

// A validated triangulation of the 2-sphere.  Vertex labels are arbitrary
// non-negative integers.  The orientation chain assigns +1 or -1 to every
// face and has zero boundary.
struct SphereTriangulation {
  std::vector<VertexId> vertices;  // sorted
  std::set<Triangle> faces;
  std::set<Edge> edges;
  Chain orientation{2};

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  int face_count() const { return static_cast<int>(faces.size()); }

  int vertex_degree(VertexId x) const;  // number of incident edges
  int max_degree() const;
  std::vector<VertexId> degree3_vertices() const;
  bool has_face(const Triangle& t) const { return faces.contains(t); }
};

// Checks that the given faces triangulate a 2-sphere: distinct faces on
// distinct vertices, every edge in exactly two faces, every vertex link a
// single cycle, connected, Euler characteristic 2.  Returns the
// triangulation with its canonical orientation (the lexicographically
// smallest face oriented +1 on its sorted tuple, the rest forced by
// adjacency).  Throws ValidationError with a diagnostic otherwise.
SphereTriangulation validate(const std::vector<Triangle>& faces);

// The fundamental cycle in the stored orientation.
const Chain& orientation_cycle(const SphereTriangulation& s);

// Renames vertices through the map (which must be injective on the vertex
// set) and carries the orientation along.
SphereTriangulation relabel(const SphereTriangulation& s,
                            const std::map<VertexId, VertexId>& to);

// --- catalog -------------------------------------------------------------

// Named construction families, all on vertex labels 0..v-1:
//   tetrahedron            boundary of the 3-simplex (no parameter)
//   bipyramid:k            two apexes over a k-gon ring, k >= 3
//   octahedron             bipyramid:4
//   icosahedron            wheel_double:5
//   wheel_double:k         k-gon antiprism capped by two apex pyramids,
//                          k >= 3 (v = 2k+2, f = 4k)
//   stacked:k              k successive face stackings of the tetrahedron,
//                          each on the lexicographically smallest face
SphereTriangulation catalog(const std::string& name, int parameter = -1);

struct CatalogEntry {
  std::string name;
  bool takes_parameter;
  int min_parameter;
  std::string summary;
};
std::vector<CatalogEntry> catalog_entries();

// --- connected sum -------------------------------------------------------

struct ConnectedSum {
  SphereTriangulation sphere;  // orientation is side_x + side_y
  Chain side_x{2};             // orientation cycle of the first summand
  Chain side_y{2};             // orientation cycle of the relabeled second
  Triangle shared;             // glued triangle, a non-face 3-clique of sphere
};

// Glues s1 and s2 along the chosen faces with orientations reversed, giving
// labels above max(s1) to the vertices of s2 outside its glued face.  The
// result satisfies orientation_cycle(sum.sphere) == sum.side_x + sum.side_y.
ConnectedSum connected_sum(const SphereTriangulation& s1, const Triangle& f1,
                           const SphereTriangulation& s2, const Triangle& f2);

// Same, glued along the lexicographically smallest face of each summand.
ConnectedSum connected_sum(const SphereTriangulation& s1,
                           const SphereTriangulation& s2);

// --- prime decomposition -------------------------------------------------

// A 3-clique of the skeleton that is not a face separates the sphere.
std::vector<Triangle> separating_triangles(const SphereTriangulation& s);
bool is_prime(const SphereTriangulation& s);

struct PrimeDecomposition {
  std::vector<SphereTriangulation> components;  // vertex labels preserved
  struct Gluing {
    int first;   // component indexes
    int second;
    Triangle triangle;
  };
  std::vector<Gluing> gluing_tree;  // components.size() - 1 entries
};

// Splits along non-face 3-cliques (lexicographically smallest first,
// recursively) until every component is prime.  The cut triangle becomes a
// face of both sides, so re-gluing the tree reproduces the input.
PrimeDecomposition prime_decompose(const SphereTriangulation& s);

// Flag property: every 3-clique of the skeleton spans a face and no
// 4-clique occurs (a 4-clique in a 2-complex can never span a simplex).
bool is_flag(const SphereTriangulation& s);

// --- text format ----------------------------------------------------------
//
//   sphere <v> <f>
//   a b c            (one face per line, optionally oriented)
//
// '#' starts a comment.  If the oriented triples form a cycle, that
// orientation is kept; otherwise the canonical one is computed.

SphereTriangulation read_sphere(std::istream& in);
SphereTriangulation read_sphere_file(const std::string& path);
void write_sphere(std::ostream& out, const SphereTriangulation& s);

}  // namespace tautfill

#endif
