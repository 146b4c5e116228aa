#ifndef TAUTFILL_BALL_HPP
#define TAUTFILL_BALL_HPP

#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "tautfill/chain.hpp"
#include "tautfill/sphere.hpp"

namespace tautfill {

class BallError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ShuckError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A candidate simplicial triangulation of the 3-ball: a +-1 tet chain whose
// triangles lie in at most two tets, with the degree-1 triangles forming
// exactly the boundary sphere.
struct BallComplex {
  Chain chain{3};
  SphereTriangulation boundary;
  std::set<Tet> tets;
  std::map<Triangle, std::vector<Tet>> face_incidence;
  std::set<Edge> edges;
  std::set<VertexId> vertices;

  int tet_count() const { return static_cast<int>(tets.size()); }
  int sign(const Tet& t) const;  // +1 or -1 coefficient
  bool is_boundary_face(const Triangle& f) const;
  std::vector<Triangle> tet_faces(const Tet& t) const;
  int boundary_face_count(const Tet& t) const;
};

// Checks the chain against the sphere: integral +-1 coefficients, every
// triangle in at most 2 tets, triangles in exactly 1 tet = faces of sigma,
// chain boundary = orientation cycle of sigma, tet graph connected, Euler
// characteristic 1.  Throws BallError naming the violation.
BallComplex to_ball_complex(const Chain& m, const SphereTriangulation& sigma);

// Tets sharing exactly two faces with the boundary sphere.  When the
// boundary has no degree-3 vertex, no tet can share three or more
// (that would force a degree-3 vertex); violations throw BallError.
std::vector<Tet> eligible_tets(const BallComplex& tau);

// Eligible tets whose boundary-face pairs are pairwise disjoint.  In a
// valid complex each boundary face lies in exactly one tet, so this is
// the full eligible list; the disjointness is re-checked.
std::vector<Tet> disjointly_eligible_tets(const BallComplex& tau);

struct RemoveOutcome {
  enum class Kind { sphere, split, invalid };
  Kind kind = Kind::invalid;
  // One complex for sphere, two (almost disjoint, sharing at most three
  // vertices) for split.
  std::vector<BallComplex> parts;
  std::string diagnostic;
};

// Removes t and classifies the remainder by its tet-adjacency components
// and their boundaries.  Requires at least two tets.
RemoveOutcome remove_tet(const BallComplex& tau, const Tet& t);

struct ShellingOrder {
  std::vector<Tet> order;
  // types[0] = 0; afterwards the number of faces shared with the previous
  // prefix, always 1 or 2 (type 3 would create an interior vertex).
  std::vector<int> types;
};

struct ShellingCertification {
  bool ok = true;
  std::string diagnostic;
};

// Replays the order, certifying each prefix: the added tet meets the prefix
// in exactly 1 or 2 faces, the intersection of closures is exactly the
// closure of the met faces, and the prefix boundary stays a valid sphere;
// finishes with a from-scratch check (same tets, boundary = sigma,
// connected, Euler characteristic 1).  Fills in the types.
ShellingCertification certify_shelling(const BallComplex& tau,
                                       ShellingOrder& order);

// Produces a certified shelling whose FIRST tet is `last` by recursively
// disassembling tau, removing `last` last:
//   - base: single tet;
//   - a boundary degree-3 vertex lies in one tet: pull that corner off
//     (if the corner is `last`, disassemble the rest first, ending at the
//     neighbour of `last`);
//   - otherwise remove the lexicographically smallest eligible tet sharing
//     no face with `last`; if the remainder splits, disassemble the far
//     side down to the attaching tet first.
// Throws ShuckError("no admissible tet found...") when stuck, and when the
// resulting order fails certification.
ShellingOrder shuck(const BallComplex& tau, const Tet& last);

struct FreeShellingReport {
  struct Entry {
    Tet first;
    bool ok = false;
    std::string note;  // failure diagnostic
  };
  std::vector<Entry> entries;
  bool all_ok = true;
  int type3_steps = 0;  // always 0 in a certified order; reported anyway
};

// Runs shuck with every tet as the initial one.
FreeShellingReport verify_freely_shellable(const BallComplex& tau);

struct FlagReport {
  std::vector<Triangle> empty_triangles;  // 3-cliques with no 2-simplex
  std::vector<Tet> empty_k4;  // 4-cliques, all triangles, no tet
  std::vector<std::array<VertexId, 5>> k5_cliques;
  bool is_flag() const {
    return empty_triangles.empty() && empty_k4.empty() && k5_cliques.empty();
  }
};

// Exhaustive clique scan of an explicit skeleton.
FlagReport flag_check_skeleton(const std::set<Edge>& edges,
                               const std::set<Triangle>& triangles,
                               const std::set<Tet>& tets);

// Same scan over the closure of the complex.
FlagReport flag_check(const BallComplex& tau);

// JSON certificate: tets, one certified shelling with per-step types, the
// free-shellability report, and the flag report.
std::string certificate_json(const BallComplex& tau,
                             const ShellingOrder& shelling,
                             const FreeShellingReport& free_report,
                             const FlagReport& flag_report);

}  // namespace tautfill

#endif
