#ifndef TAUTFILL_FILL_HPP
#define TAUTFILL_FILL_HPP

#include <vector>

#include "tautfill/chain.hpp"

namespace tautfill {

// Minimum-norm filling problem for a closed chain x of dimension n:
// variables are candidate (n+1)-simplices, all (n+2)-subsets of vert(x)
// (an optimal filling never needs other vertices, since a taut chain has
// no internal vertices).  Each candidate contributes two LP variables,
// its positive and negative parts.
struct FillProblem {
  Chain target;
  std::vector<VertexTuple> candidates;  // lexicographic

  static FillProblem from_cycle(const Chain& x);  // throws if x is open
};

enum class FillMode { rational, integral };

struct FillResult {
  Chain filling{0};
  Rational value;
  FillMode mode = FillMode::rational;
  bool optimal = false;
  Rational bound_used;  // coning bound that seeded the search
  long lp_pivots = 0;
  long bb_nodes = 0;  // branch-and-bound nodes explored (integral mode)
};

struct ConingBound {
  VertexId apex;  // maximal-degree vertex, ties to the smallest id
  Chain filling{0};  // cone(apex, x)
  Rational value; // l1_norm(x) - maxdeg(x)
};

// Warm-start filling: cone from a maximal-degree vertex.
// Throws std::invalid_argument when x is zero or not closed.
ConingBound coning_bound(const Chain& x);

// Minimum l1 norm of a rational filling: exact-rational LP optimum.
Rational qvol_value(const Chain& x);
FillResult qvol(const Chain& x);

// Minimum l1 norm of an integral filling: exact best-bound branch-and-bound
// on the LP relaxation, branching on the most fractional net coefficient
// (ties to the lexicographically smallest candidate), incumbent seeded by
// the coning bound.  Deterministic.  Requires x integral.
Rational zvol_value(const Chain& x);
FillResult zvol(const Chain& x);

// A chain is taut when it is an optimal filling of its own boundary.
bool is_taut(const Chain& m);           // integral chains, against zvol
bool is_taut_rational(const Chain& m);  // against qvol

struct ConeCheckReport {
  bool ok = true;
  // Vertices whose incident terms form a complete cone (their deleted
  // neighbourhood is closed); a taut chain has none.
  std::vector<VertexId> complete_cone_vertices;
};
ConeCheckReport verify_no_complete_cone(const Chain& m);

struct InternalVertexReport {
  bool ok = true;
  std::vector<VertexId> internal_vertices;  // vert(m) minus vert(boundary(m))
};
InternalVertexReport verify_no_internal_vertex(const Chain& m);

struct SubtautReport {
  int trials = 0;
  int failures = 0;
  struct Failure {
    Chain sub;
    Rational norm;
    Rational optimum;
  };
  std::vector<Failure> details;
  bool ok() const { return failures == 0; }
};

// Samples random sub-multisets u of the integral chain m (same-sign partial
// coefficients, so |m| = |u| + |m-u|) and checks each is taut.  Seeded and
// deterministic.
SubtautReport verify_subtaut(const Chain& m, int trials, unsigned seed = 1);

}  // namespace tautfill

#endif
