#ifndef TAUTFILL_ADU_HPP
#define TAUTFILL_ADU_HPP

#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tautfill/chain.hpp"
#include "tautfill/sphere.hpp"

namespace tautfill {

class SplitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two n-cycles X on vertex set A and Y on vertex set B whose overlap
// C = A cap B has at most n+1 vertices.  When C would be empty, make()
// adjoins one fresh vertex to both sides so projection basepoints exist;
// the cycles are untouched.
struct AduWitness {
  Chain x{2};
  Chain y{2};
  std::set<VertexId> a;
  std::set<VertexId> b;
  std::set<VertexId> c;  // a intersect b

  int dimension() const { return x.dimension(); }
  Chain sum() const;

  // Default projection basepoints: the two smallest vertices of C, or the
  // single one twice when |C| = 1.
  std::pair<VertexId, VertexId> default_basepoints() const;

  // A = Vert(X), B = Vert(Y).
  static AduWitness make(const Chain& x, const Chain& y);
  // Explicit vertex sets; they must contain the supports.
  static AduWitness make(const Chain& x, std::set<VertexId> a, const Chain& y,
                         std::set<VertexId> b);
};

// Witness for the two sides of a connected sum: X and Y are the summand
// orientation cycles, sharing exactly the glued triangle.
AduWitness witness_from_sum(const ConnectedSum& sum);

// Witness for two spheres made vertex disjoint: s2 is relabeled above the
// labels of s1 and the overlap is the fresh basepoint vertex only.
AduWitness disjoint_witness(const SphereTriangulation& s1,
                            const SphereTriangulation& s2);

// Vertex counts of a simplex relative to a witness: in C, in A minus C,
// in B minus C.  A simplex is hybrid when it meets both A minus C and
// B minus C; hybrids cannot occur in taut fillings of X + Y.
struct TetType {
  int c = 0;
  int x = 0;
  int y = 0;

  bool hybrid() const { return x > 0 && y > 0; }
  std::string label() const;  // e.g. "CXXY"

  bool operator==(const TetType&) const = default;
  auto operator<=>(const TetType&) const = default;
};

// Throws std::invalid_argument when a vertex lies outside A union B.
TetType classify_simplex(const AduWitness& w, std::span<const VertexId> verts);

// Type label -> number of terms of the chain with that label.
std::map<std::string, int> type_histogram(const Chain& m, const AduWitness& w);

// The pair (pi_{A,p}(m), pi_{B,q}(m)).  Requires p, q in C, distinct when
// |C| >= 2.
std::pair<Chain, Chain> g_split(const Chain& m, const AduWitness& w,
                                VertexId p, VertexId q);

struct SplitPieces {
  Chain m_x{3};  // terms supported in A
  Chain m_y{3};  // terms supported in B
};

// Splits a taut filling m of X + Y into fillings of X and Y by term type.
// Throws SplitError on a hybrid term or when a piece fails to fill its
// cycle, either of which disproves the claimed tautness.
SplitPieces split_taut(const Chain& m, const AduWitness& w);

struct AdditivityReport {
  Rational vol_x;    // zvol(X)
  Rational vol_y;    // zvol(Y)
  Rational vol_sum;  // zvol(X + Y)
  bool additive = false;

  Chain m{3};  // taut filling of X + Y found by the solver
  Chain m_x{3};
  Chain m_y{3};
  Rational norm_x;  // |m_x|, a filling of X so >= vol_x
  Rational norm_y;
  bool split_ok = false;  // split succeeded and norms account for vol_sum
  std::string note;       // failure detail, empty when ok

  bool ok() const { return additive && split_ok; }
  std::string describe() const;
};

// Computes the three integral volumes, splits the taut optimum, and checks
// the chain of comparisons |m| = |m_x| + |m_y| >= zvol(X) + zvol(Y) that
// collapses to equalities.
AdditivityReport additivity_check(const AduWitness& w);

struct QAdditivityReport {
  Rational qvol_x;
  Rational qvol_y;
  Rational qvol_sum;
  bool additive = false;

  BigInt q = 1;         // denominator-clearing multiplier
  Rational zvol_scaled;  // zvol(q (X + Y))
  bool clearing_ok = false;  // zvol_scaled == q * qvol_sum

  Chain m_x{3};  // rational fillings of X and Y recovered from the
  Chain m_y{3};  // split of the cleared optimum, divided back by q
  bool split_ok = false;
  std::string note;  // failure detail, empty when ok

  bool ok() const { return additive && clearing_ok && split_ok; }
  std::string describe() const;
};

// Rational volumes add as well: clear denominators of a rational optimum,
// split the resulting taut integral filling, and scale back.
QAdditivityReport qvol_additivity_check(const AduWitness& w);

}  // namespace tautfill

#endif
