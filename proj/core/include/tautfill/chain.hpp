#ifndef TAUTFILL_CHAIN_HPP
#define TAUTFILL_CHAIN_HPP

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "tautfill/rational.hpp"

namespace tautfill {

using VertexId = int;

// Strictly increasing vertex tuple; the canonical key of an oriented simplex.
using VertexTuple = std::vector<VertexId>;

// An oriented simplex stored canonically: sorted vertices plus a sign
// recording the parity of the permutation that sorted them.
struct OrientedSimplex {
  VertexTuple vertices;  // strictly increasing
  int sign = 1;          // +1 or -1

  int dimension() const { return static_cast<int>(vertices.size()) - 1; }

  // Canonicalizes an arbitrary tuple; nullopt if a vertex repeats
  // (a degenerate simplex, which every chain drops).
  static std::optional<OrientedSimplex> from_vertices(
      std::span<const VertexId> verts);

  friend bool operator==(const OrientedSimplex&,
                         const OrientedSimplex&) = default;
};

// Formal rational linear combination of oriented simplices of one dimension.
// Terms are keyed by sorted tuple, so iteration order is lexicographic and
// all derived output is deterministic.
class Chain {
 public:
  explicit Chain(int dimension);

  int dimension() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  const std::map<VertexTuple, Rational>& terms() const { return terms_; }

  // Coefficient of the canonical (sorted) tuple; zero if absent.
  Rational coefficient(const VertexTuple& sorted) const;

  // Adds coeff * (oriented simplex given by verts), canonicalizing the tuple
  // and accumulating into any existing term.  Degenerate tuples are ignored.
  void add_term(std::span<const VertexId> verts, const Rational& coeff);
  void add_term(std::initializer_list<VertexId> verts, const Rational& coeff);

  bool is_integral() const;

  Chain& operator+=(const Chain& rhs);
  Chain& operator-=(const Chain& rhs);
  Chain& operator*=(const Rational& s);

  friend Chain operator+(Chain lhs, const Chain& rhs) { return lhs += rhs; }
  friend Chain operator-(Chain lhs, const Chain& rhs) { return lhs -= rhs; }
  friend Chain operator*(const Rational& s, Chain c) { return c *= s; }
  friend Chain operator-(Chain c);

  friend bool operator==(const Chain&, const Chain&) = default;

  std::string str() const;  // e.g. "[0,1,2] - [0,1,3]", terms in lex order

 private:
  int dim_;
  std::map<VertexTuple, Rational> terms_;
};

// Simplicial boundary with alternating signs.  Throws std::domain_error on
// dimension-0 chains: no boundary defined below dimension 0.
Chain boundary(const Chain& c);

// l1 norm: sum of absolute coefficient values.
Rational l1_norm(const Chain& c);

// Vertices appearing in some term.
std::set<VertexId> vert(const Chain& c);

// nbhd(x, c): the terms of c containing x, with x deleted from each tuple
// (sign adjusted so that the tuple is read with x removed in place).
Chain nbhd(VertexId x, const Chain& c);

// deg(x, c) = |nbhd(x, c)|.
Rational deg(VertexId x, const Chain& c);

// Max of deg over vert(c); zero for the zero chain.
Rational maxdeg(const Chain& c);

// cone(x, c): each term not containing x gains x as a new first vertex;
// terms containing x are dropped.  For a closed chain c (boundary zero),
// boundary(cone(x, c)) == c; in general
// boundary(cone(x, c)) == c - cone(x, boundary(c)).
Chain cone(VertexId x, const Chain& c);

// Simplicial projection onto the vertex set A: vertices outside A map to the
// basepoint p, and terms whose image degenerates are dropped.  Requires
// p in A; throws std::invalid_argument otherwise.
Chain project(const Chain& c, const std::set<VertexId>& A, VertexId p);

}  // namespace tautfill

#endif
