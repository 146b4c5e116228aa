#ifndef TAUTFILL_ORACLE_HPP
#define TAUTFILL_ORACLE_HPP

#include <vector>

#include "tautfill/chain.hpp"

namespace tautfill {

// Exhaustive search is exponential in the candidate count, so the oracle
// refuses instances with more vertices than this.
inline constexpr int kOracleVertexCap = 7;

struct OracleResult {
  bool found = false;  // false: no filling within the coefficient bound
  long value = -1;
  long search_bound = -1;  // norm cap used (the coning bound)
  std::vector<Chain> optimal_fillings;  // populated when collect_all
};

// Independent brute-force minimum-norm integral filling of the closed
// integral chain x: depth-first over all (dim+2)-subsets of vert(x) in
// lexicographic order, coefficients tried in order 0, +1, -1, ..., with
// residual-boundary and norm pruning.  Deterministic.
//
// Throws std::invalid_argument on: open or non-integral x, more than
// kOracleVertexCap vertices, coeff_bound < 1.
OracleResult oracle_zvol(const Chain& x, int coeff_bound = 1,
                         bool collect_all = false);

// All optimal fillings of x within the coefficient bound, i.e. every
// integral filling of norm oracle_zvol(x).value.
std::vector<Chain> enumerate_taut(const Chain& x, int coeff_bound = 1);

}  // namespace tautfill

#endif
