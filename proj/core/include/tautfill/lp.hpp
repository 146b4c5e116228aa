#ifndef TAUTFILL_LP_HPP
#define TAUTFILL_LP_HPP

#include <vector>

#include "tautfill/rational.hpp"

namespace tautfill {

// Equality-form linear program over exact rationals:
//   minimize c.x  subject to  a x = b,  x >= 0.
struct LpProblem {
  std::vector<std::vector<Rational>> a;  // rows x cols
  std::vector<Rational> b;               // rows
  std::vector<Rational> c;               // cols

  std::size_t rows() const { return a.size(); }
  std::size_t cols() const { return c.size(); }
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  Rational value;
  std::vector<Rational> x;
  long pivots = 0;
};

// Two-phase dense-tableau primal simplex with Bland's anti-cycling rule
// (entering variable: smallest index with negative reduced cost; leaving
// variable: minimum ratio, ties by smallest basis index).  Exact and
// deterministic; terminates on every input.
LpSolution solve_lp(const LpProblem& p);

}  // namespace tautfill

#endif
