#include "tautfill/lp.hpp"

#include <stdexcept>

namespace tautfill {

namespace {

// dst -= f * src over all columns, with raw mpq calls to avoid temporaries
// in the pivot hot loop.
void row_axpy(std::vector<Rational>& dst, const Rational& f,
              const std::vector<Rational>& src, Rational& tmp) {
  const std::size_t n = src.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (mpq_sgn(src[k].get_mpq_t()) == 0) continue;
    mpq_mul(tmp.get_mpq_t(), f.get_mpq_t(), src[k].get_mpq_t());
    mpq_sub(dst[k].get_mpq_t(), dst[k].get_mpq_t(), tmp.get_mpq_t());
  }
}

struct Tableau {
  // Columns 0..n_struct-1 structural, n_struct..n_total-1 artificial,
  // column n_total is the right-hand side.
  std::size_t n_struct, n_total;
  std::vector<std::vector<Rational>> t;
  std::vector<Rational> obj1, obj2;  // reduced-cost rows; last entry = -value
  std::vector<int> basis;
  long pivots = 0;
  Rational tmp, factor, inv;

  void pivot(std::size_t r, std::size_t j) {
    auto& prow = t[r];
    if (prow[j] != 1) {
      inv = 1 / prow[j];
      for (auto& v : prow) {
        if (mpq_sgn(v.get_mpq_t()) == 0) continue;
        mpq_mul(v.get_mpq_t(), v.get_mpq_t(), inv.get_mpq_t());
      }
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i == r || mpq_sgn(t[i][j].get_mpq_t()) == 0) continue;
      factor = t[i][j];
      row_axpy(t[i], factor, prow, tmp);
    }
    if (mpq_sgn(obj1[j].get_mpq_t()) != 0) {
      factor = obj1[j];
      row_axpy(obj1, factor, prow, tmp);
    }
    if (mpq_sgn(obj2[j].get_mpq_t()) != 0) {
      factor = obj2[j];
      row_axpy(obj2, factor, prow, tmp);
    }
    basis[r] = static_cast<int>(j);
    ++pivots;
  }

  // Bland's rule over the given objective row, entering columns < limit.
  // Returns false when an entering column exists but no row bounds it.
  bool optimize(std::vector<Rational>& obj, std::size_t limit) {
    for (;;) {
      std::size_t enter = limit;
      for (std::size_t j = 0; j < limit; ++j)
        if (mpq_sgn(obj[j].get_mpq_t()) < 0) {
          enter = j;
          break;
        }
      if (enter == limit) return true;

      std::size_t leave = t.size();
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (mpq_sgn(t[i][enter].get_mpq_t()) <= 0) continue;
        if (leave == t.size()) {
          leave = i;
          continue;
        }
        // Compare rhs[i]/t[i][enter] with rhs[leave]/t[leave][enter].
        Rational lhs = t[i][n_total] * t[leave][enter];
        Rational rhs = t[leave][n_total] * t[i][enter];
        if (lhs < rhs || (lhs == rhs && basis[i] < basis[leave])) leave = i;
      }
      if (leave == t.size()) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpSolution solve_lp(const LpProblem& p) {
  const std::size_t m = p.rows(), n = p.cols();
  if (p.b.size() != m) throw std::invalid_argument("lp: b size mismatch");
  for (const auto& row : p.a)
    if (row.size() != n) throw std::invalid_argument("lp: row size mismatch");

  Tableau tb;
  tb.n_struct = n;
  tb.n_total = n + m;
  tb.t.assign(m, std::vector<Rational>(tb.n_total + 1, Rational(0)));
  tb.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    bool neg = p.b[i] < 0;
    for (std::size_t j = 0; j < n; ++j)
      tb.t[i][j] = neg ? Rational(-p.a[i][j]) : p.a[i][j];
    tb.t[i][n + i] = 1;
    tb.t[i][tb.n_total] = neg ? Rational(-p.b[i]) : p.b[i];
    tb.basis[i] = static_cast<int>(n + i);
  }
  // Phase-1 reduced costs for the all-artificial basis.
  tb.obj1.assign(tb.n_total + 1, Rational(0));
  for (std::size_t j = 0; j <= tb.n_total; ++j) {
    if (j >= n && j < tb.n_total) continue;
    Rational s = 0;
    for (std::size_t i = 0; i < m; ++i) s += tb.t[i][j];
    tb.obj1[j] = -s;
  }
  tb.obj2.assign(tb.n_total + 1, Rational(0));
  for (std::size_t j = 0; j < n; ++j) tb.obj2[j] = p.c[j];

  LpSolution sol;
  if (!tb.optimize(tb.obj1, tb.n_total))
    throw std::logic_error("lp: phase 1 unbounded");
  if (tb.obj1[tb.n_total] != 0) {
    sol.status = LpStatus::infeasible;
    sol.pivots = tb.pivots;
    return sol;
  }

  // Drive basic artificials out; rows that cannot pivot are redundant.
  std::vector<std::size_t> redundant;
  for (std::size_t i = 0; i < tb.t.size(); ++i) {
    if (tb.basis[i] < static_cast<int>(n)) continue;
    std::size_t j = n;
    for (std::size_t k = 0; k < n; ++k)
      if (mpq_sgn(tb.t[i][k].get_mpq_t()) != 0) {
        j = k;
        break;
      }
    if (j < n)
      tb.pivot(i, j);
    else
      redundant.push_back(i);
  }
  for (auto it = redundant.rbegin(); it != redundant.rend(); ++it) {
    tb.t.erase(tb.t.begin() + static_cast<long>(*it));
    tb.basis.erase(tb.basis.begin() + static_cast<long>(*it));
  }

  if (!tb.optimize(tb.obj2, n)) {
    sol.status = LpStatus::unbounded;
    sol.pivots = tb.pivots;
    return sol;
  }

  sol.status = LpStatus::optimal;
  sol.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < tb.t.size(); ++i)
    sol.x[static_cast<std::size_t>(tb.basis[i])] = tb.t[i][tb.n_total];
  sol.value = 0;
  for (std::size_t j = 0; j < n; ++j)
    if (sol.x[j] != 0) sol.value += p.c[j] * sol.x[j];
  if (sol.value != -tb.obj2[tb.n_total])
    throw std::logic_error("lp: objective bookkeeping mismatch");
  sol.pivots = tb.pivots;
  return sol;
}

}  // namespace tautfill
