#ifndef TAUTFILL_RATIONAL_HPP
#define TAUTFILL_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace tautfill {

// Exact arbitrary-precision rationals; every comparison in the library is exact.
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Largest integer <= q and smallest integer >= q.
BigInt rat_floor(const Rational& q);
BigInt rat_ceil(const Rational& q);

// "3", "-2", "1/3", "-5/7" (canonical form, denominator omitted when 1).
std::string rat_str(const Rational& q);

// Inverse of rat_str; throws std::invalid_argument on malformed input.
Rational rat_parse(const std::string& s);

}  // namespace tautfill

#endif
