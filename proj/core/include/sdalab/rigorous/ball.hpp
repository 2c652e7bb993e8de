#pragma once

#include <gmpxx.h>

namespace sdalab::rigorous {

// Closed rational enclosure [mid - rad, mid + rad]. An unbounded ball stands
// for "no information yet" (for instance a quotient whose divisor enclosure
// still straddles zero).
struct Ball {
  mpq_class mid = 0;
  mpq_class rad = 0;
  bool bounded = true;

  static Ball exact(const mpq_class& q) { return Ball{q, 0, true}; }
  static Ball from_bounds(const mpq_class& lo, const mpq_class& hi);
  static Ball unbounded() { return Ball{0, 0, false}; }

  mpq_class lower() const { return mid - rad; }
  mpq_class upper() const { return mid + rad; }
  bool is_exact() const { return bounded && sgn(rad) == 0; }
  bool contains(const mpq_class& q) const;
  bool contains_zero() const { return contains(mpq_class(0)); }
  // rad <= 2^-bits * max(1, |mid|)
  bool meets(long bits) const;
};

bool disjoint(const Ball& a, const Ball& b);
// Returns the intersection; both arguments must enclose the same value.
Ball intersect(const Ball& a, const Ball& b);

Ball operator+(const Ball& a, const Ball& b);
Ball operator-(const Ball& a, const Ball& b);
Ball operator-(const Ball& a);
Ball mul(const Ball& a, const Ball& b, long bits);
Ball div(const Ball& a, const Ball& b, long bits);
Ball abs(const Ball& a);
Ball max(const Ball& a, const Ball& b);
Ball min(const Ball& a, const Ball& b);
Ball sqrt(const Ball& a, long bits);
Ball scale(const Ball& a, const mpz_class& k);

// Rounds the midpoint onto the grid 2^-bits and widens the radius by the
// rounding error.
Ball round(const Ball& a, long bits);

// 2^-bits as a rational.
mpq_class pow2_neg(long bits);

}  // namespace sdalab::rigorous
