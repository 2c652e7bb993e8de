#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

#include "sdalab/rigorous/ball.hpp"

namespace sdalab::rigorous {

class RigorousReal;

// Closed interval with MPFR endpoints and outward rounding; used for the
// transcendental quantities (logarithms, real powers) that the rational
// enclosures of RigorousReal cannot express.
class Interval {
 public:
  static constexpr mpfr_prec_t kDefaultPrecision = 192;

  explicit Interval(mpfr_prec_t prec = kDefaultPrecision);
  explicit Interval(double exact, mpfr_prec_t prec = kDefaultPrecision);
  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;
  ~Interval();

  static Interval point(const mpq_class& q, mpfr_prec_t prec = kDefaultPrecision);
  static Interval hull(const mpq_class& lo, const mpq_class& hi, mpfr_prec_t prec = kDefaultPrecision);
  static Interval from_ball(const Ball& b, mpfr_prec_t prec = kDefaultPrecision);
  // Encloses x after refining it to roughly the interval precision.
  static Interval from_real(const RigorousReal& x, mpfr_prec_t prec = kDefaultPrecision);

  mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }
  // Endpoints rounded outward to double.
  double lower() const;
  double upper() const;
  double mid() const;
  double width() const;
  bool is_finite() const;

  bool contains(double x) const;
  bool contains_zero() const;
  // hi(this) < lo(other), certified.
  bool certainly_less(const Interval& other) const;
  // hi(this) <= lo(other), certified.
  bool certainly_le(const Interval& other) const;

  std::string to_string(int digits = 17) const;
  // Midpoint with the given number of significant digits.
  std::string to_decimal(int digits = 15) const;

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a);
  friend Interval abs(const Interval& a);
  friend Interval log(const Interval& a);
  friend Interval exp(const Interval& a);
  // base > 0
  friend Interval pow(const Interval& base, const Interval& exponent);
  friend Interval max(const Interval& a, const Interval& b);
  friend Interval min(const Interval& a, const Interval& b);
  friend Interval hull(const Interval& a, const Interval& b);

  const __mpfr_struct* lo() const { return lo_; }
  const __mpfr_struct* hi() const { return hi_; }

 private:
  mpfr_t lo_;
  mpfr_t hi_;
};

}  // namespace sdalab::rigorous
