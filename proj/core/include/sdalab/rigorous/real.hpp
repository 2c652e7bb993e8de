#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "sdalab/rigorous/ball.hpp"

namespace sdalab::rigorous {

enum class Ordering { Less, Greater, Indistinguishable };

inline constexpr long kStartBits = 64;
inline constexpr long kDefaultPrecisionCap = 1L << 16;

// Hard cap for precision escalation. Reads SDALAB_PRECISION_CAP once; falls
// back to 2^16 bits.
long default_precision_cap();

namespace detail {
class Node;
struct Access;
}

// An exactly described real number together with a rational enclosure of it.
//
// The descriptor is one of: an exact rational, a real algebraic number given
// by an integer polynomial and an isolating interval, a decimal literal
// (which carries half a unit in the last digit of uncertainty), or an
// arithmetic expression over these. Values are immutable; refine() returns a
// new value with a tighter enclosure. Copies share the descriptor.
class RigorousReal {
 public:
  RigorousReal();
  static RigorousReal rational(const mpq_class& q);
  static RigorousReal integer(const mpz_class& z);
  // Throws NoSignChange when [lo, hi] does not isolate exactly one root and
  // NotSquareFree when a repeated root lies in the interval.
  static RigorousReal algebraic(std::span<const mpz_class> minpoly, const mpq_class& lo,
                                const mpq_class& hi);
  // Accepts [+-]digits[.digits][e[+-]digits].
  static RigorousReal decimal(std::string_view literal);

  const Ball& enclosure() const noexcept { return ball_; }
  long precision() const noexcept { return bits_; }

  // Exact rational value when the descriptor is a rational leaf.
  std::optional<mpq_class> exact_value() const;
  // True when some leaf is a decimal literal, whose enclosure cannot shrink.
  bool has_inexact_literal() const;

  double to_double() const;
  // Midpoint printed with the given number of significant digits (%.Ng).
  std::string to_decimal(int significant_digits = 15) const;

  friend RigorousReal operator+(const RigorousReal& a, const RigorousReal& b);
  friend RigorousReal operator-(const RigorousReal& a, const RigorousReal& b);
  friend RigorousReal operator*(const RigorousReal& a, const RigorousReal& b);
  friend RigorousReal operator/(const RigorousReal& a, const RigorousReal& b);
  friend RigorousReal operator-(const RigorousReal& a);
  friend RigorousReal abs(const RigorousReal& a);
  friend RigorousReal sqrt(const RigorousReal& a);
  friend RigorousReal max(const RigorousReal& a, const RigorousReal& b);
  friend RigorousReal min(const RigorousReal& a, const RigorousReal& b);

  friend RigorousReal refine(const RigorousReal& x, long bits, long cap);
  friend Ball enclose(const RigorousReal& x, long bits);

 private:
  friend struct detail::Access;
  RigorousReal(std::shared_ptr<const detail::Node> node, Ball ball, long bits);

  std::shared_ptr<const detail::Node> node_;
  Ball ball_;
  long bits_ = 0;
};

// Enclosure with radius <= 2^-bits * max(1, |mid|). Throws
// PrecisionCapExceeded when bits > cap, or when an exactly described value
// cannot reach the target below the cap. Values depending on decimal
// literals stop at the literal's own uncertainty without error.
RigorousReal refine(const RigorousReal& x, long bits, long cap = default_precision_cap());

// Enclosure at working precision `bits` without escalation, intersected with
// the current enclosure of x.
Ball enclose(const RigorousReal& x, long bits);

// LESS/GREATER once the enclosures separate at some precision <= cap, else
// INDISTINGUISHABLE. Precision doubles from 64 bits.
Ordering compare(const RigorousReal& x, const RigorousReal& y, long cap = default_precision_cap());
// Sign of x certified up to cap: -1, +1, or 0 when zero cannot be excluded.
int certified_sign(const RigorousReal& x, long cap = default_precision_cap());

}  // namespace sdalab::rigorous
