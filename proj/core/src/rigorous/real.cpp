#include "sdalab/rigorous/real.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <vector>

#include "sdalab/error.hpp"
#include "sdalab/rigorous/polynomial.hpp"

namespace sdalab::rigorous {

// ---------------------------------------------------------------------------
// Ball arithmetic

mpq_class pow2_neg(long bits) {
  mpq_class r = 1;
  if (bits >= 0)
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(bits));
  else
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-bits));
  return r;
}

Ball Ball::from_bounds(const mpq_class& lo, const mpq_class& hi) {
  mpq_class mid = (lo + hi) / 2;
  mpq_class rad = (hi - lo) / 2;
  return Ball{mid, rad, true};
}

bool Ball::contains(const mpq_class& q) const {
  if (!bounded) return true;
  return lower() <= q && q <= upper();
}

bool Ball::meets(long bits) const {
  if (!bounded) return false;
  mpq_class scale = abs(mid);
  if (scale < 1) scale = 1;
  return rad <= pow2_neg(bits) * scale;
}

bool disjoint(const Ball& a, const Ball& b) {
  if (!a.bounded || !b.bounded) return false;
  return a.upper() < b.lower() || b.upper() < a.lower();
}

Ball intersect(const Ball& a, const Ball& b) {
  if (!a.bounded) return b;
  if (!b.bounded) return a;
  const mpq_class lo = std::max(a.lower(), b.lower());
  const mpq_class hi = std::min(a.upper(), b.upper());
  if (hi < lo) return a.rad <= b.rad ? a : b;  // unreachable for sound inputs
  if (a.rad <= b.rad && a.lower() >= lo && a.upper() <= hi) return a;
  return Ball::from_bounds(lo, hi);
}

Ball operator+(const Ball& a, const Ball& b) {
  if (!a.bounded || !b.bounded) return Ball::unbounded();
  return Ball{a.mid + b.mid, a.rad + b.rad, true};
}

Ball operator-(const Ball& a, const Ball& b) {
  if (!a.bounded || !b.bounded) return Ball::unbounded();
  return Ball{a.mid - b.mid, a.rad + b.rad, true};
}

Ball operator-(const Ball& a) { return Ball{-a.mid, a.rad, a.bounded}; }

Ball round(const Ball& a, long bits) {
  if (!a.bounded || a.mid.get_den() == 1) return a;
  mpz_class scaled = a.mid.get_num();
  if (bits >= 0)
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), a.mid.get_den_mpz_t());
  mpq_class rounded(q);
  rounded *= pow2_neg(bits);
  Ball r{rounded, a.rad + abs(a.mid - rounded), true};
  return r;
}

Ball mul(const Ball& a, const Ball& b, long bits) {
  if (!a.bounded || !b.bounded) return Ball::unbounded();
  Ball r{a.mid * b.mid, abs(a.mid) * b.rad + abs(b.mid) * a.rad + a.rad * b.rad, true};
  return round(r, bits);
}

Ball div(const Ball& a, const Ball& b, long bits) {
  if (!a.bounded || !b.bounded || b.contains_zero()) return Ball::unbounded();
  const mpq_class alo = a.lower(), ahi = a.upper(), blo = b.lower(), bhi = b.upper();
  const mpq_class c[4] = {alo / blo, alo / bhi, ahi / blo, ahi / bhi};
  const mpq_class lo = *std::min_element(c, c + 4);
  const mpq_class hi = *std::max_element(c, c + 4);
  return round(Ball::from_bounds(lo, hi), bits);
}

Ball abs(const Ball& a) {
  if (!a.bounded) return a;
  if (a.lower() >= 0) return a;
  if (a.upper() <= 0) return -a;
  const mpq_class h = std::max(abs(a.lower()), abs(a.upper()));
  return Ball{h / 2, h / 2, true};
}

Ball max(const Ball& a, const Ball& b) {
  if (!a.bounded || !b.bounded) return Ball::unbounded();
  if (a.lower() >= b.upper()) return a;
  if (b.lower() >= a.upper()) return b;
  return Ball::from_bounds(std::max(a.lower(), b.lower()), std::max(a.upper(), b.upper()));
}

Ball min(const Ball& a, const Ball& b) { return -max(-a, -b); }

Ball scale(const Ball& a, const mpz_class& k) {
  if (!a.bounded) return a;
  return Ball{a.mid * k, a.rad * abs(k), true};
}

namespace {

// floor(sqrt(q * 4^s)) and ceil of the same, returned as integers.
mpz_class scaled_sqrt(const mpq_class& q, long s, bool round_up) {
  mpz_class num = q.get_num();
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(2 * s));
  mpz_class t;
  if (round_up)
    mpz_cdiv_q(t.get_mpz_t(), num.get_mpz_t(), q.get_den_mpz_t());
  else
    mpz_fdiv_q(t.get_mpz_t(), num.get_mpz_t(), q.get_den_mpz_t());
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), t.get_mpz_t());
  if (round_up && r * r < t) ++r;
  return r;
}

}  // namespace

Ball sqrt(const Ball& a, long bits) {
  if (!a.bounded) return a;
  if (a.upper() < 0) return Ball::unbounded();
  mpq_class lo = a.lower();
  if (lo < 0) lo = 0;
  const long s = std::max(bits, 8L);
  const mpq_class unit = pow2_neg(s);
  const mpq_class l = mpq_class(scaled_sqrt(lo, s, false)) * unit;
  const mpq_class h = mpq_class(scaled_sqrt(a.upper(), s, true)) * unit;
  return Ball::from_bounds(l, h);
}

// ---------------------------------------------------------------------------
// Descriptor nodes

namespace detail {

class Node {
 public:
  explicit Node(bool has_floor) : has_floor_(has_floor) {}
  virtual ~Node() = default;
  // Enclosure at working precision w: leaves deliver radius
  // <= 2^-w * max(1, |value|); interior nodes propagate.
  virtual Ball eval(long w) const = 0;
  virtual const mpq_class* exact() const { return nullptr; }
  bool has_floor() const { return has_floor_; }

 private:
  bool has_floor_;
};

namespace {

class RationalNode final : public Node {
 public:
  explicit RationalNode(mpq_class q) : Node(false), q_(std::move(q)) { q_.canonicalize(); }
  Ball eval(long) const override { return Ball::exact(q_); }
  const mpq_class* exact() const override { return &q_; }

 private:
  mpq_class q_;
};

class DecimalNode final : public Node {
 public:
  DecimalNode(mpq_class value, mpq_class rad) : Node(true), ball_{std::move(value), std::move(rad), true} {}
  Ball eval(long) const override { return ball_; }

 private:
  Ball ball_;
};

// Isolating interval refined in place by quadratic interval refinement: a
// secant step predicts a subinterval of width w/N, which is accepted when a
// sign change is confirmed (then N is squared) and otherwise replaced by a
// bisection (then N is square-rooted).
class AlgebraicNode final : public Node {
 public:
  AlgebraicNode(Polynomial p, mpq_class lo, mpq_class hi)
      : Node(false), p_(std::move(p)), lo_(std::move(lo)), hi_(std::move(hi)) {
    sign_lo_ = p_.sign_at(lo_);
  }

  Ball eval(long w) const override {
    std::lock_guard lock(mutex_);
    const mpq_class target = pow2_neg(w + 1);
    for (;;) {
      mpq_class scale = std::max(abs(lo_), abs(hi_));
      if (scale < 1) scale = 1;
      if (hi_ - lo_ <= target * scale) break;
      step();
    }
    return Ball::from_bounds(lo_, hi_);
  }

 private:
  void collapse(const mpq_class& root) const {
    lo_ = root;
    hi_ = root;
  }

  void step() const {
    const mpq_class width = hi_ - lo_;
    const mpq_class n = mpq_class(mpz_class(1) << static_cast<mp_bitcnt_t>(log2_n_));
    const mpq_class plo = p_(lo_);
    const mpq_class phi = p_(hi_);
    const mpq_class secant = plo / (plo - phi);  // in (0, 1)
    mpq_class jq = secant * n + mpq_class(1, 2);
    mpz_class j;
    mpz_fdiv_q(j.get_mpz_t(), jq.get_num_mpz_t(), jq.get_den_mpz_t());
    const mpq_class cell = width / n;
    const mpq_class m = lo_ + mpq_class(j) * cell;
    bool success = false;
    if (m > lo_ && m < hi_) {
      const int sm = p_.sign_at(m);
      if (sm == 0) {
        collapse(m);
        return;
      }
      if (sm == sign_lo_) {
        const mpq_class right = m + cell;
        if (right < hi_) {
          const int sr = p_.sign_at(right);
          if (sr == 0) {
            collapse(right);
            return;
          }
          if (sr != sign_lo_) {
            lo_ = m;
            hi_ = right;
            success = true;
          }
        }
      } else {
        const mpq_class left = m - cell;
        if (left > lo_) {
          const int sl = p_.sign_at(left);
          if (sl == 0) {
            collapse(left);
            return;
          }
          if (sl == sign_lo_) {
            lo_ = left;
            hi_ = m;
            success = true;
          }
        }
      }
    }
    if (success) {
      log2_n_ = std::min(log2_n_ * 2, 1L << 20);
      return;
    }
    const mpq_class mid = (lo_ + hi_) / 2;
    const int s = p_.sign_at(mid);
    if (s == 0) {
      collapse(mid);
      return;
    }
    if (s == sign_lo_)
      lo_ = mid;
    else
      hi_ = mid;
    log2_n_ = std::max(2L, log2_n_ / 2);
  }

  Polynomial p_;
  int sign_lo_ = 0;
  mutable std::mutex mutex_;
  mutable mpq_class lo_;
  mutable mpq_class hi_;
  mutable long log2_n_ = 2;
};

enum class UnaryOp { Neg, Abs, Sqrt };
enum class BinaryOp { Add, Sub, Mul, Div, Max, Min };

class UnaryNode final : public Node {
 public:
  UnaryNode(UnaryOp op, std::shared_ptr<const Node> arg)
      : Node(arg->has_floor()), op_(op), arg_(std::move(arg)) {}

  Ball eval(long w) const override {
    const Ball a = arg_->eval(w + 2);
    switch (op_) {
      case UnaryOp::Neg: return -a;
      case UnaryOp::Abs: return abs(a);
      case UnaryOp::Sqrt: return sqrt(a, w + 4);
    }
    return Ball::unbounded();
  }

 private:
  UnaryOp op_;
  std::shared_ptr<const Node> arg_;
};

class BinaryNode final : public Node {
 public:
  BinaryNode(BinaryOp op, std::shared_ptr<const Node> a, std::shared_ptr<const Node> b)
      : Node(a->has_floor() || b->has_floor()), op_(op), a_(std::move(a)), b_(std::move(b)) {}

  Ball eval(long w) const override {
    const Ball a = a_->eval(w + 2);
    const Ball b = b_->eval(w + 2);
    return combine(op_, a, b, w + 4);
  }

  static Ball combine(BinaryOp op, const Ball& a, const Ball& b, long bits) {
    switch (op) {
      case BinaryOp::Add: return a + b;
      case BinaryOp::Sub: return a - b;
      case BinaryOp::Mul: return mul(a, b, bits);
      case BinaryOp::Div: return div(a, b, bits);
      case BinaryOp::Max: return max(a, b);
      case BinaryOp::Min: return min(a, b);
    }
    return Ball::unbounded();
  }

 private:
  BinaryOp op_;
  std::shared_ptr<const Node> a_;
  std::shared_ptr<const Node> b_;
};

}  // namespace

struct Access {
  static RigorousReal make(std::shared_ptr<const Node> node, Ball ball, long bits) {
    return RigorousReal(std::move(node), std::move(ball), bits);
  }
  static const std::shared_ptr<const Node>& node(const RigorousReal& x) { return x.node_; }
};

}  // namespace detail

// ---------------------------------------------------------------------------
// RigorousReal

long default_precision_cap() {
  static const long cap = [] {
    if (const char* env = std::getenv("SDALAB_PRECISION_CAP")) {
      char* end = nullptr;
      const long v = std::strtol(env, &end, 10);
      if (end != env && v >= kStartBits) return v;
    }
    return kDefaultPrecisionCap;
  }();
  return cap;
}

RigorousReal::RigorousReal() : RigorousReal(rational(0)) {}

RigorousReal::RigorousReal(std::shared_ptr<const detail::Node> node, Ball ball, long bits)
    : node_(std::move(node)), ball_(std::move(ball)), bits_(bits) {}

RigorousReal RigorousReal::rational(const mpq_class& q) {
  auto node = std::make_shared<detail::RationalNode>(q);
  Ball b = Ball::exact(*node->exact());
  return RigorousReal(std::move(node), std::move(b), kDefaultPrecisionCap);
}

RigorousReal RigorousReal::integer(const mpz_class& z) { return rational(mpq_class(z)); }

RigorousReal RigorousReal::algebraic(std::span<const mpz_class> minpoly, const mpq_class& lo,
                                     const mpq_class& hi) {
  const Polynomial p = Polynomial::from_integers(minpoly);
  if (p.degree() < 1) fail(Errc::NoSignChange, "algebraic: polynomial must have degree >= 1");
  mpq_class a = lo, b = hi;
  a.canonicalize();
  b.canonicalize();
  if (a > b) std::swap(a, b);
  const int sa = p.sign_at(a);
  const int sb = p.sign_at(b);
  if (sa == 0 || sb == 0 || sa == sb)
    fail(Errc::NoSignChange, "algebraic: polynomial does not change sign on the interval");
  const Polynomial g = gcd(p, p.derivative());
  if (g.degree() >= 1 && count_roots(g, a, b) > 0)
    fail(Errc::NotSquareFree, "algebraic: polynomial has a repeated root in the interval");
  if (count_roots(p, a, b) != 1)
    fail(Errc::NoSignChange, "algebraic: interval contains more than one root");
  auto node = std::make_shared<detail::AlgebraicNode>(p, a, b);
  Ball ball = Ball::from_bounds(a, b);
  return RigorousReal(std::move(node), std::move(ball), 0);
}

RigorousReal RigorousReal::decimal(std::string_view literal) {
  std::size_t i = 0;
  bool negative = false;
  if (i < literal.size() && (literal[i] == '+' || literal[i] == '-')) negative = literal[i++] == '-';
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  bool any_digit = false;
  for (; i < literal.size(); ++i) {
    const char c = literal[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      any_digit = true;
      if (seen_point) ++frac_digits;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  long exponent = 0;
  if (i < literal.size() && (literal[i] == 'e' || literal[i] == 'E')) {
    ++i;
    const std::string rest(literal.substr(i));
    char* end = nullptr;
    exponent = std::strtol(rest.c_str(), &end, 10);
    if (end == rest.c_str()) i = std::string_view::npos;
    else i += static_cast<std::size_t>(end - rest.c_str());
  }
  if (!any_digit || i != literal.size())
    fail(Errc::SchemaError, "malformed decimal literal '" + std::string(literal) + "'");
  const long scale10 = exponent - frac_digits;
  mpz_class mant(digits, 10);
  if (negative) mant = -mant;
  mpz_class p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(scale10)));
  mpq_class value = scale10 >= 0 ? mpq_class(mant * p10) : mpq_class(mant, p10);
  value.canonicalize();
  mpq_class ulp = scale10 >= 0 ? mpq_class(p10) : mpq_class(1, p10);
  ulp.canonicalize();
  auto node = std::make_shared<detail::DecimalNode>(value, ulp / 2);
  Ball ball{value, ulp / 2, true};
  return RigorousReal(std::move(node), std::move(ball), kDefaultPrecisionCap);
}

std::optional<mpq_class> RigorousReal::exact_value() const {
  if (const mpq_class* q = node_->exact()) return *q;
  return std::nullopt;
}

bool RigorousReal::has_inexact_literal() const { return node_->has_floor(); }

namespace {

// Refined to `digits` significant decimal digits where the cap allows.
RigorousReal refined_for_output(const RigorousReal& x, int digits) {
  long bits = static_cast<long>(digits * 3.33) + 16;
  const Ball& b = x.enclosure();
  if (b.bounded && sgn(b.mid) != 0) {
    const long e = static_cast<long>(mpz_sizeinbase(b.mid.get_den_mpz_t(), 2)) -
                   static_cast<long>(mpz_sizeinbase(b.mid.get_num_mpz_t(), 2));
    if (e > 0) bits += e;
  }
  try {
    return refine(x, std::min(bits, default_precision_cap()));
  } catch (const Error&) {
    return x;
  }
}

}  // namespace

double RigorousReal::to_double() const {
  if (ball_.bounded && sgn(ball_.rad) == 0) return ball_.mid.get_d();
  const RigorousReal x = refined_for_output(*this, 17);
  if (!x.ball_.bounded) return std::numeric_limits<double>::quiet_NaN();
  return x.ball_.mid.get_d();
}

std::string RigorousReal::to_decimal(int significant_digits) const {
  const RigorousReal x = refined_for_output(*this, significant_digits);
  if (!x.ball_.bounded) return "nan";
  mpfr_t v;
  mpfr_init2(v, 256);
  mpfr_set_q(v, x.ball_.mid.get_mpq_t(), MPFR_RNDN);
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", significant_digits, v);
  std::string out(buf);
  mpfr_free_str(buf);
  mpfr_clear(v);
  return out;
}

namespace {

using detail::BinaryNode;
using detail::BinaryOp;
using detail::UnaryNode;
using detail::UnaryOp;

RigorousReal make_binary(BinaryOp op, const RigorousReal& a, const RigorousReal& b);

}  // namespace

RigorousReal operator+(const RigorousReal& a, const RigorousReal& b) {
  return make_binary(BinaryOp::Add, a, b);
}
RigorousReal operator-(const RigorousReal& a, const RigorousReal& b) {
  return make_binary(BinaryOp::Sub, a, b);
}
RigorousReal operator*(const RigorousReal& a, const RigorousReal& b) {
  return make_binary(BinaryOp::Mul, a, b);
}
RigorousReal operator/(const RigorousReal& a, const RigorousReal& b) {
  if (auto q = b.exact_value(); q && sgn(*q) == 0) fail(Errc::DivisionByZero, "division by exact zero");
  return make_binary(BinaryOp::Div, a, b);
}
RigorousReal max(const RigorousReal& a, const RigorousReal& b) { return make_binary(BinaryOp::Max, a, b); }
RigorousReal min(const RigorousReal& a, const RigorousReal& b) { return make_binary(BinaryOp::Min, a, b); }

RigorousReal operator-(const RigorousReal& a) {
  if (auto q = a.exact_value()) return RigorousReal::rational(-*q);
  return RigorousReal(std::make_shared<UnaryNode>(UnaryOp::Neg, a.node_), -a.ball_, a.bits_);
}

RigorousReal abs(const RigorousReal& a) {
  if (auto q = a.exact_value()) return RigorousReal::rational(::abs(*q));
  return RigorousReal(std::make_shared<UnaryNode>(UnaryOp::Abs, a.node_), abs(a.ball_), a.bits_);
}

RigorousReal sqrt(const RigorousReal& a) {
  if (auto q = a.exact_value()) {
    if (sgn(*q) < 0) fail(Errc::DomainError, "sqrt of a negative rational");
    if (mpz_perfect_square_p(q->get_num_mpz_t()) && mpz_perfect_square_p(q->get_den_mpz_t())) {
      mpz_class n, d;
      mpz_sqrt(n.get_mpz_t(), q->get_num_mpz_t());
      mpz_sqrt(d.get_mpz_t(), q->get_den_mpz_t());
      return RigorousReal::rational(mpq_class(n, d));
    }
  }
  const long bits = std::min(a.bits_, kStartBits);
  return RigorousReal(std::make_shared<UnaryNode>(UnaryOp::Sqrt, a.node_), sqrt(a.ball_, bits), 0);
}

namespace {

RigorousReal make_binary(BinaryOp op, const RigorousReal& a, const RigorousReal& b) {
  auto qa = a.exact_value();
  auto qb = b.exact_value();
  if (qa && qb) {
    switch (op) {
      case BinaryOp::Add: return RigorousReal::rational(*qa + *qb);
      case BinaryOp::Sub: return RigorousReal::rational(*qa - *qb);
      case BinaryOp::Mul: return RigorousReal::rational(*qa * *qb);
      case BinaryOp::Div: return RigorousReal::rational(*qa / *qb);
      case BinaryOp::Max: return RigorousReal::rational(std::max(*qa, *qb));
      case BinaryOp::Min: return RigorousReal::rational(std::min(*qa, *qb));
    }
  }
  // Initial enclosure from the operands' current enclosures; refine() later
  // re-evaluates the whole tree at the requested precision.
  const long bits = std::min(a.precision(), b.precision());
  Ball ball = BinaryNode::combine(op, a.enclosure(), b.enclosure(), std::max(bits, kStartBits) + 4);
  return detail::Access::make(std::make_shared<BinaryNode>(op, detail::Access::node(a), detail::Access::node(b)),
                              std::move(ball), std::min(bits, kStartBits));
}

}  // namespace

// ---------------------------------------------------------------------------
// Refinement and comparison

RigorousReal refine(const RigorousReal& x, long bits, long cap) {
  if (bits > cap)
    fail(Errc::PrecisionCapExceeded,
         "requested " + std::to_string(bits) + " bits exceeds cap " + std::to_string(cap));
  if (x.ball_.meets(bits)) return RigorousReal(x.node_, x.ball_, std::max(x.bits_, bits));
  const bool floor = x.node_->has_floor();
  long w = std::max(bits, kStartBits);
  Ball best = x.ball_;
  for (;;) {
    Ball b = intersect(x.node_->eval(w + 2), x.ball_);
    if (b.meets(bits)) return RigorousReal(x.node_, std::move(b), bits);
    if (floor && b.bounded && best.bounded && b.rad * 2 > best.rad)
      return RigorousReal(x.node_, intersect(b, best), bits);
    if (b.bounded) best = intersect(b, best);
    if (w >= cap) {
      if (floor && best.bounded) return RigorousReal(x.node_, std::move(best), bits);
      fail(Errc::PrecisionCapExceeded, "enclosure did not reach " + std::to_string(bits) +
                                           " bits below the cap of " + std::to_string(cap));
    }
    w = std::min(2 * w, cap);
  }
}

Ball enclose(const RigorousReal& x, long bits) {
  if (x.ball_.meets(bits)) return x.ball_;
  return intersect(x.node_->eval(bits), x.ball_);
}

Ordering compare(const RigorousReal& x, const RigorousReal& y, long cap) {
  const auto qx = x.exact_value();
  const auto qy = y.exact_value();
  if (qx && qy) {
    if (*qx < *qy) return Ordering::Less;
    if (*qx > *qy) return Ordering::Greater;
    return Ordering::Indistinguishable;
  }
  Ball prev_x, prev_y;
  bool have_prev = false;
  for (long bits = kStartBits;; bits = std::min(2 * bits, cap)) {
    const Ball bx = enclose(x, bits);
    const Ball by = enclose(y, bits);
    if (bx.bounded && by.bounded) {
      if (bx.upper() < by.lower()) return Ordering::Less;
      if (by.upper() < bx.lower()) return Ordering::Greater;
    }
    if (bits >= cap) break;
    // Both enclosures stuck at a literal's uncertainty: escalation is futile.
    if (have_prev && x.has_inexact_literal() && y.has_inexact_literal() && bx.bounded && by.bounded &&
        bx.rad * 2 > prev_x.rad && by.rad * 2 > prev_y.rad)
      break;
    prev_x = bx;
    prev_y = by;
    have_prev = true;
  }
  return Ordering::Indistinguishable;
}

int certified_sign(const RigorousReal& x, long cap) {
  switch (compare(x, RigorousReal::rational(0), cap)) {
    case Ordering::Less: return -1;
    case Ordering::Greater: return 1;
    case Ordering::Indistinguishable: return 0;
  }
  return 0;
}

}  // namespace sdalab::rigorous
