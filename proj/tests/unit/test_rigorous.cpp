#include <gtest/gtest.h>

#include <cstdlib>

#include "oracles.hpp"
#include "sdalab/error.hpp"
#include "sdalab/rigorous/interval.hpp"
#include "sdalab/rigorous/real.hpp"

using namespace sdalab;
using namespace sdalab::rigorous;

namespace {

RigorousReal root(std::vector<long> coeffs, long lo, long hi) {
  std::vector<mpz_class> c(coeffs.begin(), coeffs.end());
  return RigorousReal::algebraic(c, lo, hi);
}

bool encloses(const RigorousReal& x, const oracle::Big& v) {
  const Ball& b = x.enclosure();
  const mpq_class lo = b.mid - b.rad, hi = b.mid + b.rad;
  return !(oracle::Big::rational(hi) < v) && !(v < oracle::Big::rational(lo));
}

bool encloses(const Interval& x, const oracle::Big& v) {
  return mpfr_cmp(x.lo(), v.get()) <= 0 && mpfr_cmp(v.get(), x.hi()) <= 0;
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::IoError;
}

}  // namespace

TEST(Algebraic, SqrtTwoEnclosureShrinksAroundTrueValue) {
  const auto s = root({-2, 0, 1}, 1, 2);
  const auto v = oracle::Big::sqrt_of(2);
  mpq_class last_rad = s.enclosure().rad;
  for (long bits : {64, 128, 256, 512}) {
    const auto r = refine(s, bits);
    EXPECT_TRUE(encloses(r, v)) << bits;
    EXPECT_LE(r.enclosure().rad, last_rad);
    last_rad = r.enclosure().rad;
  }
  EXPECT_EQ(refine(s, 64).to_decimal(9), "1.41421356");
}

TEST(Algebraic, NegativeRootFromSymmetricInterval) {
  const auto s = refine(root({-2, 0, 1}, -2, 0), 128);
  EXPECT_TRUE(encloses(s, oracle::Big(0.0) - oracle::Big::sqrt_of(2)));
}

TEST(Algebraic, CubeRootOfTwoMatchesBisection) {
  // Bisection on x^3 - 2 in doubles, eight digits.
  double lo = 1, hi = 2;
  for (int i = 0; i < 60; ++i) {
    const double m = 0.5 * (lo + hi);
    (m * m * m < 2 ? lo : hi) = m;
  }
  const auto c = refine(root({-2, 0, 0, 1}, 1, 2), 64);
  EXPECT_NEAR(c.to_double(), lo, 1e-8);
  EXPECT_EQ(c.to_decimal(9), "1.25992105");
}

TEST(Algebraic, RejectsNonIsolatingIntervals) {
  EXPECT_EQ(code_of([] { root({-2, 0, 1}, 2, 3); }), Errc::NoSignChange);
  EXPECT_EQ(code_of([] { root({-2, 0, 1}, -2, 2); }), Errc::NoSignChange);
  // (x - 1)^2 (x - 3) changes sign on [0, 4] but has a double root at 1.
  EXPECT_EQ(code_of([] { root({-3, 7, -5, 1}, 0, 4); }), Errc::NotSquareFree);
  EXPECT_EQ(code_of([] { root({1, -2, 1}, 0, 2); }), Errc::NoSignChange);
}

TEST(Refine, RationalIsExact) {
  const auto q = refine(RigorousReal::rational(mpq_class(3, 7)), 300);
  EXPECT_EQ(q.enclosure().rad, 0);
  EXPECT_EQ(q.enclosure().mid, mpq_class(3, 7));
}

TEST(Refine, RadiusContract) {
  const auto s = refine(root({-2, 0, 1}, 1, 2), 64);
  mpq_class bound(mpz_class(2), mpz_class(1) << 64);
  EXPECT_LE(s.enclosure().rad, bound);
}

TEST(Refine, SumOfSquareRoots) {
  const auto x = refine(root({-2, 0, 1}, 1, 2) + root({-3, 0, 1}, 1, 2), 128);
  const auto v = oracle::Big::sqrt_of(2) + oracle::Big::sqrt_of(3);
  EXPECT_TRUE(encloses(x, v));
  EXPECT_EQ(x.to_decimal(9), "3.14626437");
}

TEST(Refine, CapIsEnforced) {
  EXPECT_EQ(code_of([] { refine(root({-2, 0, 1}, 1, 2), 1 << 20, 1 << 10); }), Errc::PrecisionCapExceeded);
}

TEST(Refine, DecimalLiteralStopsAtItsOwnWidth) {
  const auto d = RigorousReal::decimal("1.25");
  EXPECT_TRUE(d.has_inexact_literal());
  const auto r = refine(d, 512);
  EXPECT_EQ(r.enclosure().mid, mpq_class(5, 4));
  EXPECT_EQ(r.enclosure().rad, mpq_class(1, 200));
}

TEST(Compare, Basic) {
  const auto s2 = root({-2, 0, 1}, 1, 2);
  EXPECT_EQ(compare(s2, RigorousReal::rational(mpq_class(3, 2))), Ordering::Less);
  EXPECT_EQ(compare(s2, s2, 1024), Ordering::Indistinguishable);
  const auto pi_ish = s2 + root({-3, 0, 1}, 1, 2);
  EXPECT_EQ(compare(pi_ish, RigorousReal::rational(mpq_class(22, 7))), Ordering::Greater);
}

TEST(Compare, SignOfDifferenceOfEqualValuesIsUndecided) {
  const auto a = root({-2, 0, 1}, 1, 2);
  const auto b = root({-2, 0, 1}, 1, 2);
  EXPECT_EQ(certified_sign(a - b, 512), 0);
  EXPECT_EQ(certified_sign(a - RigorousReal::integer(1), 512), 1);
}

TEST(Arithmetic, DivisionByZero) {
  EXPECT_EQ(code_of([] { RigorousReal::integer(1) / RigorousReal::integer(0); }), Errc::DivisionByZero);
}

TEST(Arithmetic, SqrtAndAbs) {
  const auto x = refine(sqrt(RigorousReal::integer(2)), 200);
  EXPECT_TRUE(encloses(x, oracle::Big::sqrt_of(2)));
  EXPECT_EQ(abs(RigorousReal::integer(-3)).exact_value(), mpq_class(3));
}

TEST(IntervalOps, LogExpPowAgainstMpfr) {
  const Interval x = Interval::point(mpq_class(7, 3));
  const auto lx = log(x);
  const auto ox = oracle::log(oracle::Big::rational(mpq_class(7, 3)));
  EXPECT_TRUE(encloses(lx, ox));
  EXPECT_LT(lx.width(), 1e-40);
  const auto p = pow(x, Interval::point(mpq_class(5, 4)));
  const auto op = oracle::pow(oracle::Big::rational(mpq_class(7, 3)), oracle::Big::rational(mpq_class(5, 4)));
  EXPECT_TRUE(encloses(p, op));
  EXPECT_NEAR(exp(lx).mid(), 7.0 / 3.0, 1e-15);
}

TEST(IntervalOps, OrderingAndErrors) {
  const Interval a = Interval::hull(1, 2), b = Interval::hull(3, 4);
  EXPECT_TRUE(a.certainly_less(b));
  EXPECT_FALSE(b.certainly_less(a));
  EXPECT_TRUE(Interval::hull(-1, 1).contains_zero());
  EXPECT_EQ(code_of([&] { a / Interval::hull(-1, 1); }), Errc::DivisionByZero);
  EXPECT_EQ(code_of([] { log(Interval::hull(-1, 1)); }), Errc::DomainError);
}

TEST(IntervalOps, FromRealEnclosesAlgebraic) {
  const auto i = Interval::from_real(root({-2, 0, 0, 1}, 1, 2));
  EXPECT_TRUE(encloses(i, oracle::Big::cbrt_of(2)));
  EXPECT_LT(i.width(), 1e-30);
}
