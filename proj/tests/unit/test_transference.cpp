#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "sdalab/error.hpp"
#include "sdalab/exponents.hpp"
#include "sdalab/extremal.hpp"
#include "sdalab/model.hpp"
#include "sdalab/presets.hpp"
#include "sdalab/spectra.hpp"
#include "sdalab/transference.hpp"

using namespace sdalab;
using namespace sdalab::transference;
using rigorous::Interval;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::IoError;
}

Interval q(long a, long b = 1) { return Interval::point(mpq_class(a, b)); }

minpoints::MinimalPointSequence run(const std::string& preset, long x_max) {
  const auto t = model::load_target(presets::config(preset));
  return minpoints::enumerate_minimal_points(t.target, t.set, x_max);
}

// Φ_k(X) = X φ(X) φ(θX) ... φ(θ^k X) with φ, θ evaluated directly in MPFR.
double Phi_oracle(double a, double b, double alpha, double beta, int k, double X) {
  using oracle::Big;
  const Big A(a), B(b), al(alpha), be(beta);
  Big x(X), prod(X);
  for (int j = 0; j <= k; ++j) {
    prod = prod * A * oracle::pow(x, Big(0.0) - al);
    x = oracle::pow(A / B, Big(0.0) - Big(1.0) / be) * oracle::pow(x, al / be);
  }
  return prod.to_double();
}

}  // namespace

TEST(MmLhs, Examples) {
  EXPECT_NEAR(mm_lhs(0.6180339887498949, 1.0, 2), 1.0, 1e-10);
  EXPECT_DOUBLE_EQ(mm_lhs(0.37, std::nullopt, 5), 0.37);
  EXPECT_DOUBLE_EQ(mm_lhs(0.5, 0.5, 2), 1.0);
  const auto i = mm_lhs(q(1, 2), q(1, 2), 2);
  EXPECT_TRUE(i.contains(1.0));
  EXPECT_EQ(code_of([] { mm_lhs(-0.1, 1.0, 2); }), Errc::DomainError);
}

TEST(MmLhs, DecreasingInLambdaWithLimitLambdaHat) {
  for (int n = 2; n <= 5; ++n)
    for (double h = 0.05; h <= 1.0; h += 0.05) {
      double prev = mm_lhs(h, h, n);
      for (double l = h * 1.1; l < 1e6; l *= 1.7) {
        const double v = mm_lhs(h, l, n);
        EXPECT_LT(v, prev);
        prev = v;
      }
      EXPECT_NEAR(mm_lhs(h, 1e12, n), h, 1e-9);
    }
}

TEST(EpsilonDelta, Examples) {
  const auto a = epsilon_delta(PowerProfile::rational(2, 1, 1, mpq_class(1, 2), mpq_class(1, 2)));
  EXPECT_EQ(*a.eps_exact, 0);
  const auto b = epsilon_delta(PowerProfile::rational(2, 1, 1, mpq_class(1, 2), 1));
  EXPECT_EQ(*b.eps_exact, mpq_class(1, 4));
  EXPECT_EQ(*b.delta_exact, mpq_class(1, 2));
  const auto l3 = spectra::lambda_n(3);
  const auto c = epsilon_delta(PowerProfile::real(3, q(1), q(1), l3.enclosure, q(1, 2)));
  EXPECT_TRUE(c.eps.contains(0.0));
  EXPECT_LT(c.eps.width(), 1e-20);
  EXPECT_EQ(code_of([] { PowerProfile::rational(2, 0, 1, 1, 1); }), Errc::DomainError);
}

TEST(EpsilonDelta, EpsZeroExactlyWhenMmLhsIsOne) {
  // ε(α, β) = 1 - mm_lhs(α, β, n) as rationals.
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<long> d(1, 40);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 5;
    mpq_class al(d(rng), 40), be(d(rng), 20);
    al.canonicalize();
    be.canonicalize();
    const auto e = epsilon_delta(PowerProfile::rational(n, 1, 1, al, be));
    mpq_class s = 0, t = al;
    for (int k = 1; k <= n; ++k, t *= al / be) s += t;
    EXPECT_EQ(*e.eps_exact, 1 - s);
  }
}

TEST(EpsThreshold, Examples) {
  EXPECT_EQ(eps_threshold(mpq_class(1, 2), mpq_class(1), 2), mpq_class(1, 64));
  EXPECT_EQ(eps_threshold(mpq_class(1, 3), mpq_class(1, 3), 4), 0);
  const auto l3 = spectra::lambda_n(3).enclosure;
  EXPECT_GT(eps_threshold(l3, q(1, 2), 3).lower(), 0);
  EXPECT_EQ(code_of([] { eps_threshold(mpq_class(1), mpq_class(1, 2), 2); }), Errc::DomainError);
  EXPECT_EQ(code_of([] { eps_threshold(mpq_class(0), mpq_class(1, 2), 2); }), Errc::DomainError);
}

TEST(PhiFunctions, Examples) {
  const auto v = phi_functions(PowerProfile::rational(2, 1, 1, mpq_class(1, 2), 3), 0, q(4));
  EXPECT_TRUE(v.Phi_iterated.contains(2.0));
  EXPECT_TRUE(v.Phi_closed.contains(2.0));
  const auto w = phi_functions(PowerProfile::rational(2, 1, 1, mpq_class(1, 2), 1), 1, q(16));
  EXPECT_NEAR(w.Phi_iterated.mid(), 2.0, 1e-40);
  EXPECT_NEAR(w.Phi_closed.mid(), 2.0, 1e-40);
  // θ = identity when a = b and α = β: φ_k = φ^{k+1}.
  const auto p = PowerProfile::rational(4, 3, 3, mpq_class(2, 5), mpq_class(2, 5));
  PowerTriple t(p);
  for (int k = 0; k < 4; ++k) {
    const Interval X = q(37, 3);
    Interval pw(1.0);
    for (int j = 0; j <= k; ++j) pw = pw * t.phi(X);
    EXPECT_NEAR(t.phi_k(k, X).mid(), pw.mid(), 1e-30 * pw.mid());
  }
  EXPECT_EQ(code_of([] { phi_functions(PowerProfile::rational(2, 1, 1, 1, 1), 2, q(4)); }), Errc::DomainError);
}

TEST(PhiFunctions, ClosedFormMatchesMpfrComposition) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> d(1, 100);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 4;
    const mpq_class a(d(rng), 50), b(d(rng), 50), al(d(rng), 100);
    const mpq_class be = al + mpq_class(d(rng), 100);
    const auto p = PowerProfile::rational(n, a, b, al, be);
    PowerTriple t(p);
    for (double X = 1.5; X < 1e8; X *= 7.3) {
      for (int k = 0; k < n; ++k) {
        const double ref = Phi_oracle(a.get_d(), b.get_d(), al.get_d(), be.get_d(), k, X);
        const auto closed = t.Phi_k_closed(k, Interval::point(mpq_class(X)));
        EXPECT_NEAR(closed.mid(), ref, 1e-12 * ref);
      }
    }
  }
}

TEST(PowerLog, ThetaInvertsPsi) {
  PowerLogTriple t(2, 1.0, 0.5, 0.5, 1.0, 1.0, -0.5);
  for (double X = 3; X < 1e9; X *= 11) {
    const Interval x(X);
    const auto th = t.theta(x);
    const auto back = t.psi(th);
    const auto fwd = t.phi(x);
    EXPECT_NEAR(back.mid(), fwd.mid(), 1e-9 * fwd.mid());
    // Bisection to relative 1e-12, then widened by the same amount.
    EXPECT_LT(th.width() / th.mid(), 1e-10);
  }
  EXPECT_FALSE(t.Phi_direction(0).has_value());
}

TEST(Exponents, SyntheticDoublyExponential) {
  // X_i = 2^{2^i}, L_i = X_i^{-2}.
  std::vector<Interval> lx, ll;
  const Interval ln2 = log(q(2));
  for (int i = 0; i < 24; ++i) {
    const Interval e = Interval::point(mpq_class(mpz_class(1) << i));
    lx.push_back(e * ln2);
    ll.push_back(Interval(-2.0) * e * ln2);
  }
  const auto est = estimate_exponents(lx, ll);
  EXPECT_TRUE(est.lambda.contains(2.0));
  EXPECT_TRUE(est.lambda_hat.contains(1.0));
  EXPECT_LT(est.lambda.width(), 1e-40);
  EXPECT_EQ(est.tail_begin, 12u);
}

TEST(Exponents, SqrtTwoAgainstConvergentOracle) {
  const auto seq = run("sqrt2", 100000);
  // Only 13 entries carry slope information at this range, so the window
  // holds the last half of them.
  const auto est = estimate_exponents(seq, mpq_class(1, 2), 5);
  const auto cf = oracle::sqrt2_convergents(100000);
  double lam = 0, hat = 1e9;
  for (std::size_t i = cf.size() - (cf.size() + 1) / 2; i < cf.size(); ++i) {
    const double q = cf[i].first.get_d(), p = cf[i].second.get_d();
    const double L = std::abs(p - q * std::sqrt(2.0)), X = std::hypot(q, p);
    lam = std::max(lam, -std::log(L) / std::log(X));
    if (i + 1 < cf.size())
      hat = std::min(hat, -std::log(L) / std::log(std::hypot(cf[i + 1].first.get_d(), cf[i + 1].second.get_d())));
  }
  EXPECT_NEAR(est.lambda.mid(), lam, 1e-9);
  EXPECT_NEAR(est.lambda_hat.mid(), hat, 1e-9);
  EXPECT_NEAR(est.lambda.mid(), 1.0, 0.1);
  EXPECT_NEAR(est.lambda_hat.mid(), 1.0, 0.1);
  EXPECT_LE(est.lambda_hat.mid(), est.lambda.mid());
}

TEST(Exponents, CubicNearOneHalf) {
  // At this range the step extremes still wander; the fitted slope settles first.
  const auto est = estimate_exponents(run("cubic", 100000), mpq_class(2, 3), 10);
  EXPECT_LE(est.lambda_hat.mid(), 0.5);
  EXPECT_GE(est.lambda.mid(), 0.5);
  EXPECT_NEAR(est.regression_slope, 0.5, 0.05);
}

TEST(Exponents, TooFewPoints) {
  EXPECT_EQ(code_of([] { estimate_exponents(run("sqrt2", 1000)); }), Errc::TooFewPoints);
}

TEST(Sandwich, SqrtTwoWithFittedConstants) {
  const auto seq = run("sqrt2", 100000);
  const auto p = fit_power_profile(seq, 1, 1, 1);
  PowerTriple t(p);
  const auto rep = check_sandwich(seq, t);
  EXPECT_TRUE(rep.holds);
  EXPECT_EQ(rep.steps_checked, seq.size());
  EXPECT_EQ(*rep.constants->eps_exact, 0);
  EXPECT_EQ(*rep.eps_nonnegative, Check::Pass);
  ASSERT_EQ(rep.monotonicity.size(), 1u);
  EXPECT_EQ(rep.monotonicity[0].direction, 0);
  EXPECT_TRUE(rep.monotonicity[0].ok);
  EXPECT_EQ(rep.consequence_failures, 0u);
}

TEST(Sandwich, CubicInsideTheExponentWindow) {
  const auto seq = run("cubic", 100000);
  const auto p = fit_power_profile(seq, mpq_class(2, 5), mpq_class(3, 5), 2);
  PowerTriple t(p);
  SandwichOptions o;
  o.A = 2;
  const auto rep = check_sandwich(seq, t, o);
  EXPECT_TRUE(rep.holds);
  EXPECT_GT(rep.constants->eps.lower(), 0);
  EXPECT_GT(rep.min_Phi.back().lower(), 0);
  for (const auto& m : rep.monotonicity) EXPECT_TRUE(m.ok);
  EXPECT_EQ(rep.consequence_failures, 0u);
  for (std::size_t i0 = 2; i0 < 8; ++i0) EXPECT_EQ(lemma41_chain(seq, t, i0).result, Check::Pass) << i0;
}

TEST(Sandwich, ViolationCarriesWitness) {
  const auto seq = run("cubic", 10000);
  PowerTriple t(PowerProfile::rational(2, 1, 1, mpq_class(1, 2), mpq_class(1, 2)));
  try {
    check_sandwich(seq, t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SandwichViolated);
    EXPECT_NE(std::string(e.what()).find("X = "), std::string::npos);
  }
}

TEST(Sandwich, DomainTooShort) {
  const auto seq = run("cubic", 100);
  PowerTriple t(PowerProfile::rational(2, 1, 1, mpq_class(1, 2), mpq_class(1, 2)));
  SandwichOptions o;
  o.A = 99;
  EXPECT_EQ(code_of([&] { check_sandwich(seq, t, o); }), Errc::DomainTooShort);
}

TEST(Extremal, ExactPowerLawPassesWithZeroSlack) {
  std::vector<ExtremalSample> s;
  for (int i = 0; i < 8; ++i) {
    mpz_class p3;
    mpz_ui_pow_ui(p3.get_mpz_t(), 3, i);
    mpq_class l(-9 * p3);
    l /= 4;
    s.push_back({Interval::point(mpq_class(p3)), Interval::point(l), std::nullopt});
  }
  ExtremalParams p{2, q(3, 4), q(9, 4), q(0), q(0)};
  const auto rep = verify_extremal_samples(s, p);
  EXPECT_EQ(rep.count(&ExtremalRow::growth, Condition::Pass), 7u);
  EXPECT_EQ(rep.count(&ExtremalRow::decay, Condition::Pass), 8u);
  EXPECT_EQ(rep.eps_within_threshold, Condition::Pass);
}

TEST(Extremal, DependentTripleFailsIndependence) {
  const std::vector<model::IntegerPoint> pts{{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}};
  std::vector<ExtremalSample> s;
  for (const auto& x : pts) s.push_back({q(1), q(-1), x});
  ExtremalParams p{2, q(1, 2), q(1), q(0), q(1)};
  const auto rep = verify_extremal_samples(s, p);
  ASSERT_TRUE(rep.rows[0].det);
  EXPECT_EQ(*rep.rows[0].det, 0);
  EXPECT_EQ(rep.rows[0].independence, Condition::Fail);
  EXPECT_EQ(rep.rows[1].independence, Condition::Pass);
  EXPECT_EQ(rep.rows[3].independence, Condition::NotApplicable);
}

TEST(Extremal, MinimalPointsSatisfyRecordCondition) {
  const auto seq = run("cubic", 10000);
  ExtremalParams p{2, q(1, 2), q(1, 2), q(0), q(10)};
  const auto rep = verify_extremal_sequence(seq.points(), seq, p);
  EXPECT_EQ(rep.count(&ExtremalRow::record, Condition::Pass), seq.size());
  // A non-minimal point of S fails (iv).
  const auto bad = verify_extremal_sequence({{5, 0, 0}, {0, 5, 0}, {0, 0, 5}}, seq, p);
  EXPECT_EQ(bad.rows[0].record, Condition::Fail);
}

TEST(Extremal, TooFewPoints) {
  ExtremalParams p{2, q(1, 2), q(1), q(0), q(0)};
  EXPECT_EQ(code_of([&] { verify_extremal_samples({{q(1), q(-1), std::nullopt}}, p); }), Errc::TooFewPoints);
}
