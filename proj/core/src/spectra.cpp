#include "sdalab/spectra.hpp"

#include <cmath>

#include "sdalab/error.hpp"
#include "sdalab/rigorous/polynomial.hpp"
#include "sdalab/transference.hpp"

namespace sdalab::spectra {

std::vector<mpz_class> lambda_polynomial(int n) {
  if (n < 2) fail(Errc::DomainError, "n must be at least 2");
  std::vector<mpz_class> c{mpz_class(-1)};
  mpz_class w = 1;
  for (int k = 1; k <= n; ++k) {
    c.push_back(w);
    w *= n - 1;
  }
  return c;
}

LambdaN lambda_n(int n, const mpq_class& tol) {
  if (sgn(tol) <= 0) fail(Errc::DomainError, "tolerance must be positive");
  const auto coeffs = lambda_polynomial(n);
  auto p = [&](const mpq_class& x) {
    mpq_class r = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * x + *it;
    return r;
  };
  // p(0) = -1 < 0 <= p(1), and p is increasing on x > 0.
  mpq_class lo = 0, hi = 1;
  while (hi - lo > tol) {
    mpq_class mid = (lo + hi) / 2;
    const int s = sgn(p(mid));
    if (s == 0) {
      lo = hi = mid;
      break;
    }
    (s < 0 ? lo : hi) = mid;
  }
  LambdaN out;
  out.n = n;
  out.lo = lo;
  out.hi = hi;
  out.value = lo == hi ? RigorousReal::rational(lo) : RigorousReal::algebraic(coeffs, lo, hi);
  out.enclosure = Interval::hull(lo, hi);
  return out;
}

std::optional<long double> frontier(long double lambda_hat, int n) {
  if (n < 1) fail(Errc::DomainError, "n must be at least 1");
  if (!(lambda_hat >= 1.0L / n && lambda_hat <= 1.0L)) fail(Errc::DomainError, "lambda_hat outside [1/n, 1]");
  // The limit λ -> ∞ leaves λ̂ alone, so a finite solution needs λ̂ < 1.
  if (lambda_hat >= 1.0L) return std::nullopt;
  auto f = [&](long double lambda) {
    long double sum = lambda_hat, term = lambda_hat;
    for (int k = 2; k <= n; ++k) {
      term *= lambda_hat / lambda;
      sum += term;
    }
    return sum - 1.0L;
  };
  long double lo = lambda_hat, hi = 2 * lambda_hat;
  if (f(lo) <= 0) return lo;
  while (f(hi) > 0) hi *= 2;
  for (int it = 0; it < 400; ++it) {
    const long double mid = 0.5L * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (f(mid) > 0 ? lo : hi) = mid;
  }
  return 0.5L * (lo + hi);
}

std::vector<std::pair<long double, std::optional<long double>>> frontier_table(int n, int grid) {
  if (grid < 2) fail(Errc::DomainError, "grid needs at least two points");
  std::vector<std::pair<long double, std::optional<long double>>> out;
  const long double a = 1.0L / n;
  for (int g = 0; g < grid; ++g) {
    const long double x = g == grid - 1 ? 1.0L : a + (1.0L - a) * g / (grid - 1);
    out.emplace_back(x, frontier(x, n));
  }
  return out;
}

LiouvilleReport liouville_preset(std::span<const mpz_class> minpoly, const mpq_class& lo, const mpq_class& hi,
                                 const RigorousReal& extra, const mpq_class& x_max,
                                 const minpoints::EnumerationOptions& opts, const mpq_class& tail_fraction,
                                 std::size_t min_entries) {
  const int n = rigorous::Polynomial::from_integers(minpoly).degree();
  if (n < 2) fail(Errc::DomainError, "theta must have degree at least 2");
  const RigorousReal theta = RigorousReal::algebraic(minpoly, lo, hi);
  std::vector<RigorousReal> coords{RigorousReal::integer(1)};
  for (int k = 1; k < n; ++k) coords.push_back(coords.back() * theta);
  coords.push_back(extra);

  LiouvilleReport rep;
  rep.n = n;
  rep.seq = minpoints::enumerate_minimal_points(model::TargetPoint(std::move(coords)), model::ApproxSet::full(),
                                                x_max, opts);
  const Interval power = Interval::point(mpq_class(1, n - 1));
  bool have = false;
  for (std::size_t i = 0; i < rep.seq.size(); ++i) {
    if (rep.seq[i].point.norm_sq() == 1) continue;
    const Interval v = pow(Interval::from_real(rep.seq[i].X), power) * Interval::from_real(rep.seq[i].L);
    if (!have || v.mid() < rep.c2_estimate.mid()) {
      rep.c2_estimate = v;
      rep.c2_index = i;
      have = true;
    }
  }
  if (!have) fail(Errc::TooFewPoints, "no minimal point beyond norm 1");
  rep.lambda_n = lambda_n(n).enclosure;
  try {
    rep.exponents = transference::estimate_exponents(rep.seq, tail_fraction, min_entries);
    rep.margin = rep.lambda_n - rep.exponents->lambda_hat;
  } catch (const Error& e) {
    if (e.code() != Errc::TooFewPoints) throw;
  }
  return rep;
}

}  // namespace sdalab::spectra
