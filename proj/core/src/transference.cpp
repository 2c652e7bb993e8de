#include "sdalab/transference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sdalab/construction.hpp"
#include "sdalab/error.hpp"

namespace sdalab::transference {

namespace {

Interval pt(const mpq_class& q) { return Interval::point(q); }

mpq_class qpow(const mpq_class& x, int e) {
  mpq_class r = 1;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

Interval ipow(const Interval& x, int e) {
  Interval r(1.0);
  for (int i = 0; i < e; ++i) r = r * x;
  return r;
}

void require_positive(const Interval& x, const char* what) {
  if (!(x.lower() > 0)) fail(Errc::DomainError, std::string(what) + " must be positive");
}

Interval to_interval(const rigorous::RigorousReal& x) { return Interval::from_real(x); }

// le(a, b) with three outcomes.
Check compare_le(const Interval& a, const Interval& b) {
  if (a.certainly_le(b)) return Check::Pass;
  if (b.certainly_less(a)) return Check::Fail;
  return Check::Tight;
}

}  // namespace

const char* to_string(Check c) {
  switch (c) {
    case Check::Pass: return "pass";
    case Check::Tight: return "tight";
    case Check::Fail: return "fail";
  }
  return "?";
}

Interval mm_lhs(const Interval& lambda_hat, const std::optional<Interval>& lambda, int n) {
  if (n < 1) fail(Errc::DomainError, "n must be at least 1");
  if (lambda_hat.upper() < 0) fail(Errc::DomainError, "lambda_hat is negative");
  if (!lambda) return lambda_hat;
  if (!(lambda->lower() > 0)) fail(Errc::DomainError, "lambda must be positive");
  Interval sum = lambda_hat;
  Interval term = lambda_hat;
  for (int k = 2; k <= n; ++k) {
    term = term * lambda_hat / *lambda;
    sum = sum + term;
  }
  return sum;
}

double mm_lhs(double lambda_hat, std::optional<double> lambda, int n) {
  if (n < 1) fail(Errc::DomainError, "n must be at least 1");
  if (lambda_hat < 0 || (lambda && *lambda < 0)) fail(Errc::DomainError, "negative exponent");
  if (!lambda || std::isinf(*lambda)) return lambda_hat;
  if (*lambda == 0) fail(Errc::DomainError, "lambda must be positive");
  double sum = lambda_hat, term = lambda_hat;
  for (int k = 2; k <= n; ++k) {
    term *= lambda_hat / *lambda;
    sum += term;
  }
  return sum;
}

PowerProfile PowerProfile::rational(int n, const mpq_class& a, const mpq_class& b, const mpq_class& alpha,
                                    const mpq_class& beta) {
  if (n < 1) fail(Errc::DomainError, "n must be at least 1");
  if (sgn(a) <= 0 || sgn(b) <= 0 || sgn(alpha) <= 0 || sgn(beta) <= 0)
    fail(Errc::DomainError, "a, b, alpha, beta must be positive");
  PowerProfile p;
  p.n = n;
  p.a = pt(a);
  p.b = pt(b);
  p.alpha = pt(alpha);
  p.beta = pt(beta);
  p.exact = std::array<mpq_class, 4>{a, b, alpha, beta};
  return p;
}

PowerProfile PowerProfile::real(int n, const Interval& a, const Interval& b, const Interval& alpha,
                                const Interval& beta) {
  if (n < 1) fail(Errc::DomainError, "n must be at least 1");
  require_positive(a, "a");
  require_positive(b, "b");
  require_positive(alpha, "alpha");
  require_positive(beta, "beta");
  PowerProfile p;
  p.n = n;
  p.a = a;
  p.b = b;
  p.alpha = alpha;
  p.beta = beta;
  return p;
}

EpsilonDelta epsilon_delta(const PowerProfile& p) {
  require_positive(p.a, "a");
  require_positive(p.b, "b");
  require_positive(p.alpha, "alpha");
  require_positive(p.beta, "beta");
  EpsilonDelta out;
  const Interval r = p.alpha / p.beta;
  const Interval ab = p.a / p.b;
  Interval sum_exp(0.0), delta(0.0), inner(0.0);
  Interval term = p.alpha;  // α^{k+1}/β^k
  Interval rk(1.0);         // (α/β)^k
  for (int k = 0; k < p.n; ++k) {
    if (k > 0) {
      term = term * r;
      rk = rk * r;
      inner = inner + rk;
      delta = delta + inner;
    }
    sum_exp = sum_exp + term;
    out.eps_k.push_back(Interval(1.0) - sum_exp);
    out.delta_k.push_back(delta);
    out.c_k.push_back(ipow(p.a, k + 1) * pow(ab, delta));
  }
  out.eps = out.eps_k.back();
  out.delta = out.delta_k.back();

  if (p.exact) {
    const auto& [a, b, alpha, beta] = *p.exact;
    const mpq_class rq = alpha / beta;
    mpq_class s = 0, d = 0, in = 0, t = alpha, rp = 1;
    for (int k = 0; k < p.n; ++k) {
      if (k > 0) {
        t *= rq;
        rp *= rq;
        in += rp;
        d += in;
      }
      s += t;
      out.eps_k_exact.push_back(1 - s);
      out.delta_k_exact.push_back(d);
    }
    out.eps_exact = out.eps_k_exact.back();
    out.delta_exact = out.delta_k_exact.back();
  }
  return out;
}

mpq_class eps_threshold(const mpq_class& alpha, const mpq_class& beta, int n) {
  if (n < 1) fail(Errc::DomainError, "n must be at least 1");
  if (sgn(alpha) <= 0 || alpha > beta) fail(Errc::DomainError, "requires 0 < alpha <= beta");
  mpq_class m = std::min<mpq_class>(alpha, beta - alpha);
  return qpow(alpha / beta, n) * m / (4 * n);
}

Interval eps_threshold(const Interval& alpha, const Interval& beta, int n) {
  if (n < 1) fail(Errc::DomainError, "n must be at least 1");
  if (!(alpha.lower() > 0) || beta.certainly_less(alpha)) fail(Errc::DomainError, "requires 0 < alpha <= beta");
  Interval m = min(alpha, beta - alpha);
  if (m.lower() < 0) m = hull(Interval(0.0), max(m, Interval(0.0)));
  return ipow(alpha / beta, n) * m / Interval(4.0 * n);
}

Interval FunctionTriple::phi_k(int k, const Interval& X) const {
  if (k < 0 || k >= n()) fail(Errc::DomainError, "k out of range");
  Interval prod = phi(X);
  Interval t = X;
  for (int j = 1; j <= k; ++j) {
    t = theta(t);
    prod = prod * phi(t);
  }
  return prod;
}

Interval FunctionTriple::Phi_k(int k, const Interval& X) const { return X * phi_k(k, X); }

PowerTriple::PowerTriple(PowerProfile p) : p_(std::move(p)), ed_(epsilon_delta(p_)) {}

Interval PowerTriple::psi(const Interval& X) const {
  require_positive(X, "X");
  return p_.b * pow(X, -p_.beta);
}

Interval PowerTriple::phi(const Interval& X) const {
  require_positive(X, "X");
  return p_.a * pow(X, -p_.alpha);
}

Interval PowerTriple::theta(const Interval& X) const {
  require_positive(X, "X");
  return pow(p_.a / p_.b, -(Interval(1.0) / p_.beta)) * pow(X, p_.alpha / p_.beta);
}

std::optional<int> PowerTriple::Phi_direction(int k) const {
  if (k < 0 || k >= p_.n) fail(Errc::DomainError, "k out of range");
  if (!ed_.eps_k_exact.empty()) return sgn(ed_.eps_k_exact[k]);
  const Interval& e = ed_.eps_k[k];
  if (e.lower() > 0) return 1;
  if (e.upper() < 0) return -1;
  return std::nullopt;
}

Interval PowerTriple::phi_k_closed(int k, const Interval& X) const {
  if (k < 0 || k >= p_.n) fail(Errc::DomainError, "k out of range");
  require_positive(X, "X");
  return ed_.c_k[k] * pow(X, ed_.eps_k[k] - Interval(1.0));
}

Interval PowerTriple::Phi_k_closed(int k, const Interval& X) const {
  if (k < 0 || k >= p_.n) fail(Errc::DomainError, "k out of range");
  require_positive(X, "X");
  return ed_.c_k[k] * pow(X, ed_.eps_k[k]);
}

PowerLogTriple::PowerLogTriple(int n, double a, double b, double alpha, double beta, double sigma, double rho)
    : n_(n), a_(a), b_(b), alpha_(alpha), beta_(beta), sigma_(sigma), rho_(rho) {
  if (n < 1) fail(Errc::DomainError, "n must be at least 1");
  if (!(a > 0 && b > 0 && alpha > 0 && beta > 0)) fail(Errc::DomainError, "a, b, alpha, beta must be positive");
}

Interval PowerLogTriple::psi(const Interval& X) const {
  if (!(X.lower() > 1)) fail(Errc::DomainError, "power-log functions need X > 1");
  Interval r = Interval(b_) * pow(X, Interval(-beta_));
  if (rho_ != 0) r = r * pow(log(X), Interval(rho_));
  return r;
}

Interval PowerLogTriple::phi(const Interval& X) const {
  if (!(X.lower() > 1)) fail(Errc::DomainError, "power-log functions need X > 1");
  Interval r = Interval(a_) * pow(X, Interval(-alpha_));
  if (sigma_ != 0) r = r * pow(log(X), Interval(sigma_));
  return r;
}

Interval PowerLogTriple::theta(const Interval& X) const {
  if (!(X.lower() > 1)) fail(Errc::DomainError, "power-log functions need X > 1");
  // Solve log b - β u + ρ log u = log φ(x) for u = log T on the branch where
  // the left side decreases (u > ρ/β).
  auto solve = [&](double x) {
    const double target = std::log(a_) - alpha_ * std::log(x) + sigma_ * std::log(std::log(x));
    auto g = [&](double u) { return std::log(b_) - beta_ * u + rho_ * std::log(u) - target; };
    double lo = std::max(1e-300, rho_ > 0 ? rho_ / beta_ : 1e-300);
    double hi = std::max(1.0, 2 * lo);
    if (g(lo) < 0) fail(Errc::DomainError, "theta has no solution above 1 for this X");
    while (g(hi) > 0) {
      hi *= 2;
      if (hi > 1e300) fail(Errc::DomainError, "theta bisection diverged");
    }
    for (int it = 0; it < 400 && hi - lo > 1e-13 * hi; ++it) {
      const double mid = 0.5 * (lo + hi);
      (g(mid) > 0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  };
  const double ul = solve(X.lower()), uh = solve(X.upper());
  const double tol = 1e-12;
  return exp(Interval::hull(mpq_class(ul * (1 - tol)), mpq_class(uh * (1 + tol))));
}

PhiValues phi_functions(const PowerProfile& p, int k, const Interval& X) {
  if (k < 0 || k >= p.n) fail(Errc::DomainError, "k out of range");
  require_positive(X, "X");
  PowerTriple t(p);
  PhiValues v;
  v.phi_iterated = t.phi_k(k, X);
  v.Phi_iterated = t.Phi_k(k, X);
  v.phi_closed = t.phi_k_closed(k, X);
  v.Phi_closed = t.Phi_k_closed(k, X);
  return v;
}

namespace {

struct Step {
  std::size_t i;
  Interval left, right;  // envelope equals L_i on [left, right)
  bool right_is_next;    // right end is X_{i+1} rather than X_max
};

std::vector<Step> steps_in_range(const minpoints::MinimalPointSequence& seq, const mpq_class& A,
                                 const mpq_class& x_max) {
  std::vector<Step> out;
  const Interval a = pt(A), xm = pt(x_max);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Interval Xi = to_interval(seq[i].X);
    if (xm.certainly_less(Xi)) break;
    Interval right = xm;
    bool next = false;
    if (i + 1 < seq.size()) {
      const Interval Xn = to_interval(seq[i + 1].X);
      if (Xn.certainly_le(xm)) {
        right = Xn;
        next = true;
      }
    }
    if (right.certainly_le(a)) continue;
    out.push_back({i, a.certainly_le(Xi) ? Xi : max(Xi, a), right, next});
  }
  return out;
}

}  // namespace

PowerProfile fit_power_profile(const minpoints::MinimalPointSequence& seq, const mpq_class& alpha,
                               const mpq_class& beta, const mpq_class& A, double margin) {
  const mpq_class x_max = seq.exhausted_up_to;
  const auto steps = steps_in_range(seq, A, x_max);
  if (steps.size() < 2) fail(Errc::DomainTooShort, "fewer than two minimal points above A");
  const Interval al = pt(alpha), be = pt(beta);
  double a = 0, b = std::numeric_limits<double>::infinity();
  for (const auto& s : steps) {
    const Interval L = to_interval(seq[s.i].L);
    a = std::max(a, (L * pow(s.right, al)).upper());
    b = std::min(b, (L * pow(s.left, be)).lower());
  }
  if (!(b > 0)) fail(Errc::DomainError, "fitted b is not positive");
  return PowerProfile::rational(static_cast<int>(seq.target.n()), mpq_class(a) * mpq_class(1 + margin),
                                mpq_class(b) * mpq_class(1 - margin), alpha, beta);
}

SandwichReport check_sandwich(const minpoints::MinimalPointSequence& seq, const FunctionTriple& f,
                              const SandwichOptions& opts) {
  SandwichReport rep;
  rep.family = f.name();
  rep.A = opts.A;
  rep.x_max = seq.exhausted_up_to;
  if (sgn(opts.A) <= 0) fail(Errc::DomainError, "A must be positive");
  if (rep.x_max <= opts.A) fail(Errc::DomainTooShort, "certified range ends before A");
  const int n = f.n();
  if (n != static_cast<int>(seq.target.n())) fail(Errc::AmbientMismatch, "profile n differs from target n");

  const auto steps = steps_in_range(seq, opts.A, rep.x_max);
  std::size_t inside = 0;
  for (const auto& s : steps)
    if (pt(opts.A).certainly_le(to_interval(seq[s.i].X))) ++inside;
  if (inside < 2) fail(Errc::DomainTooShort, "fewer than two minimal points in [A, X_max]");

  auto violated = [&](const std::string& what, const Interval& X) {
    fail(Errc::SandwichViolated, what + " at X = " + X.to_decimal() + " (witness)");
  };

  // Below the first minimal point the envelope is infinite.
  if (!steps.empty() && steps.front().i == 0 && pt(opts.A).certainly_less(to_interval(seq[0].X)))
    violated("envelope is infinite above phi", pt(opts.A));

  for (const auto& s : steps) {
    const Interval L = to_interval(seq[s.i].L);
    const Check lower = compare_le(f.psi(s.left), L);
    const Check upper = compare_le(L, f.phi(s.right));
    if (lower == Check::Fail) violated("psi exceeds the envelope", s.left);
    if (upper == Check::Fail) violated("envelope exceeds phi", s.right);
    if (lower == Check::Tight || upper == Check::Tight) ++rep.tight;
    ++rep.steps_checked;

    if (s.right_is_next && pt(opts.A).certainly_le(to_interval(seq[s.i].X))) {
      const Interval Xi = to_interval(seq[s.i].X);
      ++rep.consequence_checked;
      const Check c1 = compare_le(L, f.phi(s.right));
      const Check c2 = compare_le(f.theta(s.right), Xi);
      if (c1 == Check::Fail || c2 == Check::Fail)
        ++rep.consequence_failures;
      else if (c1 == Check::Tight || c2 == Check::Tight)
        ++rep.consequence_tight;
    }
  }

  // Geometric grid, reporting only.
  const std::size_t G = std::max<std::size_t>(opts.grid_points, 2);
  const double lo = opts.A.get_d(), hi = rep.x_max.get_d();
  rep.min_Phi.assign(n, Interval(0.0));
  std::vector<bool> have(n, false);
  for (std::size_t g = 0; g < G; ++g) {
    double x = lo * std::pow(hi / lo, static_cast<double>(g) / static_cast<double>(G - 1));
    mpq_class xq(x);
    if (xq < opts.A) xq = opts.A;
    if (xq > rep.x_max) xq = rep.x_max;
    GridRow row;
    row.X = xq.get_d();
    const Interval X = pt(xq);
    if (auto e = minpoints::envelope(seq, xq)) row.envelope = to_interval(*e);
    row.psi = f.psi(X);
    row.phi = f.phi(X);
    for (int k = 0; k < n; ++k) {
      Interval v = f.Phi_k(k, X);
      row.Phi.push_back(v);
      rep.min_Phi[k] = have[k] ? min(rep.min_Phi[k], v) : v;
      have[k] = true;
    }
    rep.grid.push_back(std::move(row));
  }

  for (int k = 0; k < n; ++k) {
    MonotonicityRow m;
    m.k = k;
    m.increasing_required = k <= n - 2 || k == 0;
    if (auto d = f.Phi_direction(k)) {
      m.direction = *d;
      m.analytic = true;
    } else {
      bool up = true, down = true;
      for (std::size_t g = 1; g < rep.grid.size(); ++g) {
        const double a = rep.grid[g - 1].Phi[k].mid(), b = rep.grid[g].Phi[k].mid();
        if (b < a) up = false;
        if (b > a) down = false;
      }
      m.direction = up && down ? 0 : up ? 1 : down ? -1 : 2;
    }
    m.ok = m.direction != 2 && (!m.increasing_required || m.direction >= 0);
    rep.monotonicity.push_back(m);
  }

  if (auto* pw = dynamic_cast<const PowerTriple*>(&f)) {
    rep.constants = pw->constants();
    if (rep.constants->eps_exact)
      rep.eps_nonnegative = sgn(*rep.constants->eps_exact) >= 0 ? Check::Pass : Check::Fail;
    else
      rep.eps_nonnegative = compare_le(Interval(0.0), rep.constants->eps);
  }
  rep.holds = true;
  return rep;
}

ChainReport lemma41_chain(const minpoints::MinimalPointSequence& seq, const FunctionTriple& f, std::size_t i0) {
  const int n = f.n();
  ChainReport rep;
  if (n == 1) {
    // Both sides are Φ_0(X_{i_0+1}).
    if (i0 + 1 >= seq.size()) fail(Errc::InsufficientData, "chain needs X_{i_0+1}");
    rep.indices = {i0};
    rep.lhs = rep.rhs = f.Phi_k(0, Interval::from_real(seq[i0 + 1].X));
    rep.result = Check::Pass;
    return rep;
  }
  rep.indices = construction::select_indices(seq.points(), i0, n);
  if (rep.indices.back() + 1 >= seq.size())
    fail(Errc::InsufficientData, "chain needs X_{i_{n-1}+1}");
  auto X = [&](std::size_t i) { return to_interval(seq[i].X); };
  rep.lhs = Interval(1.0);
  for (auto i : rep.indices) rep.lhs = rep.lhs * f.Phi_k(0, X(i + 1));
  rep.rhs = f.Phi_k(n - 1, X(rep.indices.back() + 1));
  for (std::size_t t = 1; t < rep.indices.size(); ++t) rep.rhs = rep.rhs * X(rep.indices[t]);
  rep.result = compare_le(rep.lhs, rep.rhs);
  return rep;
}

}  // namespace sdalab::transference
