#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sdalab/minpoints.hpp"
#include "sdalab/rigorous/interval.hpp"

namespace sdalab::transference {

using rigorous::Interval;

// λ̂ + λ̂²/λ + ... + λ̂^n/λ^{n-1}; lambda = nullopt stands for λ = ∞, where
// every term but the first vanishes.
Interval mm_lhs(const Interval& lambda_hat, const std::optional<Interval>& lambda, int n);
double mm_lhs(double lambda_hat, std::optional<double> lambda, int n);

// Parameters of the power triple ψ = bX^{-β}, φ = aX^{-α},
// θ = (a/b)^{-1/β} X^{α/β}.
struct PowerProfile {
  int n = 1;
  Interval a, b, alpha, beta;
  std::optional<std::array<mpq_class, 4>> exact;  // a, b, alpha, beta

  static PowerProfile rational(int n, const mpq_class& a, const mpq_class& b, const mpq_class& alpha,
                               const mpq_class& beta);
  static PowerProfile real(int n, const Interval& a, const Interval& b, const Interval& alpha,
                           const Interval& beta);
};

// Φ_k = c_k X^{ε_k} with ε_k = 1 - Σ_{j=0}^{k} α^{j+1}/β^j and
// c_k = a^{k+1} (a/b)^{δ_k}, δ_k = Σ_{j=1}^{k} Σ_{i=1}^{j} (α/β)^i.
// ε = ε_{n-1}, δ = δ_{n-1}.
struct EpsilonDelta {
  Interval eps, delta;
  std::vector<Interval> eps_k, delta_k, c_k;
  // Filled when the profile is rational.
  std::optional<mpq_class> eps_exact, delta_exact;
  std::vector<mpq_class> eps_k_exact, delta_k_exact;
};
EpsilonDelta epsilon_delta(const PowerProfile& p);

// (1/(4n)) (α/β)^n min(α, β - α); requires 0 < α <= β.
mpq_class eps_threshold(const mpq_class& alpha, const mpq_class& beta, int n);
Interval eps_threshold(const Interval& alpha, const Interval& beta, int n);

// Decreasing lower and upper envelopes ψ, φ with φ = ψ∘θ.
class FunctionTriple {
 public:
  virtual ~FunctionTriple() = default;
  virtual int n() const = 0;
  virtual Interval psi(const Interval& X) const = 0;
  virtual Interval phi(const Interval& X) const = 0;
  virtual Interval theta(const Interval& X) const = 0;
  virtual std::string name() const = 0;
  // Monotonicity of Φ_k: +1 increasing, -1 decreasing, 0 constant; nullopt
  // when it cannot be decided analytically.
  virtual std::optional<int> Phi_direction(int k) const = 0;

  // φ_k(X) = φ(θ^k X) ... φ(θ X) φ(X) and Φ_k(X) = X φ_k(X), by iteration.
  Interval phi_k(int k, const Interval& X) const;
  Interval Phi_k(int k, const Interval& X) const;
};

class PowerTriple final : public FunctionTriple {
 public:
  explicit PowerTriple(PowerProfile p);
  int n() const override { return p_.n; }
  Interval psi(const Interval& X) const override;
  Interval phi(const Interval& X) const override;
  Interval theta(const Interval& X) const override;
  std::string name() const override { return "power"; }
  std::optional<int> Phi_direction(int k) const override;

  const PowerProfile& profile() const noexcept { return p_; }
  const EpsilonDelta& constants() const noexcept { return ed_; }
  // Closed forms of φ_k and Φ_k.
  Interval phi_k_closed(int k, const Interval& X) const;
  Interval Phi_k_closed(int k, const Interval& X) const;

 private:
  PowerProfile p_;
  EpsilonDelta ed_;
};

// φ = aX^{-α} log^σ X and ψ = bX^{-β} log^ρ X on X > 1. θ has no closed
// form; it is found by bisection on ψ(θ) = φ(X) to relative 1e-12 and the
// result is widened by that tolerance.
class PowerLogTriple final : public FunctionTriple {
 public:
  PowerLogTriple(int n, double a, double b, double alpha, double beta, double sigma, double rho);
  int n() const override { return n_; }
  Interval psi(const Interval& X) const override;
  Interval phi(const Interval& X) const override;
  Interval theta(const Interval& X) const override;
  std::string name() const override { return "power-log"; }
  std::optional<int> Phi_direction(int) const override { return std::nullopt; }

 private:
  int n_;
  double a_, b_, alpha_, beta_, sigma_, rho_;
};

struct PhiValues {
  Interval phi_iterated, Phi_iterated;
  Interval phi_closed, Phi_closed;
};
// Both evaluation paths for 0 <= k <= n-1 and X > 0.
PhiValues phi_functions(const PowerProfile& p, int k, const Interval& X);

// a = max over steps of L_i X_{i+1}^α and b = min of L_i X_i^β on [A, X_max],
// each pushed outward by `margin` (relative) so that the sandwich is strict.
PowerProfile fit_power_profile(const minpoints::MinimalPointSequence& seq, const mpq_class& alpha,
                               const mpq_class& beta, const mpq_class& A, double margin = 1e-9);

enum class Check { Pass, Tight, Fail };
const char* to_string(Check c);

struct SandwichOptions {
  mpq_class A = 1;
  std::size_t grid_points = 64;
};

struct GridRow {
  double X = 0;
  std::optional<Interval> envelope;  // nullopt = infinity
  Interval psi, phi;
  std::vector<Interval> Phi;  // Φ_0 .. Φ_{n-1}
};

struct MonotonicityRow {
  int k = 0;
  int direction = 0;      // +1, -1, 0
  bool analytic = false;  // false: grid scan only
  bool increasing_required = false;
  bool ok = true;
};

struct SandwichReport {
  std::string family;
  mpq_class A;
  mpq_class x_max;
  bool holds = true;
  std::size_t steps_checked = 0;
  std::size_t tight = 0;
  std::vector<GridRow> grid;
  std::vector<MonotonicityRow> monotonicity;
  std::vector<Interval> min_Phi;  // over the grid, per k
  std::optional<EpsilonDelta> constants;
  std::optional<Check> eps_nonnegative;
  // L_i <= φ(X_{i+1}) and X_i >= θ(X_{i+1}) on the tail above A.
  std::size_t consequence_checked = 0;
  std::size_t consequence_failures = 0;
  std::size_t consequence_tight = 0;
};

// ψ(X) <= L_ξ(X;S) <= φ(X) on [A, X_max], certified on every step of the
// envelope (ψ is largest at the left end of a step, φ smallest at the right
// end) and sampled on a geometric grid for reporting. Throws SandwichViolated
// with a witness, DomainTooShort when fewer than two minimal points lie in
// [A, X_max].
SandwichReport check_sandwich(const minpoints::MinimalPointSequence& seq, const FunctionTriple& f,
                              const SandwichOptions& opts = {});

struct ChainReport {
  std::vector<std::size_t> indices;
  Interval lhs;  // Φ_0(X_{i_0+1}) ... Φ_0(X_{i_{n-1}+1})
  Interval rhs;  // X_{i_1} ... X_{i_{n-1}} Φ_{n-1}(X_{i_{n-1}+1})
  Check result = Check::Tight;
};
ChainReport lemma41_chain(const minpoints::MinimalPointSequence& seq, const FunctionTriple& f, std::size_t i0);

}  // namespace sdalab::transference
