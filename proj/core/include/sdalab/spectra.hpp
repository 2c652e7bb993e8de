#pragma once

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

#include "sdalab/exponents.hpp"
#include "sdalab/minpoints.hpp"
#include "sdalab/rigorous/interval.hpp"
#include "sdalab/rigorous/real.hpp"

namespace sdalab::spectra {

using rigorous::Interval;
using rigorous::RigorousReal;

// x + (n-1) x^2 + ... + (n-1)^{n-1} x^n - 1, ascending coefficients.
std::vector<mpz_class> lambda_polynomial(int n);

struct LambdaN {
  int n = 2;
  mpq_class lo, hi;       // isolating interval, hi - lo <= tol
  RigorousReal value;     // algebraic descriptor on [lo, hi]
  Interval enclosure;
};
// Unique positive root, by exact bisection on [0, 1].
LambdaN lambda_n(int n, const mpq_class& tol = mpq_class(1, mpz_class("1000000000000000000000000000000")));

// The λ >= λ̂ with λ̂ + λ̂²/λ + ... + λ̂^n/λ^{n-1} = 1, nullopt when only the
// limit λ -> ∞ works (λ̂ = 1). Requires 1/n <= λ̂ <= 1.
std::optional<long double> frontier(long double lambda_hat, int n);

// (λ̂, λ) on `grid` evenly spaced points of [1/n, 1].
std::vector<std::pair<long double, std::optional<long double>>> frontier_table(int n, int grid);

struct LiouvilleReport {
  int n = 2;  // degree of θ
  minpoints::MinimalPointSequence seq;
  Interval c2_estimate;  // min over entries with X_i > 1 of X_i^{1/(n-1)} L_i
  std::size_t c2_index = 0;
  std::optional<transference::ExponentEstimate> exponents;  // nullopt when the tail is too short
  Interval lambda_n;
  std::optional<Interval> margin;  // λ_n - λ̂_est
};

// ξ = (1, θ, ..., θ^{n-1}, extra) for θ the root of `minpoly` in [lo, hi];
// `extra` is taken to lie outside Q(θ) on the caller's word.
LiouvilleReport liouville_preset(std::span<const mpz_class> minpoly, const mpq_class& lo, const mpq_class& hi,
                                 const RigorousReal& extra, const mpq_class& x_max,
                                 const minpoints::EnumerationOptions& opts = {},
                                 const mpq_class& tail_fraction = mpq_class(1, 2), std::size_t min_entries = 10);

}  // namespace sdalab::spectra
