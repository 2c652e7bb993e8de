#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

#include "sdalab/minpoints.hpp"
#include "sdalab/rigorous/interval.hpp"
#include "sdalab/transference.hpp"

namespace sdalab::transference {

struct ExtremalSample {
  rigorous::Interval log_norm;  // log ||y_i||
  rigorous::Interval log_L;     // log L(y_i)
  std::optional<model::IntegerPoint> point;
};

struct ExtremalParams {
  int n = 2;
  rigorous::Interval alpha, beta, eps, C;
};

enum class Condition { Pass, Tight, Fail, NotApplicable };
const char* to_string(Condition c);

struct ExtremalRow {
  std::size_t i = 0;
  // (i)  |α log||y_{i+1}|| - β log||y_i|| | <= C + 4ε(β/α)^n log||y_{i+1}||
  Condition growth = Condition::NotApplicable;
  std::optional<rigorous::Interval> growth_lhs, growth_rhs;
  // (ii) |log L(y_i) + β log||y_i|| | <= C + 4ε(β/α)^2 log||y_i||
  Condition decay = Condition::NotApplicable;
  rigorous::Interval decay_lhs, decay_rhs;
  // (iii) det(y_i, ..., y_{i+n}) != 0
  Condition independence = Condition::NotApplicable;
  std::optional<mpz_class> det;
  // (iv) no x in S \ {0} with ||x|| <= ||y_i|| and L(x) < L(y_i)
  Condition record = Condition::NotApplicable;
};

struct ExtremalReport {
  rigorous::Interval threshold;  // (1/(4n)) (α/β)^n min(α, β-α)
  Condition eps_within_threshold = Condition::NotApplicable;
  std::vector<ExtremalRow> rows;
  std::size_t count(Condition ExtremalRow::*field, Condition value) const;
};

// Three-valued verdicts: Pass when certified, Fail when certainly violated,
// Tight when the enclosures cannot decide. Condition (iv) is decided against
// `minimal` when given. Throws TooFewPoints for fewer than n + 1 samples.
ExtremalReport verify_extremal_samples(const std::vector<ExtremalSample>& samples, const ExtremalParams& p,
                                       const minpoints::MinimalPointSequence* minimal = nullptr);

// Samples built from integer points of the target in `minimal`.
ExtremalReport verify_extremal_sequence(const std::vector<model::IntegerPoint>& points,
                                        const minpoints::MinimalPointSequence& minimal, const ExtremalParams& p);

}  // namespace sdalab::transference
