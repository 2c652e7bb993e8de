#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

#include "sdalab/minpoints.hpp"
#include "sdalab/rigorous/interval.hpp"

namespace sdalab::transference {

struct SlopeRow {
  std::size_t i = 0;
  rigorous::Interval ordinary;                // -log L_i / log X_i
  std::optional<rigorous::Interval> uniform;  // -log L_i / log X_{i+1}
};

struct ExponentEstimate {
  rigorous::Interval lambda;      // max of the ordinary slopes over the tail
  rigorous::Interval lambda_hat;  // min of the uniform slopes over the tail
  std::size_t lambda_index = 0;
  std::size_t lambda_hat_index = 0;
  std::size_t tail_begin = 0;
  std::size_t tail_end = 0;  // one past the last entry
  std::vector<SlopeRow> series;
  double regression_slope = 0;  // least squares of -log L on log X, diagnostic only
};

// Step-envelope estimators on the last `tail_fraction` of the entries.
// Entries with X_i = 1 carry no slope information and are skipped. Throws
// TooFewPoints when the window holds fewer than `min_entries` entries.
ExponentEstimate estimate_exponents(const minpoints::MinimalPointSequence& seq,
                                    const mpq_class& tail_fraction = mpq_class(1, 2),
                                    std::size_t min_entries = 10);
// Same from log X_i and log L_i directly.
ExponentEstimate estimate_exponents(const std::vector<rigorous::Interval>& log_X,
                                    const std::vector<rigorous::Interval>& log_L,
                                    const mpq_class& tail_fraction = mpq_class(1, 2),
                                    std::size_t min_entries = 10);

}  // namespace sdalab::transference
