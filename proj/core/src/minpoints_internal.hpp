#pragma once

#include <cstdint>
#include <vector>

#include "sdalab/minpoints.hpp"

namespace sdalab::minpoints::detail {

// Small-coordinate candidate with a double enclosure [l_lo, l_hi] of L.
struct Candidate {
  std::vector<std::int64_t> x;
  std::int64_t norm_sq = 0;
  double l_lo = 0;
  double l_hi = 0;
};

// Double-precision view of the target with rigorous error terms.
class FastTarget {
 public:
  explicit FastTarget(const TargetPoint& xi);

  std::size_t size() const noexcept { return r_.size(); }
  double ratio(std::size_t k) const { return r_[k]; }
  // Bound on |computed - exact| for x_k - ratio(k) x_0.
  double error(std::size_t k, double x0, double xk) const;
  double xi0_lo() const noexcept { return a_lo_; }
  double xi0_hi() const noexcept { return a_hi_; }
  // Fills l_lo and l_hi (x_0 >= 0 assumed).
  void bound_L(Candidate& c) const;

 private:
  std::vector<double> r_;
  std::vector<double> rad_;
  double a_lo_ = 0;
  double a_hi_ = 0;
};

bool less_candidate(const Candidate& a, const Candidate& b);
IntegerPoint to_point(const Candidate& c);
bool member(const ApproxSet& s, const Candidate& c);

// Keeps the candidates that could still set a new record given double
// bounds; `sorted` must be ordered by less_candidate.
std::vector<Candidate> prefilter(const std::vector<Candidate>& sorted);

// Certified selection of minimal points from sorted survivors. Throws
// DependentCoordinates, TieUnresolved.
std::vector<MinimalPoint> certified_scan(const TargetPoint& xi, const std::vector<Candidate>& survivors,
                                         long cap);

// All canonical nonzero members of S with squared norm <= bound.
std::vector<Candidate> ball_candidates(std::size_t dim, std::int64_t bound, const ApproxSet& s,
                                       const FastTarget& ft);

// Largest squared norm allowed by x_max, checked to fit in 62 bits.
std::int64_t norm_sq_bound(const mpq_class& x_max);

}  // namespace sdalab::minpoints::detail
