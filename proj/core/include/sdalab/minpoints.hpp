#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "sdalab/model.hpp"
#include "sdalab/rigorous/interval.hpp"

namespace sdalab::minpoints {

using model::ApproxSet;
using model::IntegerPoint;
using model::TargetPoint;
using rigorous::RigorousReal;

struct MinimalPoint {
  std::size_t index = 0;
  IntegerPoint point;
  RigorousReal X;  // Euclidean norm
  RigorousReal L;  // L_xi(point)
};

// Minimal points x_0, x_1, ... of xi relative to S, complete for all norms up
// to exhausted_up_to: norms strictly increase, L strictly decreases, and no
// member of S shorter than x_{i+1} beats L_i.
struct MinimalPointSequence {
  TargetPoint target;
  ApproxSet set;
  std::vector<MinimalPoint> entries;
  mpq_class exhausted_up_to = 0;

  std::size_t size() const noexcept { return entries.size(); }
  const MinimalPoint& operator[](std::size_t i) const { return entries[i]; }
  std::vector<IntegerPoint> points() const;
};

struct EnumerationOptions {
  long cap = rigorous::default_precision_cap();
  unsigned threads = 1;
};

// For every x_0 only the points whose coordinates are the nearest admissible
// integers to (xi_k / xi_0) x_0 can beat a record below |xi_0|/2. Everything
// up to the first such record is scanned exhaustively. Throws TieUnresolved,
// DependentCoordinates, EmptySet.
MinimalPointSequence enumerate_minimal_points(const TargetPoint& xi, const ApproxSet& s,
                                              const mpq_class& x_max,
                                              const EnumerationOptions& opts = {});

// Reference scan used for cross-checking: every canonical point in a ball of
// radius R, then, beyond R, every point with |x_k - (xi_k/xi_0) x_0| below the
// record at R divided by |xi_0| (no point outside that slab can become a new
// record). R is the largest radius whose cube holds at most `budget` points.
MinimalPointSequence exhaustive_minimal_points(const TargetPoint& xi, const ApproxSet& s,
                                               const mpq_class& x_max,
                                               long cap = rigorous::default_precision_cap(),
                                               double budget = 2e7);

// Rebuilds a sequence from stored points (norms and L values recomputed).
MinimalPointSequence from_points(const TargetPoint& xi, const ApproxSet& s,
                                 const std::vector<IntegerPoint>& points, const mpq_class& x_max);

// L_xi(X; S) = L_i for the largest i with X_i <= X; nullopt stands for the
// empty minimum (infinity). Throws BeyondCertifiedRange past exhausted_up_to.
std::optional<RigorousReal> envelope(const MinimalPointSequence& seq, const mpq_class& X);

struct DirichletReport {
  rigorous::Interval sup;  // max_i X_{i+1}^{1/n} L_i
  std::size_t index = 0;   // attaining i
};
DirichletReport dirichlet_check(const MinimalPointSequence& seq);

// i, x_0..x_n, normSq, X_i, L_i, log10(X_i), -log10(L_i)
void write_csv(std::ostream& os, const MinimalPointSequence& seq);
// Reads the point columns back from a file produced by write_csv.
std::vector<IntegerPoint> read_csv_points(std::istream& is);

}  // namespace sdalab::minpoints
