#include "sdalab/extremal.hpp"

#include "sdalab/error.hpp"
#include "sdalab/intmat.hpp"

namespace sdalab::transference {

using rigorous::Interval;

namespace {

Condition decide_le(const Interval& a, const Interval& b) {
  if (a.certainly_le(b)) return Condition::Pass;
  if (b.certainly_less(a)) return Condition::Fail;
  return Condition::Tight;
}

Interval ipow(const Interval& x, int e) {
  Interval r(1.0);
  for (int i = 0; i < e; ++i) r = r * x;
  return r;
}

// Largest j with X_j^2 <= norm_sq, or nullopt when norm_sq lies below X_0^2
// or past the certified range.
std::optional<std::size_t> record_index(const minpoints::MinimalPointSequence& seq, const mpz_class& norm_sq,
                                        bool& beyond) {
  beyond = mpq_class(norm_sq) > seq.exhausted_up_to * seq.exhausted_up_to;
  if (beyond) return std::nullopt;
  std::optional<std::size_t> j;
  for (std::size_t i = 0; i < seq.size() && seq[i].point.norm_sq() <= norm_sq; ++i) j = i;
  return j;
}

}  // namespace

const char* to_string(Condition c) {
  switch (c) {
    case Condition::Pass: return "pass";
    case Condition::Tight: return "tight";
    case Condition::Fail: return "fail";
    case Condition::NotApplicable: return "n/a";
  }
  return "?";
}

std::size_t ExtremalReport::count(Condition ExtremalRow::*field, Condition value) const {
  std::size_t c = 0;
  for (const auto& r : rows)
    if (r.*field == value) ++c;
  return c;
}

ExtremalReport verify_extremal_samples(const std::vector<ExtremalSample>& samples, const ExtremalParams& p,
                                       const minpoints::MinimalPointSequence* minimal) {
  if (p.n < 1) fail(Errc::DomainError, "n must be at least 1");
  if (samples.size() < static_cast<std::size_t>(p.n) + 1)
    fail(Errc::TooFewPoints, "need at least n + 1 points");
  if (!(p.alpha.lower() > 0) || !(p.beta.lower() > 0)) fail(Errc::DomainError, "alpha and beta must be positive");

  ExtremalReport rep;
  try {
    rep.threshold = eps_threshold(p.alpha, p.beta, p.n);
    rep.eps_within_threshold = decide_le(p.eps, rep.threshold);
  } catch (const Error& e) {
    if (e.code() != Errc::DomainError) throw;
    rep.eps_within_threshold = Condition::NotApplicable;
  }

  const Interval four(4.0);
  const Interval ratio = p.beta / p.alpha;
  const Interval slope_i = four * p.eps * ipow(ratio, p.n);
  const Interval slope_ii = four * p.eps * ratio * ratio;

  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& y = samples[i];
    ExtremalRow row;
    row.i = i;
    if (i + 1 < samples.size()) {
      const auto& z = samples[i + 1];
      row.growth_lhs = abs(p.alpha * z.log_norm - p.beta * y.log_norm);
      row.growth_rhs = p.C + slope_i * z.log_norm;
      row.growth = decide_le(*row.growth_lhs, *row.growth_rhs);
    }
    row.decay_lhs = abs(y.log_L + p.beta * y.log_norm);
    row.decay_rhs = p.C + slope_ii * y.log_norm;
    row.decay = decide_le(row.decay_lhs, row.decay_rhs);

    if (i + p.n < samples.size()) {
      std::vector<linalg::IntVector> rows;
      bool all = true;
      for (int k = 0; k <= p.n && all; ++k) {
        const auto& s = samples[i + k];
        if (!s.point || s.point->size() != static_cast<std::size_t>(p.n) + 1)
          all = false;
        else
          rows.push_back(s.point->coords());
      }
      if (all) {
        row.det = linalg::determinant(linalg::IntMatrix::from_rows(rows, p.n + 1));
        row.independence = sgn(*row.det) != 0 ? Condition::Pass : Condition::Fail;
      }
    }

    if (minimal && y.point) {
      bool beyond = false;
      const auto j = record_index(*minimal, y.point->norm_sq(), beyond);
      if (beyond) {
        row.record = Condition::NotApplicable;
      } else if (!j) {
        // Nothing in S is that short.
        row.record = Condition::Pass;
      } else if ((*minimal)[*j].point == *y.point) {
        row.record = Condition::Pass;
      } else {
        const auto Ly = model::L_value(minimal->target, *y.point);
        switch (rigorous::compare(Ly, (*minimal)[*j].L)) {
          case rigorous::Ordering::Greater: row.record = Condition::Fail; break;
          case rigorous::Ordering::Less: row.record = Condition::Pass; break;
          case rigorous::Ordering::Indistinguishable: row.record = Condition::Tight; break;
        }
      }
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

ExtremalReport verify_extremal_sequence(const std::vector<model::IntegerPoint>& points,
                                        const minpoints::MinimalPointSequence& minimal, const ExtremalParams& p) {
  std::vector<ExtremalSample> samples;
  samples.reserve(points.size());
  for (const auto& y : points) {
    if (y.is_zero()) fail(Errc::ZeroPoint, "extremal sequences consist of non-zero points");
    if (y.size() != minimal.target.size()) fail(Errc::AmbientMismatch, "point dimension differs from target");
    ExtremalSample s;
    s.log_norm = log(Interval::point(mpq_class(y.norm_sq()))) * Interval(0.5);
    s.log_L = log(Interval::from_real(model::L_value(minimal.target, y)));
    s.point = y;
    samples.push_back(std::move(s));
  }
  return verify_extremal_samples(samples, p, &minimal);
}

}  // namespace sdalab::transference
