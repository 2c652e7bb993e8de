#include "sdalab/construction.hpp"

#include <cmath>

#include "sdalab/error.hpp"

namespace sdalab::construction {

using linalg::IntMatrix;
using rigorous::Interval;

namespace {

std::size_t rank_of(const std::vector<IntegerPoint>& points, std::size_t i, std::size_t j) {
  IntMatrix m(0, points[i].size());
  for (std::size_t r = i; r <= j; ++r) m.append_row(points[r].coords());
  return linalg::rank(m);
}

}  // namespace

RationalSubspace span(const std::vector<IntegerPoint>& points, std::size_t i, std::size_t j) {
  if (j >= points.size() || i > j) fail(Errc::InsufficientData, "span of an empty or out-of-range index window");
  IntMatrix m(0, points[i].size());
  for (std::size_t r = i; r <= j; ++r) m.append_row(points[r].coords());
  return subspaces::saturate(m);
}

std::vector<std::size_t> select_indices(const std::vector<IntegerPoint>& points, std::size_t i0, int n) {
  if (n < 2) fail(Errc::DomainError, "the subspace families need n >= 2");
  for (const auto& p : points)
    if (p.size() != static_cast<std::size_t>(n) + 1)
      fail(Errc::AmbientMismatch, "point " + p.to_string() + " is not in R^" + std::to_string(n + 1));
  if (i0 + 1 >= points.size())
    fail(Errc::InsufficientData, "need at least two points from index " + std::to_string(i0));
  if (rank_of(points, i0, i0 + 1) != 2)
    fail(Errc::DomainError, "x_" + std::to_string(i0) + " and its successor are proportional");

  std::vector<std::size_t> idx{i0};
  IntMatrix m(0, points[i0].size());
  m.append_row(points[i0].coords());
  std::size_t rank = 1;
  // i_t = (first j whose prefix span has dimension t + 2) - 1.
  for (std::size_t j = i0 + 1; j < points.size() && idx.size() < static_cast<std::size_t>(n); ++j) {
    m.append_row(points[j].coords());
    const std::size_t r = linalg::rank(m);
    if (r > rank) {
      rank = r;
      if (rank >= 3) idx.push_back(j - 1);
    }
  }
  if (idx.size() < static_cast<std::size_t>(n))
    fail(Errc::InsufficientData, "the points after x_" + std::to_string(i0) + " do not yet span R^" +
                                     std::to_string(n + 1));
  return idx;
}

SubspaceFamily build_subspace_family(const std::vector<IntegerPoint>& points,
                                     const std::vector<std::size_t>& indices) {
  SubspaceFamily fam;
  fam.n = static_cast<int>(indices.size());
  fam.points = points;
  fam.indices = indices;
  if (fam.n < 2) fail(Errc::DomainError, "the subspace families need n >= 2");
  if (indices.back() + 1 >= points.size())
    fail(Errc::InsufficientData, "x_{i_{n-1}+1} is not available");
  const std::size_t i0 = indices[0];
  fam.s_table.resize(indices.size());
  fam.U.resize(indices.size());
  fam.V.resize(indices.size());
  for (int t = 0; t < fam.n; ++t) {
    const std::size_t it = indices[t];
    // Walk s down from i_t; dim V[s, i_t + 1] grows by at most one per step.
    std::size_t s = it;
    for (int k = 1; k <= t + 1; ++k) {
      std::size_t found = s;
      bool ok = false;
      for (std::size_t c = s + 1; c-- > i0;) {
        const std::size_t r = rank_of(points, c, it + 1);
        if (r == static_cast<std::size_t>(k) + 1) {
          found = c;
          ok = true;
          break;
        }
        if (r > static_cast<std::size_t>(k) + 1) break;
      }
      if (!ok)
        fail(Errc::InsufficientData, "no s(" + std::to_string(t) + "," + std::to_string(k) + ") above i_0");
      fam.s_table[t].push_back(found);
      fam.U[t].push_back(span(points, found, it));
      fam.V[t].push_back(span(points, found, it + 1));
      s = found;
    }
  }
  return fam;
}

bool IdentityReport::all_pass() const {
  if (!s_table_decreasing || !dimensions_ok) return false;
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

IdentityReport verify_family_identities(const SubspaceFamily& fam) {
  IdentityReport rep;
  const int n = fam.n;
  const auto& pts = fam.points;
  const std::size_t i0 = fam.indices[0];
  const std::size_t ambient = pts[i0].size();

  rep.s_table_decreasing = true;
  rep.dimensions_ok = true;
  for (int t = 0; t < n; ++t) {
    if (fam.s(t, 1) != fam.indices[t]) rep.s_table_decreasing = false;
    for (int k = 2; k <= t + 1; ++k)
      if (!(fam.s(t, k) < fam.s(t, k - 1))) rep.s_table_decreasing = false;
    if (fam.s(t, t + 1) < i0) rep.s_table_decreasing = false;
    for (int k = 1; k <= t + 1; ++k) {
      if (fam.u(t, k).dim() != static_cast<std::size_t>(k)) rep.dimensions_ok = false;
      if (fam.v(t, k + 1).dim() != static_cast<std::size_t>(k) + 1) rep.dimensions_ok = false;
    }
    if (span(pts, i0, fam.indices[t]).dim() != static_cast<std::size_t>(t) + 1) rep.dimensions_ok = false;
  }

  rep.checks.push_back({"whole", n - 1, 0,
                        span(pts, i0, fam.indices[n - 1] + 1) == RationalSubspace::whole(ambient)});
  for (int t = 1; t < n; ++t)
    rep.checks.push_back({"chain", t, 0, span(pts, i0, fam.indices[t - 1] + 1) == span(pts, i0, fam.indices[t])});
  for (int t = 0; t < n; ++t) {
    for (int k = 2; k <= t + 1; ++k) {
      rep.checks.push_back({"sum", t, k, fam.v(t, k + 1) == subspaces::sum(fam.u(t, k), fam.v(t, k))});
      rep.checks.push_back({"intersection", t, k, fam.u(t, k - 1) == subspaces::intersect(fam.u(t, k), fam.v(t, k))});
    }
  }
  for (int t = 1; t < n; ++t) {
    const RationalSubspace w = span(pts, i0, fam.indices[t - 1] + 1);
    rep.checks.push_back({"bridge", t, t + 1, fam.u(t, t + 1) == w && w == fam.v(t - 1, t + 1)});
  }
  return rep;
}

HeightProductRatio lemma32_check(const SubspaceFamily& fam, int k) {
  if (k < 1 || k > fam.n - 1)
    fail(Errc::LevelOutOfRange, "level " + std::to_string(k) + " outside 1.." + std::to_string(fam.n - 1));
  HeightProductRatio r;
  r.lhs_sq = 1;
  r.rhs_sq = 1;
  for (int t = k; t <= fam.n - 1; ++t) r.lhs_sq *= fam.u(t, k).squared_height();
  for (int t = k - 1; t <= fam.n - 1; ++t) r.rhs_sq *= fam.v(t, k + 1).squared_height();
  r.ratio_sq = mpq_class(r.lhs_sq, r.rhs_sq);
  r.ratio_sq.canonicalize();
  r.ratio = std::sqrt(r.ratio_sq.get_d());
  return r;
}

Theorem31Report theorem31_ratio(const minpoints::MinimalPointSequence& seq, std::size_t i0) {
  Theorem31Report rep;
  rep.indices = select_indices(seq.points(), i0, seq.target.n());
  if (rep.indices.back() + 1 >= seq.size()) fail(Errc::InsufficientData, "x_{i_{n-1}+1} is not available");
  Interval lhs = Interval::point(1);
  Interval rhs = Interval::point(1);
  for (std::size_t t = 0; t < rep.indices.size(); ++t) {
    const std::size_t it = rep.indices[t];
    if (t >= 1) lhs = lhs * Interval::from_real(seq[it].X);
    rhs = rhs * Interval::from_real(seq[it].L) * Interval::from_real(seq[it + 1].X);
  }
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.ratio = lhs / rhs;
  return rep;
}

}  // namespace sdalab::construction
