#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "minpoints_internal.hpp"
#include "sdalab/error.hpp"

namespace sdalab::minpoints {

namespace {

using detail::Candidate;
using detail::FastTarget;

std::int64_t isqrt(std::int64_t v) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

// Membership on machine integers: congruence classes for both signs, or
// reduction against a Hermite basis.
class FastMember {
 public:
  explicit FastMember(const ApproxSet& s) : s_(s) {
    if (s.kind() == ApproxSet::Kind::Congruence && s.modulus().fits_slong_p()) {
      m_ = s.modulus().get_si();
      for (const auto& [k, list] : s.residue_map()) {
        std::vector<std::int64_t> r;
        for (const auto& q : list) r.push_back(q.get_si());
        res_.emplace_back(k, std::move(r));
      }
      machine_ = true;
    } else if (s.kind() == ApproxSet::Kind::Sublattice) {
      bool fits = true;
      for (std::size_t i = 0; i < s.hnf().rows(); ++i) {
        std::vector<std::int64_t> row;
        for (std::size_t j = 0; j < s.hnf().cols(); ++j) {
          fits = fits && s.hnf()(i, j).fits_sint_p();
          row.push_back(fits ? s.hnf()(i, j).get_si() : 0);
        }
        hnf_.push_back(std::move(row));
      }
      machine_ = fits;
    }
  }

  bool operator()(const Candidate& c) const {
    switch (s_.kind()) {
      case ApproxSet::Kind::Full:
        return true;
      case ApproxSet::Kind::Congruence:
        if (!machine_) return detail::member(s_, c);
        return congruent(c, 1) || congruent(c, -1);
      case ApproxSet::Kind::Sublattice:
        if (!machine_) return detail::member(s_, c);
        return in_lattice(c);
    }
    return false;
  }

 private:
  bool congruent(const Candidate& c, std::int64_t sigma) const {
    for (const auto& [k, r] : res_) {
      std::int64_t v = (sigma * c.x[k]) % m_;
      if (v < 0) v += m_;
      if (!std::binary_search(r.begin(), r.end(), v)) return false;
    }
    return true;
  }
  bool in_lattice(const Candidate& c) const {
    std::vector<std::int64_t> v = c.x;
    std::size_t col = 0;
    for (const auto& row : hnf_) {
      while (col < row.size() && row[col] == 0) ++col;
      if (col == row.size()) break;
      if (v[col] % row[col] != 0) return false;
      const std::int64_t q = v[col] / row[col];
      for (std::size_t j = col; j < row.size(); ++j) v[j] -= q * row[j];
    }
    return std::all_of(v.begin(), v.end(), [](std::int64_t e) { return e == 0; });
  }

  const ApproxSet& s_;
  bool machine_ = false;
  std::int64_t m_ = 1;
  std::vector<std::pair<std::size_t, std::vector<std::int64_t>>> res_;
  std::vector<std::vector<std::int64_t>> hnf_;
};

// Visits every canonical nonzero point with squared norm <= bound.
void for_each_in_ball(std::size_t dim, std::int64_t bound, const std::function<void(Candidate&)>& visit) {
  Candidate c;
  c.x.assign(dim, 0);
  std::function<void(std::size_t, std::int64_t, bool)> rec = [&](std::size_t k, std::int64_t partial,
                                                                 bool nonzero) {
    if (k == dim) {
      if (!nonzero) return;
      c.norm_sq = partial;
      visit(c);
      return;
    }
    const std::int64_t room = isqrt(bound - partial);
    for (std::int64_t v = nonzero ? -room : 0; v <= room; ++v) {
      c.x[k] = v;
      rec(k + 1, partial + v * v, nonzero || v != 0);
    }
    c.x[k] = 0;
  };
  rec(0, 0, false);
}

}  // namespace

MinimalPointSequence exhaustive_minimal_points(const TargetPoint& xi, const ApproxSet& s,
                                               const mpq_class& x_max, long cap, double budget) {
  const std::int64_t bound = detail::norm_sq_bound(x_max);
  const FastTarget ft(xi);
  const FastMember in_s(s);
  const std::size_t dim = xi.size();

  std::int64_t radius = 1;
  while ((radius + 2) * std::pow(2.0 * radius + 3, static_cast<double>(dim - 1)) <= budget) ++radius;
  const std::int64_t inner = std::min(radius * radius, bound);

  // Two passes over the inner ball: per-norm minima of the upper bounds, then
  // the points whose lower bound beats every shorter norm.
  std::vector<double> group_hi(static_cast<std::size_t>(inner) + 1, std::numeric_limits<double>::infinity());
  for_each_in_ball(dim, inner, [&](Candidate& c) {
    if (!in_s(c)) return;
    ft.bound_L(c);
    auto& g = group_hi[static_cast<std::size_t>(c.norm_sq)];
    g = std::min(g, c.l_hi);
  });
  std::vector<double> before(group_hi.size());
  double run = std::numeric_limits<double>::infinity();
  for (std::size_t g = 0; g < group_hi.size(); ++g) {
    before[g] = run;
    run = std::min(run, group_hi[g]);
  }
  std::vector<Candidate> pool;
  for_each_in_ball(dim, inner, [&](Candidate& c) {
    if (!in_s(c)) return;
    ft.bound_L(c);
    if (c.l_lo < before[static_cast<std::size_t>(c.norm_sq)]) pool.push_back(c);
  });
  std::sort(pool.begin(), pool.end(), detail::less_candidate);
  if (pool.empty() && inner == bound) fail(Errc::EmptySet, "no nonzero member of S with norm <= " + x_max.get_str());

  if (inner < bound) {
    if (pool.empty()) fail(Errc::DomainError, "reference scan found no member of S in its inner ball");
    const auto inner_seq = detail::certified_scan(xi, pool, cap);
    const auto lb = rigorous::refine(inner_seq.back().L, 64).enclosure();
    const double slack = std::nextafter(lb.upper().get_d() * (1 + 1e-12), 2.0) / ft.xi0_lo();
    if (!(slack < 1)) fail(Errc::DomainError, "reference scan radius too small for this target");
    // Beyond the inner ball a new record has L below the record at its edge,
    // which confines every |x_k - (xi_k/xi_0) x_0| below `slack`.
    const std::int64_t x0_max = isqrt(bound);
    Candidate c;
    c.x.assign(dim, 0);
    std::vector<std::pair<std::int64_t, std::int64_t>> range(dim);
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t k, std::int64_t partial) {
      if (partial > bound) return;
      if (k == dim) {
        if (partial <= inner) return;
        c.norm_sq = partial;
        if (!in_s(c)) return;
        ft.bound_L(c);
        pool.push_back(c);
        return;
      }
      for (std::int64_t v = range[k].first; v <= range[k].second; ++v) {
        c.x[k] = v;
        rec(k + 1, partial + v * v);
      }
    };
    for (std::int64_t x0 = 1; x0 <= x0_max; ++x0) {
      const double dx0 = static_cast<double>(x0);
      for (std::size_t k = 1; k < dim; ++k) {
        const double t = ft.ratio(k) * dx0;
        const double e = ft.error(k, dx0, std::abs(t) + 1) + slack;
        range[k] = {static_cast<std::int64_t>(std::floor(t - e)), static_cast<std::int64_t>(std::ceil(t + e))};
      }
      c.x[0] = x0;
      rec(1, x0 * x0);
    }
    std::sort(pool.begin(), pool.end(), detail::less_candidate);
  }

  MinimalPointSequence seq;
  seq.target = xi;
  seq.set = s;
  seq.exhausted_up_to = x_max;
  seq.entries = detail::certified_scan(xi, detail::prefilter(pool), cap);
  return seq;
}

}  // namespace sdalab::minpoints
