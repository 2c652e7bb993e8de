#include "sdalab/minpoints.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "minpoints_internal.hpp"
#include "sdalab/error.hpp"

namespace sdalab::minpoints {

using rigorous::compare;
using rigorous::Interval;
using rigorous::Ordering;

std::vector<IntegerPoint> MinimalPointSequence::points() const {
  std::vector<IntegerPoint> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.point);
  return out;
}

namespace detail {

namespace {

constexpr double kRoundRel = 4.5e-16;

double round_up(double v) { return std::nextafter(v * (1 + 1e-15), std::numeric_limits<double>::infinity()); }
double round_down(double v) { return std::max(0.0, v * (1 - 1e-15)); }

}  // namespace

FastTarget::FastTarget(const TargetPoint& xi) {
  for (std::size_t k = 0; k < xi.size(); ++k) {
    const auto b = rigorous::refine(xi.ratio(k), 128).enclosure();
    r_.push_back(b.mid.get_d());
    rad_.push_back(round_up(b.rad.get_d() + std::abs(b.mid.get_d()) * 2.3e-16));
  }
  const auto a = rigorous::refine(xi.abs_xi0(), 64).enclosure();
  a_lo_ = round_down(a.lower().get_d());
  a_hi_ = round_up(a.upper().get_d());
}

double FastTarget::error(std::size_t k, double x0, double xk) const {
  return x0 * rad_[k] + (std::abs(r_[k]) * x0 + std::abs(xk)) * kRoundRel + 1e-300;
}

void FastTarget::bound_L(Candidate& c) const {
  const double x0 = static_cast<double>(c.x[0]);
  double lo = 0;
  double hi = 0;
  for (std::size_t k = 1; k < c.x.size(); ++k) {
    const double xk = static_cast<double>(c.x[k]);
    if (c.x[0] == 0) {
      lo = std::max(lo, std::abs(xk));
      hi = std::max(hi, std::abs(xk));
      continue;
    }
    const double d = std::abs(xk - r_[k] * x0);
    const double e = error(k, x0, xk);
    lo = std::max(lo, d - e);
    hi = std::max(hi, d + e);
  }
  c.l_lo = round_down(a_lo_ * lo);
  c.l_hi = round_up(a_hi_ * hi);
}

bool less_candidate(const Candidate& a, const Candidate& b) {
  if (a.norm_sq != b.norm_sq) return a.norm_sq < b.norm_sq;
  return a.x < b.x;
}

IntegerPoint to_point(const Candidate& c) {
  std::vector<mpz_class> v;
  v.reserve(c.x.size());
  for (auto e : c.x) v.emplace_back(static_cast<long>(e));
  return IntegerPoint(std::move(v));
}

bool member(const ApproxSet& s, const Candidate& c) {
  if (s.kind() == ApproxSet::Kind::Full) return true;
  return model::member(s, to_point(c));
}

std::vector<Candidate> prefilter(const std::vector<Candidate>& sorted) {
  std::vector<Candidate> out;
  double best_hi = std::numeric_limits<double>::infinity();
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i;
    double group_hi = std::numeric_limits<double>::infinity();
    while (j < sorted.size() && sorted[j].norm_sq == sorted[i].norm_sq) {
      if (sorted[j].l_lo < best_hi) out.push_back(sorted[j]);
      group_hi = std::min(group_hi, sorted[j].l_hi);
      ++j;
    }
    best_hi = std::min(best_hi, group_hi);
    i = j;
  }
  return out;
}

namespace {

// Under Q-linear independence of the coordinates, L(x) = L(y) exactly iff the
// keys agree: a branch |xi_0 x_k - xi_k x_0| with x_0 != 0 determines
// (k, x_0, x_k), and points with x_0 = 0 have L = |xi_0| max |x_k|.
struct TieKey {
  int k = -1;
  mpz_class x0;
  mpz_class xk;
  friend bool operator==(const TieKey&, const TieKey&) = default;
};

struct Evaluated {
  IntegerPoint point;
  RigorousReal L;
  TieKey key;
};

Evaluated evaluate(const TargetPoint& xi, const Candidate& c, long cap) {
  Evaluated e;
  e.point = to_point(c);
  const auto lv = model::evaluate_L(xi, e.point, cap);
  e.L = lv.value;
  if (sgn(e.point[0]) == 0) {
    e.key = TieKey{-1, 0, abs(e.point[static_cast<std::size_t>(lv.argmax)])};
  } else {
    if (lv.argmax < 0)
      fail(Errc::TieUnresolved, "branches of L at " + e.point.to_string() +
                                    " cannot be separated; raise the precision cap or check the target");
    e.key = TieKey{lv.argmax, e.point[0], e.point[static_cast<std::size_t>(lv.argmax)]};
  }
  return e;
}

[[noreturn]] void dependent(const IntegerPoint& p) {
  fail(Errc::DependentCoordinates,
       "L vanishes (or cannot be separated from 0) at " + p.to_string() +
           ": the coordinates of xi satisfy an integer linear relation");
}

[[noreturn]] void tie(const IntegerPoint& a, const IntegerPoint& b) {
  fail(Errc::TieUnresolved, "L at " + a.to_string() + " and " + b.to_string() +
                                " cannot be separated at the precision cap; either raise the cap or the "
                                "coordinates of xi are linearly dependent");
}

}  // namespace

std::vector<MinimalPoint> certified_scan(const TargetPoint& xi, const std::vector<Candidate>& survivors,
                                         long cap) {
  // A vanishing form anywhere among the survivors is reported before any
  // comparison involving it can surface as a tie.
  for (const auto& c : survivors) {
    if (c.l_lo > 0) continue;
    const IntegerPoint p = to_point(c);
    if (rigorous::certified_sign(model::L_value(xi, p, cap), cap) == 0) dependent(p);
  }

  std::vector<MinimalPoint> out;
  std::optional<Evaluated> record;
  std::size_t i = 0;
  while (i < survivors.size()) {
    std::size_t j = i;
    std::optional<Evaluated> best;
    while (j < survivors.size() && survivors[j].norm_sq == survivors[i].norm_sq) {
      Evaluated e = evaluate(xi, survivors[j], cap);
      if (rigorous::certified_sign(e.L, cap) == 0) dependent(e.point);
      if (!best) {
        best = std::move(e);
      } else if (!(e.key == best->key)) {
        switch (compare(e.L, best->L, cap)) {
          case Ordering::Less:
            best = std::move(e);
            break;
          case Ordering::Greater:
            break;
          case Ordering::Indistinguishable:
            tie(e.point, best->point);
        }
      }
      ++j;
    }
    bool is_record = !record;
    if (record && !(best->key == record->key)) {
      switch (compare(best->L, record->L, cap)) {
        case Ordering::Less:
          is_record = true;
          break;
        case Ordering::Greater:
          break;
        case Ordering::Indistinguishable:
          tie(best->point, record->point);
      }
    }
    if (is_record) {
      MinimalPoint mp;
      mp.index = out.size();
      mp.point = best->point;
      mp.X = sqrt(RigorousReal::integer(best->point.norm_sq()));
      mp.L = best->L;
      out.push_back(std::move(mp));
      record = std::move(best);
    }
    i = j;
  }
  return out;
}

std::int64_t norm_sq_bound(const mpq_class& x_max) {
  if (x_max < 1) fail(Errc::DomainError, "X_max must be at least 1");
  const mpq_class sq = x_max * x_max;
  mpz_class b;
  mpz_fdiv_q(b.get_mpz_t(), sq.get_num_mpz_t(), sq.get_den_mpz_t());
  if (mpz_sizeinbase(b.get_mpz_t(), 2) > 60) fail(Errc::DomainError, "X_max too large for enumeration");
  return static_cast<std::int64_t>(b.get_si());
}

}  // namespace detail

namespace {

using detail::Candidate;
using detail::FastTarget;

std::int64_t isqrt64(std::int64_t v) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

std::int64_t fdiv(std::int64_t a, std::int64_t m) {
  std::int64_t q = a / m;
  if ((a % m != 0) && ((a < 0) != (m < 0))) --q;
  return q;
}

std::int64_t fmod64(std::int64_t a, std::int64_t m) { return a - fdiv(a, m) * m; }

// Allowed values of one coordinate, as residues mod m (empty = all).
struct Allowed {
  std::int64_t m = 1;
  std::vector<std::int64_t> residues;

  bool ok(std::int64_t v) const {
    return residues.empty() || std::binary_search(residues.begin(), residues.end(), fmod64(v, m));
  }
  std::int64_t at_or_below(std::int64_t v) const {
    while (!ok(v)) --v;
    return v;
  }
  std::int64_t at_or_above(std::int64_t v) const {
    while (!ok(v)) ++v;
    return v;
  }
};

// Sign versions of the constraints: x in S (sigma = +1) or -x in S.
std::vector<std::vector<Allowed>> sign_versions(const ApproxSet& s, std::size_t dim) {
  if (s.kind() != ApproxSet::Kind::Congruence) return {std::vector<Allowed>(dim)};
  if (!s.modulus().fits_slong_p()) fail(Errc::DomainError, "congruence modulus too large");
  const std::int64_t m = s.modulus().get_si();
  std::vector<std::vector<Allowed>> out;
  for (int sigma : {1, -1}) {
    std::vector<Allowed> v(dim);
    for (std::size_t k = 0; k < dim; ++k) {
      const auto& r = s.residues(k);
      if (r.empty()) continue;
      v[k].m = m;
      for (const auto& q : r) v[k].residues.push_back(fmod64(sigma * q.get_si(), m));
      std::sort(v[k].residues.begin(), v[k].residues.end());
    }
    out.push_back(std::move(v));
  }
  return out;
}

constexpr std::int64_t kMaxSpread = 4096;

// Staircase of (squared norm, upper bound of L) over kept members of S. A
// candidate whose lower bound is no better than some shorter member's upper
// bound can never be a new record.
class Frontier {
 public:
  bool dominated(std::int64_t norm_sq, double l_lo) const {
    auto it = steps_.lower_bound(norm_sq);
    if (it == steps_.begin()) return false;
    return std::prev(it)->second <= l_lo;
  }
  void insert(std::int64_t norm_sq, double l_hi) {
    auto it = steps_.lower_bound(norm_sq);
    if (it != steps_.begin() && std::prev(it)->second <= l_hi) return;
    if (it != steps_.end() && it->first == norm_sq) {
      if (it->second <= l_hi) return;
      it->second = l_hi;
    } else {
      it = steps_.emplace_hint(it, norm_sq, l_hi);
    }
    auto next = std::next(it);
    while (next != steps_.end() && next->second >= l_hi) next = steps_.erase(next);
  }

 private:
  std::map<std::int64_t, double> steps_;
};

struct SlabState {
  std::vector<Candidate> kept;
  Frontier frontier;
  Candidate scratch;
};

void fast_candidates_for(std::int64_t x0, const FastTarget& ft, const ApproxSet& s,
                         const std::vector<std::vector<Allowed>>& versions, std::int64_t bound,
                         SlabState& st) {
  const std::size_t dim = ft.size();
  const double dx0 = static_cast<double>(x0);
  std::vector<std::vector<std::int64_t>> values(dim);
  const std::size_t start = st.kept.size();
  Candidate& c = st.scratch;
  c.x.assign(dim, 0);
  c.x[0] = x0;
  for (const auto& allowed : versions) {
    if (!allowed[0].ok(x0)) continue;
    for (std::size_t k = 1; k < dim; ++k) {
      const double t = ft.ratio(k) * dx0;
      const double e = ft.error(k, dx0, std::abs(t) + 1);
      const auto lo = static_cast<std::int64_t>(std::floor(t - e));
      const auto hi = static_cast<std::int64_t>(std::ceil(t + e));
      if (hi - lo > kMaxSpread)
        fail(Errc::DomainError, "target enclosure too coarse to enumerate at x_0 = " + std::to_string(x0));
      auto& v = values[k];
      v.clear();
      v.push_back(allowed[k].at_or_below(lo));
      for (std::int64_t y = lo; y <= hi; ++y)
        if (allowed[k].ok(y)) v.push_back(y);
      v.push_back(allowed[k].at_or_above(hi));
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    // Odometer over the per-coordinate value lists.
    std::vector<std::size_t> idx(dim, 0);
    for (;;) {
      std::int64_t norm = x0 * x0;
      for (std::size_t k = 1; k < dim; ++k) {
        c.x[k] = values[k][idx[k]];
        norm += c.x[k] * c.x[k];
      }
      if (norm <= bound) {
        c.norm_sq = norm;
        ft.bound_L(c);
        if (!st.frontier.dominated(norm, c.l_lo) && detail::member(s, c)) {
          st.frontier.insert(norm, c.l_hi);
          st.kept.push_back(c);
        }
      }
      std::size_t k = 1;
      while (k < dim && ++idx[k] == values[k].size()) idx[k++] = 0;
      if (k == dim) break;
    }
  }
  if (versions.size() > 1) {
    auto first = st.kept.begin() + static_cast<std::ptrdiff_t>(start);
    std::sort(first, st.kept.end(), detail::less_candidate);
    st.kept.erase(std::unique(first, st.kept.end(), [](const Candidate& a, const Candidate& b) { return a.x == b.x; }),
                  st.kept.end());
  }
}

}  // namespace

namespace detail {

// All canonical nonzero members of S with squared norm <= bound.
std::vector<Candidate> ball_candidates(std::size_t dim, std::int64_t bound, const ApproxSet& s,
                                       const FastTarget& ft) {
  const std::int64_t r = isqrt64(bound);
  std::vector<Candidate> out;
  Candidate c;
  c.x.assign(dim, 0);
  std::function<void(std::size_t, std::int64_t, bool)> rec = [&](std::size_t k, std::int64_t partial,
                                                                 bool nonzero) {
    if (k == dim) {
      if (!nonzero) return;
      c.norm_sq = partial;
      if (!member(s, c)) return;
      ft.bound_L(c);
      out.push_back(c);
      return;
    }
    const std::int64_t room = isqrt64(bound - partial);
    const std::int64_t lo = nonzero ? -std::min(room, r) : 0;
    for (std::int64_t v = lo; v <= std::min(room, r); ++v) {
      c.x[k] = v;
      rec(k + 1, partial + v * v, nonzero || v != 0);
    }
    c.x[k] = 0;
  };
  rec(0, 0, false);
  return out;
}

}  // namespace detail

MinimalPointSequence enumerate_minimal_points(const TargetPoint& xi, const ApproxSet& s,
                                              const mpq_class& x_max, const EnumerationOptions& opts) {
  const std::int64_t bound = detail::norm_sq_bound(x_max);
  const FastTarget ft(xi);
  const std::size_t dim = xi.size();
  const auto versions = sign_versions(s, dim);
  const std::int64_t x0_max = isqrt64(bound);

  // Fast candidates, slab-parallel over x_0 with an ordered merge.
  const unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(x0_max)));
  std::vector<SlabState> parts(threads);
  std::vector<std::exception_ptr> failures(threads);
  auto work = [&](unsigned t) {
    try {
      const std::int64_t lo = 1 + x0_max * t / threads;
      const std::int64_t hi = x0_max * (t + 1) / threads;
      for (std::int64_t x0 = lo; x0 <= hi; ++x0) fast_candidates_for(x0, ft, s, versions, bound, parts[t]);
      parts[t].frontier = Frontier();
    } catch (...) {
      failures[t] = std::current_exception();
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  for (auto& f : failures)
    if (f) std::rethrow_exception(f);
  std::vector<Candidate> fast;
  for (auto& p : parts) {
    fast.insert(fast.end(), std::make_move_iterator(p.kept.begin()), std::make_move_iterator(p.kept.end()));
    p.kept.clear();
  }
  std::sort(fast.begin(), fast.end(), detail::less_candidate);

  // First fast candidate with a certified L below |xi_0|/2; beyond its norm
  // every new record lies among the fast candidates.
  std::int64_t initial = bound;
  const RigorousReal half = xi.abs_xi0() / RigorousReal::integer(2);
  for (const auto& c : fast) {
    if (!(c.l_hi < ft.xi0_lo() / 2)) continue;
    if (compare(model::L_value(xi, detail::to_point(c), opts.cap), half, opts.cap) == Ordering::Less) {
      initial = c.norm_sq;
      break;
    }
  }

  std::vector<Candidate> all = detail::ball_candidates(dim, initial, s, ft);
  for (auto& c : fast)
    if (c.norm_sq > initial) all.push_back(std::move(c));
  fast.clear();
  std::sort(all.begin(), all.end(), detail::less_candidate);
  if (all.empty()) fail(Errc::EmptySet, "no nonzero member of S with norm <= " + x_max.get_str());

  MinimalPointSequence seq;
  seq.target = xi;
  seq.set = s;
  seq.exhausted_up_to = x_max;
  seq.entries = detail::certified_scan(xi, detail::prefilter(all), opts.cap);
  return seq;
}

MinimalPointSequence from_points(const TargetPoint& xi, const ApproxSet& s,
                                 const std::vector<IntegerPoint>& points, const mpq_class& x_max) {
  MinimalPointSequence seq;
  seq.target = xi;
  seq.set = s;
  seq.exhausted_up_to = x_max;
  for (const auto& p : points) {
    MinimalPoint mp;
    mp.index = seq.entries.size();
    mp.point = p;
    mp.X = sqrt(RigorousReal::integer(p.norm_sq()));
    mp.L = model::L_value(xi, p);
    seq.entries.push_back(std::move(mp));
  }
  return seq;
}

std::optional<RigorousReal> envelope(const MinimalPointSequence& seq, const mpq_class& X) {
  if (X > seq.exhausted_up_to)
    fail(Errc::BeyondCertifiedRange, "X = " + X.get_str() + " exceeds the certified range " +
                                         seq.exhausted_up_to.get_str());
  if (sgn(X) < 0) return std::nullopt;
  const mpq_class x2 = X * X;
  std::optional<RigorousReal> out;
  for (const auto& e : seq.entries) {
    if (mpq_class(e.point.norm_sq()) > x2) break;
    out = e.L;
  }
  return out;
}

DirichletReport dirichlet_check(const MinimalPointSequence& seq) {
  if (seq.size() < 2) fail(Errc::TooFewPoints, "Dirichlet check needs at least two minimal points");
  const int n = seq.target.n();
  const Interval expo = Interval::point(mpq_class(1, n));
  DirichletReport rep;
  bool first = true;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    const Interval v = pow(Interval::from_real(seq[i + 1].X), expo) * Interval::from_real(seq[i].L);
    if (first || v.mid() > rep.sup.mid()) {
      rep.sup = v;
      rep.index = i;
      first = false;
    }
  }
  return rep;
}

void write_csv(std::ostream& os, const MinimalPointSequence& seq) {
  const std::size_t dim = seq.target.size();
  os << "i";
  for (std::size_t k = 0; k < dim; ++k) os << ",x_" << k;
  os << ",normSq,X_i,L_i,log10_X_i,neg_log10_L_i\n";
  const Interval ln10 = log(Interval::point(10));
  for (const auto& e : seq.entries) {
    os << e.index;
    for (std::size_t k = 0; k < dim; ++k) os << ',' << e.point[k].get_str();
    const Interval x = Interval::from_real(e.X);
    const Interval l = Interval::from_real(e.L);
    os << ',' << e.point.norm_sq().get_str() << ',' << e.X.to_decimal(15) << ',' << e.L.to_decimal(15) << ','
       << (log(x) / ln10).to_decimal(15) << ',' << (-(log(l) / ln10)).to_decimal(15) << '\n';
  }
}

std::vector<IntegerPoint> read_csv_points(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) fail(Errc::SchemaError, "empty minimal-point CSV");
  std::vector<std::string> header;
  {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) header.push_back(cell);
  }
  std::vector<std::size_t> cols;
  for (std::size_t c = 0; c < header.size(); ++c)
    if (header[c].rfind("x_", 0) == 0) cols.push_back(c);
  if (cols.size() < 2) fail(Errc::SchemaError, "minimal-point CSV lacks coordinate columns");
  std::vector<IntegerPoint> out;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() != header.size()) fail(Errc::SchemaError, "ragged row in minimal-point CSV");
    std::vector<mpz_class> v;
    for (auto c : cols) {
      mpz_class z;
      if (z.set_str(cells[c], 10) != 0) fail(Errc::SchemaError, "bad coordinate '" + cells[c] + "'");
      v.push_back(z);
    }
    out.emplace_back(std::move(v));
  }
  return out;
}

}  // namespace sdalab::minpoints
