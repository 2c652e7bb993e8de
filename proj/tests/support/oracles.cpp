#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace oracle {

Big::Big() { mpfr_init2(v_, kBits), mpfr_set_zero(v_, 1); }
Big::Big(double v) { mpfr_init2(v_, kBits), mpfr_set_d(v_, v, MPFR_RNDN); }
Big::Big(const Big& o) { mpfr_init2(v_, kBits), mpfr_set(v_, o.v_, MPFR_RNDN); }
Big& Big::operator=(const Big& o) {
  mpfr_set(v_, o.v_, MPFR_RNDN);
  return *this;
}
Big::~Big() { mpfr_clear(v_); }

std::string Big::str(int digits) const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Rg", digits, v_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

Big Big::sqrt_of(unsigned long k) {
  Big r;
  mpfr_sqrt_ui(r.v_, k, MPFR_RNDN);
  return r;
}
Big Big::cbrt_of(unsigned long k) {
  Big r;
  mpfr_set_ui(r.v_, k, MPFR_RNDN);
  mpfr_cbrt(r.v_, r.v_, MPFR_RNDN);
  return r;
}
Big Big::parse(const std::string& decimal) {
  Big r;
  if (mpfr_set_str(r.v_, decimal.c_str(), 10, MPFR_RNDN) != 0) throw std::invalid_argument(decimal);
  return r;
}
Big Big::rational(const mpq_class& q) {
  Big r;
  mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Big operator+(const Big& a, const Big& b) {
  Big r;
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
Big operator-(const Big& a, const Big& b) {
  Big r;
  mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
Big operator*(const Big& a, const Big& b) {
  Big r;
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
Big operator/(const Big& a, const Big& b) {
  Big r;
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
Big abs(const Big& a) {
  Big r;
  mpfr_abs(r.get(), a.get(), MPFR_RNDN);
  return r;
}
Big log(const Big& a) {
  Big r;
  mpfr_log(r.get(), a.get(), MPFR_RNDN);
  return r;
}
Big pow(const Big& a, const Big& e) {
  Big r;
  mpfr_pow(r.get(), a.get(), e.get(), MPFR_RNDN);
  return r;
}
bool operator<(const Big& a, const Big& b) { return mpfr_less_p(a.get(), b.get()) != 0; }

std::vector<std::pair<mpz_class, mpz_class>> sqrt2_convergents(const mpz_class& bound) {
  // sqrt 2 = [1; 2, 2, 2, ...]: p_k = 2 p_{k-1} + p_{k-2}, same for q.
  std::vector<std::pair<mpz_class, mpz_class>> out;
  mpz_class p0 = 1, q0 = 0, p1 = 1, q1 = 1;
  while (q1 * q1 + p1 * p1 <= bound * bound) {
    out.emplace_back(q1, p1);
    mpz_class p2 = 2 * p1 + p0, q2 = 2 * q1 + q0;
    p0 = p1, q0 = q1, p1 = p2, q1 = q2;
  }
  return out;
}

namespace {

long norm_sq(const Point& x) {
  long s = 0;
  for (long c : x) s += c * c;
  return s;
}

Point negate(Point x) {
  for (auto& c : x) c = -c;
  return x;
}

bool in_set(const OracleTarget& t, const Point& x) { return t.member(x) || t.member(negate(x)); }

long mod(long a, long m) { return ((a % m) + m) % m; }

// Canonical points of norm <= r.
void ball(std::size_t dim, long r, const std::function<void(const Point&)>& f) {
  Point x(dim, 0);
  std::function<void(std::size_t, long, bool)> rec = [&](std::size_t k, long budget, bool positive_seen) {
    if (k == dim) {
      if (positive_seen) f(x);
      return;
    }
    for (long v = -r; v <= r; ++v) {
      if (v * v > budget) continue;
      if (!positive_seen && v < 0) continue;
      x[k] = v;
      rec(k + 1, budget - v * v, positive_seen || v > 0);
    }
    x[k] = 0;
  };
  rec(0, r * r, false);
}

struct Candidate {
  Point x;
  long norm_sq;
  Big L;
};

std::vector<Candidate> candidates(const OracleTarget& t, long x_max, long r0) {
  const std::size_t dim = t.xi.size();
  std::vector<Candidate> out;
  ball(dim, std::min(r0, x_max), [&](const Point& x) {
    if (in_set(t, x)) out.push_back({x, norm_sq(x), L_of(t.xi, x)});
  });
  if (x_max <= r0) return out;
  // Record at radius r0.
  Big record(1e300);
  for (const auto& c : out)
    if (c.L < record) record = c.L;
  const Big w = record / abs(t.xi[0]);
  const double wd = w.to_double();
  if (!(wd < 1)) throw std::runtime_error("oracle: record at the ball radius is too large");
  std::vector<Big> ratio;
  for (std::size_t k = 0; k < dim; ++k) ratio.push_back(t.xi[k] / t.xi[0]);
  for (long x0 = 1; x0 <= x_max; ++x0) {
    std::vector<std::vector<long>> windows(dim);
    windows[0] = {x0};
    bool empty = false;
    for (std::size_t k = 1; k < dim; ++k) {
      const double c = (ratio[k] * Big(static_cast<double>(x0))).to_double();
      for (long v = static_cast<long>(std::floor(c - wd)) - 1; v <= static_cast<long>(std::ceil(c + wd)) + 1; ++v)
        windows[k].push_back(v);
      empty = empty || windows[k].empty();
    }
    if (empty) continue;
    Point x(dim);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
      if (k == dim) {
        const long ns = norm_sq(x);
        if (ns <= r0 * r0 || ns > x_max * x_max || !in_set(t, x)) return;
        Big L = L_of(t.xi, x);
        if (L < record) out.push_back({x, ns, L});
        return;
      }
      for (long v : windows[k]) {
        x[k] = v;
        rec(k + 1);
      }
    };
    rec(0);
  }
  return out;
}

}  // namespace

OracleTarget preset_target(const std::string& name) {
  OracleTarget t;
  if (name == "sqrt2") {
    t.xi = {Big(1.0), Big::sqrt_of(2)};
    t.member = [](const Point&) { return true; };
  } else if (name == "sqrt2-even") {
    t.xi = {Big(1.0), Big::sqrt_of(2)};
    t.member = [](const Point& x) { return mod(x[0], 2) == 0; };
  } else if (name == "sqrt2-sublattice") {
    // Integer combinations of (1,1) and (0,2).
    t.xi = {Big(1.0), Big::sqrt_of(2)};
    t.member = [](const Point& x) { return mod(x[1] - x[0], 2) == 0; };
  } else if (name == "cubic") {
    t.xi = {Big(1.0), Big::cbrt_of(2), Big::cbrt_of(4)};
    t.member = [](const Point&) { return true; };
  } else if (name == "sqrt2-sqrt3") {
    t.xi = {Big(1.0), Big::sqrt_of(2), Big::parse("1.73205080756887729352744634150587236694280525381038062805580")};
    t.member = [](const Point&) { return true; };
  } else {
    throw std::invalid_argument(name);
  }
  return t;
}

Big L_of(const std::vector<Big>& xi, const Point& x) {
  Big best(0.0);
  for (std::size_t k = 1; k < xi.size(); ++k) {
    Big v = abs(xi[0] * Big(static_cast<double>(x[k])) - xi[k] * Big(static_cast<double>(x[0])));
    if (best < v) best = v;
  }
  return best;
}

std::vector<OracleEntry> minimal_points(const OracleTarget& t, long x_max) {
  auto pool = candidates(t, x_max, 24);
  std::sort(pool.begin(), pool.end(), [](const Candidate& a, const Candidate& b) {
    if (a.norm_sq != b.norm_sq) return a.norm_sq < b.norm_sq;
    if (a.L < b.L) return true;
    if (b.L < a.L) return false;
    return a.x < b.x;
  });
  std::vector<OracleEntry> out;
  for (std::size_t i = 0; i < pool.size();) {
    std::size_t j = i;
    while (j < pool.size() && pool[j].norm_sq == pool[i].norm_sq) ++j;
    // pool[i] has the smallest L of its norm.
    if (out.empty() || pool[i].L < out.back().L) out.push_back({pool[i].x, pool[i].norm_sq, pool[i].L});
    i = j;
  }
  return out;
}

std::string check_abc(const OracleTarget& t, const std::vector<Point>& seq, long x_max) {
  if (seq.empty()) return "empty sequence";
  std::vector<Big> L;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!in_set(t, seq[i])) return "entry " + std::to_string(i) + " is not in S";
    L.push_back(L_of(t.xi, seq[i]));
    if (i > 0 && !(norm_sq(seq[i - 1]) < norm_sq(seq[i]))) return "(a) fails at " + std::to_string(i);
    if (i > 0 && !(L[i] < L[i - 1])) return "(b) fails at " + std::to_string(i);
  }
  // Every point that could undercut some L_i is in the pool.
  for (const auto& c : candidates(t, x_max, 24)) {
    for (std::size_t i = 0; i < seq.size(); ++i) {
      const long next = i + 1 < seq.size() ? norm_sq(seq[i + 1]) : x_max * x_max + 1;
      if (c.norm_sq < next && c.L < L[i]) return "(c) fails at " + std::to_string(i);
    }
  }
  return {};
}

std::size_t rank_q(const std::vector<std::vector<mpz_class>>& rows) {
  if (rows.empty()) return 0;
  std::vector<std::vector<mpq_class>> m;
  for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const mpq_class f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

bool same_span(const std::vector<std::vector<mpz_class>>& a, const std::vector<std::vector<mpz_class>>& b) {
  auto both = a;
  both.insert(both.end(), b.begin(), b.end());
  const std::size_t r = rank_q(both);
  return rank_q(a) == r && rank_q(b) == r;
}

mpz_class det_cofactor(const std::vector<std::vector<mpz_class>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  mpz_class d = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<mpz_class>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<mpz_class> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    d += (j % 2 ? -1 : 1) * m[0][j] * det_cofactor(minor);
  }
  return d;
}

}  // namespace oracle
