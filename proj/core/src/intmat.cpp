#include "sdalab/intmat.hpp"

#include <stdexcept>
#include <utility>

namespace sdalab::linalg {

IntMatrix IntMatrix::from_rows(std::span<const IntVector> rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("IntMatrix::from_rows: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

std::vector<IntVector> IntMatrix::row_vectors() const {
  std::vector<IntVector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

void IntMatrix::append_row(std::span<const mpz_class> r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw std::invalid_argument("IntMatrix::append_row: wrong length");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

mpz_class dot(std::span<const mpz_class> a, std::span<const mpz_class> b) {
  mpz_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

mpz_class squared_norm(std::span<const mpz_class> v) { return dot(v, v); }

namespace {

// In-place Bareiss elimination; returns rank and the sign of the row
// permutation, leaving the last pivot (the determinant for square
// full-rank input) in the bottom-right of the processed block.
struct BareissResult {
  std::size_t rank = 0;
  int sign = 1;
  mpz_class last_pivot = 1;
};

BareissResult bareiss(IntMatrix& a) {
  BareissResult res;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      a.swap_rows(p, r);
      res.sign = -res.sign;
    }
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      for (std::size_t j = c + 1; j < a.cols(); ++j) {
        mpz_class v = a(r, c) * a(i, j) - a(i, c) * a(r, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  res.rank = r;
  res.last_pivot = prev;
  return res;
}

void row_axpy(IntMatrix& m, std::size_t dst, const mpz_class& q, std::size_t src, std::size_t from = 0) {
  if (sgn(q) == 0) return;
  for (std::size_t j = from; j < m.cols(); ++j) m(dst, j) -= q * m(src, j);
}

// Echelon form by unimodular row operations restricted to the first
// `pivot_cols` columns. Returns the number of pivot rows; when `reduce` is
// set, entries above pivots are reduced and pivots made positive.
std::size_t integer_echelon(IntMatrix& m, std::size_t pivot_cols, bool reduce) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < m.rows(); ++c) {
    for (;;) {
      std::size_t best = m.rows();
      for (std::size_t i = r; i < m.rows(); ++i) {
        if (sgn(m(i, c)) == 0) continue;
        if (best == m.rows() || mpz_cmpabs(m(i, c).get_mpz_t(), m(best, c).get_mpz_t()) < 0) best = i;
      }
      if (best == m.rows()) break;
      m.swap_rows(best, r);
      bool done = true;
      for (std::size_t i = r + 1; i < m.rows(); ++i) {
        if (sgn(m(i, c)) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), m(i, c).get_mpz_t(), m(r, c).get_mpz_t());
        row_axpy(m, i, q, r);
        if (sgn(m(i, c)) != 0) done = false;
      }
      if (done) break;
    }
    if (r >= m.rows() || sgn(m(r, c)) == 0) continue;
    if (reduce) {
      if (sgn(m(r, c)) < 0)
        for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
      for (std::size_t i = 0; i < r; ++i) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), m(i, c).get_mpz_t(), m(r, c).get_mpz_t());
        row_axpy(m, i, q, r);
      }
    }
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(const IntMatrix& m) {
  IntMatrix a = m;
  return bareiss(a).rank;
}

mpz_class determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  if (m.rows() == 0) return 1;
  IntMatrix a = m;
  const BareissResult res = bareiss(a);
  if (res.rank < m.rows()) return 0;
  return res.sign * res.last_pivot;
}

IntMatrix gram(const IntMatrix& m) {
  IntMatrix g(m.rows(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i; j < m.rows(); ++j) {
      mpz_class s = 0;
      for (std::size_t k = 0; k < m.cols(); ++k) s += m(i, k) * m(j, k);
      g(i, j) = s;
      g(j, i) = s;
    }
  }
  return g;
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t r = integer_echelon(a, a.cols(), true);
  IntMatrix out(0, m.cols());
  for (std::size_t i = 0; i < r; ++i) out.append_row(a.row(i));
  return out;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  const std::size_t n = m.cols();
  // [m^T | I_n]: unimodular row operations that clear the left block expose
  // kernel vectors in the right block.
  IntMatrix t(n, m.rows() + n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m.rows(); ++j) t(i, j) = m(j, i);
    t(i, m.rows() + i) = 1;
  }
  const std::size_t r = integer_echelon(t, m.rows(), false);
  IntMatrix k(0, n);
  for (std::size_t i = r; i < n; ++i) {
    const IntVector full = t.row(i);
    k.append_row(std::span<const mpz_class>(full).subspan(m.rows()));
  }
  if (k.rows() == 0) return IntMatrix(0, n);
  return hermite_normal_form(k);
}

bool in_row_lattice(const IntMatrix& hnf, std::span<const mpz_class> x) {
  IntVector v(x.begin(), x.end());
  std::size_t c = 0;
  for (std::size_t i = 0; i < hnf.rows(); ++i) {
    while (c < hnf.cols() && sgn(hnf(i, c)) == 0) ++c;
    if (c == hnf.cols()) break;
    mpz_class q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), v[c].get_mpz_t(), hnf(i, c).get_mpz_t());
    if (sgn(rem) != 0) return false;
    for (std::size_t j = c; j < hnf.cols(); ++j) v[j] -= q * hnf(i, j);
  }
  for (const auto& e : v)
    if (sgn(e) != 0) return false;
  return true;
}

mpz_class sum_squared_minors(const IntMatrix& m) {
  const std::size_t k = m.rows();
  const std::size_t n = m.cols();
  if (k == 0) return 1;
  if (k > n) return 0;
  std::vector<std::size_t> cols(k);
  for (std::size_t i = 0; i < k; ++i) cols[i] = i;
  mpz_class total = 0;
  IntMatrix minor(k, k);
  for (;;) {
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor(i, j) = m(i, cols[j]);
    const mpz_class d = determinant(minor);
    total += d * d;
    std::size_t pos = k;
    while (pos > 0 && cols[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) break;
    ++cols[pos - 1];
    for (std::size_t j = pos; j < k; ++j) cols[j] = cols[j - 1] + 1;
  }
  return total;
}

}  // namespace sdalab::linalg
