#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <vector>

namespace sdalab::linalg {

using IntVector = std::vector<mpz_class>;

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix from_rows(std::span<const IntVector> rows, std::size_t cols);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0; }

  mpz_class& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const mpz_class& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  std::vector<IntVector> row_vectors() const;
  void append_row(std::span<const mpz_class> r);
  void swap_rows(std::size_t a, std::size_t b);
  IntMatrix transpose() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

mpz_class dot(std::span<const mpz_class> a, std::span<const mpz_class> b);
mpz_class squared_norm(std::span<const mpz_class> v);

// Fraction-free (Bareiss) elimination.
std::size_t rank(const IntMatrix& m);
mpz_class determinant(const IntMatrix& m);

// M M^T
IntMatrix gram(const IntMatrix& m);

// Row-style Hermite normal form of the row lattice: echelon, positive
// pivots, entries above each pivot reduced into [0, pivot). Zero rows are
// dropped, so the result is a basis of the row lattice.
IntMatrix hermite_normal_form(const IntMatrix& m);

// Rows form a Z-basis (in Hermite normal form) of {x in Z^cols : m x = 0}.
// The lattice is saturated by construction.
IntMatrix integer_kernel(const IntMatrix& m);

// Membership of x in the row lattice of a matrix already in Hermite form.
bool in_row_lattice(const IntMatrix& hnf, std::span<const mpz_class> x);

// Sum of squares of all k x k minors of a k x n matrix (the squared norm of
// the wedge product of its rows). Returns 1 for k = 0.
mpz_class sum_squared_minors(const IntMatrix& m);

}  // namespace sdalab::linalg
