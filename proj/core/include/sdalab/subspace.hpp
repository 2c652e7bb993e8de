#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sdalab/intmat.hpp"
#include "sdalab/rigorous/real.hpp"

namespace sdalab::subspaces {

using linalg::IntMatrix;
using linalg::IntVector;

// A subspace W of R^d defined over Q, stored as the Hermite basis of the
// lattice W ∩ Z^d together with its exact squared height.
class RationalSubspace {
 public:
  RationalSubspace() = default;
  static RationalSubspace zero(std::size_t ambient);
  static RationalSubspace whole(std::size_t ambient);

  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const IntMatrix& basis() const noexcept { return basis_; }
  // Sum of squared maximal minors of the basis; 1 for the zero subspace.
  const mpz_class& squared_height() const noexcept { return height_sq_; }
  bool contains(const IntVector& v) const;

  // The Hermite basis is canonical, so equality is basis equality.
  friend bool operator==(const RationalSubspace& a, const RationalSubspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  friend RationalSubspace from_saturated(IntMatrix basis, std::size_t ambient);
  std::size_t ambient_ = 0;
  IntMatrix basis_;
  mpz_class height_sq_ = 1;
};

// Basis of the span's full integer lattice, obtained as the kernel of the
// kernel (the double orthogonal of a rational span is the span itself).
RationalSubspace saturate(const std::vector<IntVector>& vectors, std::size_t ambient);
RationalSubspace saturate(const IntMatrix& rows);

rigorous::RigorousReal height(const RationalSubspace& w);
// det of the Gram matrix of the saturated basis (equals squared_height).
mpz_class gram_determinant(const RationalSubspace& w);

RationalSubspace sum(const RationalSubspace& a, const RationalSubspace& b);
RationalSubspace intersect(const RationalSubspace& a, const RationalSubspace& b);
RationalSubspace orthogonal_complement(const RationalSubspace& w);

struct SchmidtRatio {
  mpz_class lhs_sq;  // H(A+B)^2 H(A∩B)^2
  mpz_class rhs_sq;  // H(A)^2 H(B)^2
  mpq_class ratio_sq;
};
SchmidtRatio schmidt_ratio(const RationalSubspace& a, const RationalSubspace& b);

struct FuzzCase {
  RationalSubspace a;
  RationalSubspace b;
  SchmidtRatio ratio;
};

struct FuzzReport {
  std::size_t max_dim = 0;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  mpq_class max_ratio_sq = 0;
  FuzzCase worst;
  std::size_t ratio_one = 0;           // cases with ratioSq exactly 1
  std::size_t duality_checked = 0;     // subspaces compared with their complement
  std::size_t duality_failures = 0;
  std::size_t gram_failures = 0;       // Plücker sum differs from det(Gram)
};

// `count` random pairs of subspaces of R^d, 2 <= d <= max_dim, spanned by
// small random integer vectors. Deterministic for a given seed.
FuzzReport schmidt_fuzz(std::size_t max_dim, std::size_t count, std::uint64_t seed);

}  // namespace sdalab::subspaces
