#include "sdalab/subspace.hpp"

#include <random>

#include "sdalab/error.hpp"

namespace sdalab::subspaces {

RationalSubspace from_saturated(IntMatrix basis, std::size_t ambient) {
  RationalSubspace w;
  w.ambient_ = ambient;
  w.basis_ = basis.rows() == 0 ? IntMatrix(0, ambient) : std::move(basis);
  w.height_sq_ = linalg::sum_squared_minors(w.basis_);
  return w;
}

RationalSubspace RationalSubspace::zero(std::size_t ambient) { return from_saturated(IntMatrix(0, ambient), ambient); }

RationalSubspace RationalSubspace::whole(std::size_t ambient) {
  return from_saturated(IntMatrix::identity(ambient), ambient);
}

bool RationalSubspace::contains(const IntVector& v) const {
  if (v.size() != ambient_) fail(Errc::AmbientMismatch, "vector length differs from the ambient dimension");
  IntMatrix m = basis_;
  m.append_row(v);
  return linalg::rank(m) == dim();
}

RationalSubspace saturate(const IntMatrix& rows) {
  const std::size_t ambient = rows.cols();
  const IntMatrix perp = linalg::integer_kernel(rows);
  return from_saturated(linalg::integer_kernel(perp), ambient);
}

RationalSubspace saturate(const std::vector<IntVector>& vectors, std::size_t ambient) {
  IntMatrix m(0, ambient);
  for (const auto& v : vectors) {
    if (v.size() != ambient) fail(Errc::AmbientMismatch, "vector length differs from the ambient dimension");
    m.append_row(v);
  }
  return saturate(m);
}

rigorous::RigorousReal height(const RationalSubspace& w) {
  return sqrt(rigorous::RigorousReal::integer(w.squared_height()));
}

mpz_class gram_determinant(const RationalSubspace& w) { return linalg::determinant(linalg::gram(w.basis())); }

namespace {

void same_ambient(const RationalSubspace& a, const RationalSubspace& b) {
  if (a.ambient() != b.ambient())
    fail(Errc::AmbientMismatch, "subspaces live in R^" + std::to_string(a.ambient()) + " and R^" +
                                    std::to_string(b.ambient()));
}

}  // namespace

RationalSubspace sum(const RationalSubspace& a, const RationalSubspace& b) {
  same_ambient(a, b);
  IntMatrix m = a.basis();
  for (std::size_t i = 0; i < b.dim(); ++i) m.append_row(b.basis().row(i));
  return saturate(m);
}

RationalSubspace orthogonal_complement(const RationalSubspace& w) {
  return from_saturated(linalg::integer_kernel(w.basis()), w.ambient());
}

RationalSubspace intersect(const RationalSubspace& a, const RationalSubspace& b) {
  same_ambient(a, b);
  // (A ∩ B) = (A^⊥ + B^⊥)^⊥
  IntMatrix m = linalg::integer_kernel(a.basis());
  const IntMatrix kb = linalg::integer_kernel(b.basis());
  for (std::size_t i = 0; i < kb.rows(); ++i) m.append_row(kb.row(i));
  if (m.rows() == 0) m = IntMatrix(0, a.ambient());
  return from_saturated(linalg::integer_kernel(m), a.ambient());
}

SchmidtRatio schmidt_ratio(const RationalSubspace& a, const RationalSubspace& b) {
  same_ambient(a, b);
  SchmidtRatio r;
  r.lhs_sq = sum(a, b).squared_height() * intersect(a, b).squared_height();
  r.rhs_sq = a.squared_height() * b.squared_height();
  r.ratio_sq = mpq_class(r.lhs_sq, r.rhs_sq);
  r.ratio_sq.canonicalize();
  return r;
}

namespace {

RationalSubspace random_subspace(std::mt19937_64& rng, std::size_t d) {
  std::uniform_int_distribution<std::size_t> dim_dist(1, d);
  std::uniform_int_distribution<long> entry(-4, 4);
  const std::size_t k = dim_dist(rng);
  std::vector<IntVector> vs;
  for (std::size_t i = 0; i < k; ++i) {
    IntVector v(d);
    for (auto& e : v) e = entry(rng);
    vs.push_back(std::move(v));
  }
  return saturate(vs, d);
}

}  // namespace

FuzzReport schmidt_fuzz(std::size_t max_dim, std::size_t count, std::uint64_t seed) {
  if (max_dim < 2) fail(Errc::DomainError, "fuzzing needs ambient dimension at least 2");
  FuzzReport rep;
  rep.max_dim = max_dim;
  rep.count = count;
  rep.seed = seed;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> amb(2, max_dim);
  bool first = true;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t d = amb(rng);
    FuzzCase c;
    c.a = random_subspace(rng, d);
    c.b = random_subspace(rng, d);
    c.ratio = schmidt_ratio(c.a, c.b);
    for (const auto* w : {&c.a, &c.b}) {
      ++rep.duality_checked;
      if (orthogonal_complement(*w).squared_height() != w->squared_height()) ++rep.duality_failures;
      if (gram_determinant(*w) != w->squared_height()) ++rep.gram_failures;
    }
    if (c.ratio.ratio_sq == 1) ++rep.ratio_one;
    if (first || c.ratio.ratio_sq > rep.max_ratio_sq) {
      rep.max_ratio_sq = c.ratio.ratio_sq;
      rep.worst = c;
      first = false;
    }
  }
  return rep;
}

}  // namespace sdalab::subspaces
