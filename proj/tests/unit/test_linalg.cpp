#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sdalab/error.hpp"
#include "sdalab/intmat.hpp"
#include "sdalab/subspace.hpp"

using namespace sdalab;
using namespace sdalab::linalg;
using namespace sdalab::subspaces;

namespace {

IntVector v(std::initializer_list<long> xs) {
  IntVector out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

std::vector<IntVector> rows_of(const RationalSubspace& w) { return w.basis().row_vectors(); }

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  std::vector<IntVector> rows(r, IntVector(c));
  for (auto& row : rows)
    for (auto& x : row) x = d(rng);
  return IntMatrix::from_rows(rows, c);
}

}  // namespace

TEST(IntMat, DeterminantMatchesCofactorExpansion) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const auto m = random_matrix(rng, n, n, -6, 6);
    EXPECT_EQ(determinant(m), oracle::det_cofactor(m.row_vectors()));
  }
}

TEST(IntMat, RankMatchesRationalElimination) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + trial % 4, c = 2 + trial % 3;
    auto m = random_matrix(rng, r, c, -2, 2);
    EXPECT_EQ(rank(m), oracle::rank_q(m.row_vectors()));
  }
}

TEST(IntMat, HermiteFormSpansSameLatticeAndIsEchelon) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = random_matrix(rng, 3, 4, -5, 5);
    const auto h = hermite_normal_form(m);
    EXPECT_TRUE(oracle::same_span(h.row_vectors(), m.row_vectors()));
    for (const auto& row : m.row_vectors()) EXPECT_TRUE(in_row_lattice(h, row));
    // Pivots strictly move right and are positive.
    long last = -1;
    for (std::size_t i = 0; i < h.rows(); ++i) {
      std::size_t p = 0;
      while (p < h.cols() && h(i, p) == 0) ++p;
      ASSERT_LT(p, h.cols());
      EXPECT_GT(h(i, p), 0);
      EXPECT_GT(static_cast<long>(p), last);
      last = static_cast<long>(p);
    }
  }
}

TEST(IntMat, KernelIsOrthogonalAndOfRightDimension) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = random_matrix(rng, 2, 5, -3, 3);
    const auto k = integer_kernel(m);
    EXPECT_EQ(k.rows() + rank(m), m.cols());
    for (const auto& kr : k.row_vectors())
      for (const auto& mr : m.row_vectors()) EXPECT_EQ(dot(kr, mr), 0);
  }
}

TEST(Saturate, Examples) {
  const auto a = saturate({v({2, 0, 0}), v({0, 1, 0})}, 3);
  EXPECT_EQ(rows_of(a), (std::vector<IntVector>{v({1, 0, 0}), v({0, 1, 0})}));
  EXPECT_EQ(a.squared_height(), 1);
  const auto b = saturate({v({1, 2, 3})}, 3);
  EXPECT_EQ(b.squared_height(), 14);
  const auto c = saturate({v({2, 4, 6})}, 3);
  EXPECT_EQ(rows_of(c), (std::vector<IntVector>{v({1, 2, 3})}));
  EXPECT_EQ(c.squared_height(), 14);
}

TEST(Height, Examples) {
  EXPECT_EQ(RationalSubspace::whole(4).squared_height(), 1);
  EXPECT_EQ(RationalSubspace::zero(4).squared_height(), 1);
  EXPECT_EQ(height(RationalSubspace::whole(3)).exact_value(), mpq_class(1));
  EXPECT_NEAR(height(saturate({v({1, 2, 3})}, 3)).to_double(), 3.74165738677, 1e-10);
  EXPECT_EQ(saturate({v({1, 0, 1}), v({1, 0, -1})}, 3).squared_height(), 1);
}

TEST(Height, PluckerEqualsGramAndDualityOnRandomSubspaces) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 2 + trial % 4;
    const auto m = random_matrix(rng, 1 + trial % d, d, -4, 4);
    const auto w = saturate(m);
    EXPECT_EQ(w.squared_height(), gram_determinant(w));
    EXPECT_EQ(w.squared_height(), orthogonal_complement(w).squared_height());
    EXPECT_TRUE(oracle::same_span(rows_of(w), m.row_vectors()) || w.dim() == 0);
  }
}

TEST(SumIntersect, Examples) {
  const auto x = saturate({v({1, 0, 0})}, 3), y = saturate({v({0, 1, 0})}, 3), z = saturate({v({0, 0, 1})}, 3);
  const auto xy = sum(x, y);
  EXPECT_EQ(xy.dim(), 2u);
  EXPECT_EQ(xy.squared_height(), 1);
  EXPECT_EQ(sum(xy, xy), xy);
  EXPECT_EQ(intersect(xy, xy), xy);
  EXPECT_EQ(intersect(xy, sum(y, z)), y);
  const auto p = saturate({v({1, 0, 1})}, 3), q = saturate({v({1, 0, -1})}, 3);
  EXPECT_EQ(sum(p, q), sum(x, z));
  EXPECT_EQ(intersect(saturate({v({1, 1, 0}), v({0, 0, 1})}, 3), saturate({v({1, -1, 0}), v({0, 0, 1})}, 3)), z);
}

TEST(SumIntersect, DimensionFormulaOnRandomPairs) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 3 + trial % 3;
    const auto a = saturate(random_matrix(rng, 1 + trial % (d - 1), d, -3, 3));
    const auto b = saturate(random_matrix(rng, 1 + (trial / 3) % (d - 1), d, -3, 3));
    const auto s = sum(a, b), i = intersect(a, b);
    EXPECT_EQ(s.dim() + i.dim(), a.dim() + b.dim());
    for (const auto& r : rows_of(i)) {
      EXPECT_TRUE(a.contains(r));
      EXPECT_TRUE(b.contains(r));
    }
  }
}

TEST(SumIntersect, AmbientMismatch) {
  try {
    sum(RationalSubspace::whole(2), RationalSubspace::whole(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::AmbientMismatch);
  }
}

TEST(Schmidt, Examples) {
  const auto x = saturate({v({1, 0, 0})}, 3), y = saturate({v({0, 1, 0})}, 3), z = saturate({v({0, 0, 1})}, 3);
  const auto r1 = schmidt_ratio(sum(x, y), z);
  EXPECT_EQ(r1.lhs_sq, 1);
  EXPECT_EQ(r1.rhs_sq, 1);
  const auto p = saturate({v({1, 0, 1})}, 3), q = saturate({v({1, 0, -1})}, 3);
  const auto r2 = schmidt_ratio(p, q);
  EXPECT_EQ(r2.lhs_sq, 1);
  EXPECT_EQ(r2.rhs_sq, 4);
  EXPECT_EQ(r2.ratio_sq, mpq_class(1, 4));
  EXPECT_EQ(schmidt_ratio(p, p).ratio_sq, 1);
}

TEST(Schmidt, FuzzIsDeterministic) {
  const auto a = schmidt_fuzz(4, 200, 9), b = schmidt_fuzz(4, 200, 9);
  EXPECT_EQ(a.max_ratio_sq, b.max_ratio_sq);
  EXPECT_EQ(a.ratio_one, b.ratio_one);
  EXPECT_EQ(a.duality_failures, 0u);
  EXPECT_EQ(a.gram_failures, 0u);
}
