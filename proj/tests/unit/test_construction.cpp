#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sdalab/construction.hpp"
#include "sdalab/error.hpp"
#include "sdalab/model.hpp"
#include "sdalab/presets.hpp"

using namespace sdalab;
using namespace sdalab::construction;
using model::IntegerPoint;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::IoError;
}

const minpoints::MinimalPointSequence& cubic() {
  static const auto seq = [] {
    const auto t = model::load_target(presets::config("cubic"));
    return minpoints::enumerate_minimal_points(t.target, t.set, 10000);
  }();
  return seq;
}

std::vector<std::vector<mpz_class>> rows(const std::vector<IntegerPoint>& pts, std::size_t i, std::size_t j) {
  std::vector<std::vector<mpz_class>> out;
  for (std::size_t k = i; k <= j; ++k) out.push_back(pts[k].coords());
  return out;
}

}  // namespace

TEST(SelectIndices, SyntheticPlane) {
  const std::vector<IntegerPoint> pts{{1, 0, 0}, {2, 1, 0}, {3, 2, 0}, {1, 1, 1}};
  EXPECT_EQ(select_indices(pts, 0, 2), (std::vector<std::size_t>{0, 2}));
}

TEST(SelectIndices, SyntheticFlag) {
  const std::vector<IntegerPoint> pts{{1, 0, 0}, {1, 1, 0}, {1, 1, 1}};
  EXPECT_EQ(select_indices(pts, 0, 2), (std::vector<std::size_t>{0, 1}));
}

TEST(SelectIndices, RunsOutOfData) {
  const std::vector<IntegerPoint> pts{{1, 0, 0}, {2, 1, 0}, {3, 2, 0}};
  EXPECT_EQ(code_of([&] { select_indices(pts, 0, 2); }), Errc::InsufficientData);
}

TEST(SelectIndices, CubicRanksByIndependentElimination) {
  const auto pts = cubic().points();
  for (std::size_t i0 = 0; i0 < pts.size(); ++i0) {
    std::vector<std::size_t> idx;
    try {
      idx = select_indices(pts, i0, 2);
    } catch (const Error& e) {
      ASSERT_EQ(e.code(), Errc::InsufficientData);
      continue;
    }
    ASSERT_EQ(idx.size(), 2u);
    EXPECT_EQ(idx[0], i0);
    // dim <x_{i0}..x_{i1}> = 2 and adding x_{i1+1} reaches 3.
    EXPECT_EQ(oracle::rank_q(rows(pts, i0, idx[1])), 2u);
    EXPECT_EQ(oracle::rank_q(rows(pts, i0, idx[1] + 1)), 3u);
  }
}

TEST(Family, SyntheticBaseCases) {
  const std::vector<IntegerPoint> pts{{1, 0, 0}, {2, 1, 0}, {3, 2, 0}, {1, 1, 1}};
  const auto fam = build_subspace_family(pts, {0, 2});
  EXPECT_EQ(fam.u(1, 1), subspaces::saturate({pts[2].coords()}, 3));
  EXPECT_EQ(fam.v(1, 2), subspaces::saturate({pts[2].coords(), pts[3].coords()}, 3));
  EXPECT_TRUE(verify_family_identities(fam).all_pass());
}

TEST(Family, CubicIdentitiesAndIndependentSpans) {
  const auto pts = cubic().points();
  int families = 0;
  for (std::size_t i0 = 0; i0 < pts.size(); ++i0) {
    std::vector<std::size_t> idx;
    try {
      idx = select_indices(pts, i0, 2);
    } catch (const Error&) {
      continue;
    }
    const auto fam = build_subspace_family(pts, idx);
    const auto rep = verify_family_identities(fam);
    EXPECT_TRUE(rep.all_pass()) << i0;
    EXPECT_TRUE(rep.s_table_decreasing);
    for (int t = 0; t < 2; ++t)
      for (int k = 1; k <= t + 1; ++k) {
        EXPECT_EQ(fam.u(t, k).dim(), static_cast<std::size_t>(k));
        // U_t^k = <x_{s(t,k)}, ..., x_{i_t}> by rational elimination.
        EXPECT_TRUE(oracle::same_span(fam.u(t, k).basis().row_vectors(), rows(pts, fam.s(t, k), idx[t])));
        EXPECT_TRUE(oracle::same_span(fam.v(t, k + 1).basis().row_vectors(), rows(pts, fam.s(t, k), idx[t] + 1)));
      }
    ++families;
  }
  EXPECT_GT(families, 3);
}

TEST(HeightProducts, RatiosAndLevels) {
  const auto pts = cubic().points();
  const auto fam = build_subspace_family(pts, select_indices(pts, 0, 2));
  const auto r = lemma32_check(fam, 1);
  // n = 2, k = 1: H(U_1^1) against H(V_0^2) H(V_1^2).
  const mpz_class lhs = fam.u(1, 1).squared_height();
  const mpz_class rhs = fam.v(0, 2).squared_height() * fam.v(1, 2).squared_height();
  EXPECT_EQ(r.lhs_sq, lhs);
  EXPECT_EQ(r.rhs_sq, rhs);
  mpq_class expected(lhs, rhs);
  expected.canonicalize();
  EXPECT_EQ(r.ratio_sq, expected);
  EXPECT_EQ(code_of([&] { lemma32_check(fam, 2); }), Errc::LevelOutOfRange);
  EXPECT_EQ(code_of([&] { lemma32_check(fam, 0); }), Errc::LevelOutOfRange);
}

TEST(ChainRatio, FormulaForNTwo) {
  const auto& seq = cubic();
  const auto rep = theorem31_ratio(seq, 0);
  ASSERT_EQ(rep.indices.size(), 2u);
  const std::size_t i0 = rep.indices[0], i1 = rep.indices[1];
  const double lhs = seq[i1].X.to_double();
  const double rhs = seq[i0].L.to_double() * seq[i0 + 1].X.to_double() * seq[i1].L.to_double() *
                     seq[i1 + 1].X.to_double();
  EXPECT_NEAR(rep.lhs.mid(), lhs, 1e-12 * lhs);
  EXPECT_NEAR(rep.rhs.mid(), rhs, 1e-12 * rhs);
  EXPECT_NEAR(rep.ratio.mid(), lhs / rhs, 1e-10 * lhs / rhs);
}
