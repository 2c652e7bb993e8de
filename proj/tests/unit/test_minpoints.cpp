#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "oracles.hpp"
#include "sdalab/error.hpp"
#include "sdalab/minpoints.hpp"
#include "sdalab/model.hpp"
#include "sdalab/presets.hpp"

using namespace sdalab;
using namespace sdalab::minpoints;
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

MinimalPointSequence run(const std::string& preset, long x_max, unsigned threads = 1) {
  const auto t = model::load_target(presets::config(preset));
  EnumerationOptions opts;
  opts.threads = threads;
  return enumerate_minimal_points(t.target, t.set, x_max, opts);
}

std::vector<oracle::Point> as_points(const MinimalPointSequence& seq) {
  std::vector<oracle::Point> out;
  for (const auto& e : seq.entries) {
    oracle::Point p;
    for (const auto& c : e.point.coords()) p.push_back(c.get_si());
    out.push_back(p);
  }
  return out;
}

std::vector<oracle::Point> as_points(const std::vector<oracle::OracleEntry>& es) {
  std::vector<oracle::Point> out;
  for (const auto& e : es) out.push_back(e.x);
  return out;
}

}  // namespace

TEST(Enumerate, SqrtTwoToThirty) {
  const auto seq = run("sqrt2", 30);
  const std::vector<IntegerPoint> want{{0, 1}, {1, 1}, {2, 3}, {5, 7}, {12, 17}};
  EXPECT_EQ(seq.points(), want);
  EXPECT_EQ(seq.exhausted_up_to, 30);
  EXPECT_NEAR(seq[4].L.to_double(), std::abs(17 - 12 * std::sqrt(2.0)), 1e-14);
}

TEST(Enumerate, EvenFirstCoordinate) {
  const auto seq = run("sqrt2-even", 100);
  ASSERT_GE(seq.size(), 2u);
  EXPECT_EQ(seq[0].point, (IntegerPoint{0, 1}));
  EXPECT_EQ(seq[1].point, (IntegerPoint{2, 2}));
  EXPECT_EQ(seq[2].point, (IntegerPoint{2, 3}));
  for (const auto& e : seq.entries) EXPECT_EQ(e.point[0] % 2, 0);
}

TEST(Enumerate, ConvergentsUpToTenToTheFive) {
  const auto seq = run("sqrt2", 100000);
  const auto cf = oracle::sqrt2_convergents(100000);
  ASSERT_EQ(seq.size(), cf.size() + 1);
  for (std::size_t i = 0; i < cf.size(); ++i) {
    EXPECT_EQ(seq[i + 1].point[0], cf[i].first);
    EXPECT_EQ(seq[i + 1].point[1], cf[i].second);
  }
}

class PresetOracle : public ::testing::TestWithParam<std::string> {};

TEST_P(PresetOracle, FastEqualsIndependentSearchAndSatisfiesABC) {
  const long x_max = 600;
  const auto seq = run(GetParam(), x_max);
  const auto t = oracle::preset_target(GetParam());
  EXPECT_EQ(as_points(seq), as_points(oracle::minimal_points(t, x_max)));
  EXPECT_EQ(oracle::check_abc(t, as_points(seq), x_max), "");
}

TEST_P(PresetOracle, ExhaustiveScanAgrees) {
  const long x_max = 300;
  const auto t = model::load_target(presets::config(GetParam()));
  const auto fast = enumerate_minimal_points(t.target, t.set, x_max);
  const auto slow = exhaustive_minimal_points(t.target, t.set, x_max);
  EXPECT_EQ(fast.points(), slow.points());
}

TEST_P(PresetOracle, ThreadCountDoesNotChangeResult) {
  EXPECT_EQ(run(GetParam(), 2000, 1).points(), run(GetParam(), 2000, 3).points());
}

INSTANTIATE_TEST_SUITE_P(AllPresets, PresetOracle, ::testing::ValuesIn(presets::names()),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (auto& c : s)
                             if (c == '-') c = '_';
                           return s;
                         });

TEST(Enumerate, CheckerCatchesBrokenSequences) {
  const auto t = oracle::preset_target("sqrt2");
  EXPECT_NE(oracle::check_abc(t, {{0, 1}, {2, 3}, {5, 7}}, 10), "");   // (1,1) missing
  EXPECT_NE(oracle::check_abc(t, {{0, 1}, {1, 1}, {1, 2}}, 3), "");    // L increases
}

TEST(Enumerate, RationalCoordinateIsDependent) {
  const auto t = model::load_target(R"({"n":1,"coords":[1,{"type":"decimal","value":"1.5"}]})");
  EXPECT_EQ(code_of([&] { enumerate_minimal_points(t.target, t.set, 100); }), Errc::DependentCoordinates);
}

TEST(Envelope, Examples) {
  const auto seq = run("sqrt2", 30);
  const auto at10 = envelope(seq, 10);
  ASSERT_TRUE(at10);
  EXPECT_NEAR(at10->to_double(), 5 * std::sqrt(2.0) - 7, 1e-14);
  EXPECT_FALSE(envelope(seq, mpq_class(1, 2)));
  // X = ||(2,3)|| = sqrt 13 is not rational; just above and below it.
  EXPECT_NEAR(envelope(seq, mpq_class(3606, 1000))->to_double(), 3 - 2 * std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(envelope(seq, mpq_class(3605, 1000))->to_double(), std::sqrt(2.0) - 1, 1e-14);
  EXPECT_EQ(code_of([&] { envelope(seq, 31); }), Errc::BeyondCertifiedRange);
}

TEST(Dirichlet, SqrtTwoBoundedByConvergentLimit) {
  const auto seq = run("sqrt2", 100000);
  const auto rep = dirichlet_check(seq);
  // X_{i+1} L_i tends to sqrt3 (1 + sqrt2) / (2 sqrt2) along the convergents.
  EXPECT_LT(rep.sup.upper(), std::sqrt(3.0) * (1 + std::sqrt(2.0)) / (2 * std::sqrt(2.0)) + 0.02);
  // Independent value: max over convergents of |q sqrt2 - p| * ||next||.
  const auto cf = oracle::sqrt2_convergents(100000);
  double best = 0;
  std::vector<std::pair<long, long>> pts{{0, 1}};
  for (const auto& [q, p] : cf) pts.emplace_back(q.get_si(), p.get_si());
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double L = std::abs(pts[i].second - pts[i].first * std::sqrt(2.0));
    best = std::max(best, L * std::hypot(pts[i + 1].first, pts[i + 1].second));
  }
  EXPECT_NEAR(rep.sup.mid(), best, 1e-9);
}

TEST(Dirichlet, NeedsTwoPoints) {
  const auto seq = run("sqrt2", 1);
  EXPECT_EQ(code_of([&] { dirichlet_check(seq); }), Errc::TooFewPoints);
}

TEST(Dirichlet, CubicIsBounded) {
  const auto rep = dirichlet_check(run("cubic", 10000));
  EXPECT_LT(rep.sup.upper(), 2.0);
  EXPECT_GT(rep.sup.lower(), 0.1);
}

TEST(Csv, RoundTrip) {
  const auto seq = run("cubic", 1000);
  std::ostringstream out;
  write_csv(out, seq);
  std::istringstream in(out.str());
  const auto pts = read_csv_points(in);
  EXPECT_EQ(pts, seq.points());
  const auto again = from_points(seq.target, seq.set, pts, seq.exhausted_up_to);
  std::ostringstream out2;
  write_csv(out2, again);
  EXPECT_EQ(out.str(), out2.str());
  EXPECT_EQ(out.str().substr(0, out.str().find('\n')), "i,x_0,x_1,x_2,normSq,X_i,L_i,log10_X_i,neg_log10_L_i");
}

TEST(Enumerate, InvalidBound) {
  const auto t = model::load_target(presets::config("sqrt2"));
  EXPECT_EQ(code_of([&] { enumerate_minimal_points(t.target, t.set, mpq_class(1, 2)); }), Errc::DomainError);
}
