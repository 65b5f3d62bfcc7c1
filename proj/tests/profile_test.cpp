#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/profile.hpp"

using namespace orlicz;

namespace {
constexpr double eps = 1e-12;
}

TEST(Profile, mergesEqualLevelsAndDropsZeros) {
  const DecreasingProfile p({{3, 1}, {3, 2}, {1, 1}, {0, 5}});
  ASSERT_EQ(2u, p.steps().size());
  EXPECT_EQ((Step{3, 3}), p.steps()[0]);
  EXPECT_NEAR(4.0, p.junction(), eps);
}

TEST(Profile, rejectsIncreasingSteps) {
  EXPECT_THROW(DecreasingProfile({{1, 1}, {2, 1}}), DomainError);
  EXPECT_THROW(DecreasingProfile({{1, 1}}, ProfileTail::exponential(2.0, 1.0)), DomainError);
  EXPECT_THROW(DecreasingProfile({{1, -1}}), DomainError);
}

TEST(Profile, rightContinuousEvaluation) {
  const DecreasingProfile p({{3, 1}, {1, 1}}, ProfileTail::exponential(0.5, 2.0));
  EXPECT_NEAR(3.0, p(0.5), eps);
  EXPECT_NEAR(1.0, p(1.0), eps);
  EXPECT_NEAR(0.5, p(2.0), eps);
  EXPECT_NEAR(0.5 * std::exp(-2.0), p(3.0), eps);
  EXPECT_NEAR(3.0, p.sup(), eps);
}

TEST(Profile, headsAreUnbounded) {
  const auto lg = DecreasingProfile::log_singularity(2.0, 0.5);
  EXPECT_FALSE(lg.bounded());
  EXPECT_NEAR(2.0 * std::log(4.0), lg(0.25), eps);
  const auto ip = DecreasingProfile::inverse_power(1.0, 0.5);
  EXPECT_NEAR(2.0, ip(0.25), eps);
  EXPECT_TRUE(std::isinf(ip.sup()));
}

TEST(Rearrange, sortsByLevel) {
  const SimpleFunction f({{-1.0, 2.0}, {4.0, 0.5}, {1.0, 1.0}, {0.0, 3.0}});
  const auto p = rearrange(f);
  ASSERT_EQ(2u, p.steps().size());
  EXPECT_EQ((Step{4.0, 0.5}), p.steps()[0]);
  EXPECT_EQ((Step{1.0, 3.0}), p.steps()[1]);
}

TEST(Rearrange, preservesDistribution) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Atom> atoms;
    for (int i = 0; i < 6; ++i) atoms.push_back({10.0 * u(rng) - 5.0, u(rng) + 0.01});
    const auto p = rearrange(SimpleFunction(atoms));
    for (double s : {0.0, 0.5, 1.0, 2.5, 4.0}) {
      double want = 0.0, got = 0.0;
      for (const auto& a : atoms)
        if (std::fabs(a.value) > s) want += a.weight;
      for (const auto& st : p.steps())
        if (st.level > s) got += st.length;
      EXPECT_NEAR(want, got, 1e-12);
    }
  }
}

TEST(HardyLittlewood, stepPartialsMatchDirectSum) {
  const std::vector<std::pair<double, double>> raw{{5, 0.5}, {2, 1.5}, {1, 2}};
  std::vector<Step> steps;
  for (auto [l, w] : raw) steps.push_back({l, w});
  const DecreasingProfile p(steps);
  for (double a : {0.1, 0.5, 1.3, 2.0, 3.9, 10.0})
    EXPECT_NEAR(static_cast<double>(oracle::step_partial(raw, a)), hl_partial(p, a).value(), eps);
}

TEST(HardyLittlewood, analyticPiecesMatchSimpson) {
  const DecreasingProfile p({{3, 1}}, ProfileTail::power(2.0, 3.0));
  auto f = [&](long double t) { return static_cast<long double>(p(static_cast<double>(t))); };
  const double want = 3.0 + static_cast<double>(oracle::simpson(f, 1.0L, 5.0L, 4000));
  EXPECT_NEAR(want, hl_partial(p, 5.0).value(), 1e-10);
  EXPECT_NEAR(3.0 + 1.0, hl_partial(p, kInf).value(), 1e-12);
  EXPECT_TRUE(hl_partial(DecreasingProfile::power(1.0, 1.0), kInf).is_infinite());
  EXPECT_NEAR(0.5 * (1.0 + std::log(2.0)), hl_partial(DecreasingProfile::log_singularity(1.0, 1.0), 0.5).value(), 1e-12);
}
