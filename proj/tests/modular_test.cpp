#include <cmath>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/modular.hpp"

using namespace orlicz;

namespace {
constexpr double eps = 1e-10;

double rel(double a, double b) { return std::fabs(a - b) / std::max(std::fabs(a), std::fabs(b)); }
}  // namespace

TEST(Modular, stepsAreExact) {
  const DecreasingProfile p({{2, 0.5}, {1, 3}});
  EXPECT_NEAR(0.5 * 4 + 3 * 1, modular(YoungFunction::power(2.0), p).value(), 1e-14);
  const SimpleFunction f({{2, 0.5}, {-1, 3}});
  EXPECT_NEAR(0.5 * 4 + 3 * 1, modular(YoungFunction::power(2.0), f).value(), 1e-14);
}

TEST(Modular, exponentialTailMatchesClosedForm) {
  // int_0^inf (e^{-t})^2 dt = 1/2
  EXPECT_NEAR(0.5, modular(YoungFunction::power(2.0), DecreasingProfile::exponential(1.0, 1.0)).value(), eps);
  // int_0^inf cosh(e^{-t}) - 1 dt = Chi(1) - gamma
  const double chi1 = 0.8378669409802082;
  const double gamma = 0.5772156649015329;
  EXPECT_NEAR(chi1 - gamma, modular(YoungFunction::cosh_minus_1(), DecreasingProfile::exponential(1.0, 1.0)).value(), eps);
}

TEST(Modular, powerTailDecidesDivergence) {
  const auto y = YoungFunction::power(2.0);
  EXPECT_TRUE(modular(y, DecreasingProfile::power(1.0, 0.5)).is_infinite());
  // Tolerance is max(abs_tol, rel_tol * value).
  EXPECT_NEAR(1.0 / 3.0, modular(y, DecreasingProfile::power(1.0, 2.0)).value(), 1e-8 / 3.0);
}

TEST(Modular, logHeadMatchesSimpson) {
  const auto p = DecreasingProfile::log_singularity(0.5, 1.0);
  const auto y = YoungFunction::power(3.0);
  // int_0^1 (0.5 log 1/t)^3 dt = 0.125 * 3! = 0.75
  EXPECT_NEAR(0.75, modular(y, p).value(), eps);
  // cosh(a log 1/t) - 1 integrable iff a < 1: (1/(1-a) + 1/(1+a))/2 - 1
  const double a = 0.5;
  EXPECT_NEAR(0.5 * (1 / (1 - a) + 1 / (1 + a)) - 1,
              modular(YoungFunction::cosh_minus_1(), p).value(), eps);
  EXPECT_TRUE(modular(YoungFunction::cosh_minus_1(), DecreasingProfile::log_singularity(1.0)).is_infinite());
}

TEST(Modular, inversePowerHead) {
  const auto p = DecreasingProfile::inverse_power(1.0, 0.4);
  // int_0^1 t^{-0.8} dt = 5
  EXPECT_NEAR(5.0, modular(YoungFunction::power(2.0), p).value(), 1e-9);
  EXPECT_TRUE(modular(YoungFunction::power(3.0), p).is_infinite());
  EXPECT_TRUE(modular(YoungFunction::xlog1p(), DecreasingProfile::inverse_power(1.0, 1.0)).is_infinite());
}

TEST(Modular, weightedAgainstSimpson) {
  const DecreasingProfile p({{2, 1}}, ProfileTail::exponential(1.0, 0.5));
  const auto w = DecreasingProfile::power(1.0, 2.0);
  const auto y = YoungFunction::xlog1p();
  auto g = [&](long double t) {
    const double td = static_cast<double>(t);
    return static_cast<long double>(y(p(td)).value() * w(td));
  };
  // Remainder past 200 is below 1e-40.
  const long double want = oracle::simpson(g, 0.0L, 1.0L - 1e-15L, 20000) + oracle::simpson(g, 1.0L, 200.0L, 400000);
  EXPECT_LT(rel(static_cast<double>(want), modular(y, p, w).value()), 1e-9);
}

TEST(Modular, thresholdGivesInfinity) {
  const auto y = complement(YoungFunction::identity());
  EXPECT_NEAR(0.0, modular(y, DecreasingProfile({{1.0, 2.0}})).value(), 0.0);
  EXPECT_TRUE(modular(y, DecreasingProfile({{1.5, 2.0}})).is_infinite());
}

TEST(MomentTransform, analyticDomain) {
  const auto w = DecreasingProfile::exponential(1.0, 1.0);
  const auto d = moment_domain(DecreasingProfile::log_singularity(0.5), w);
  EXPECT_NEAR(2.0, d.upper, 1e-12);
  EXPECT_FALSE(d.upper_closed);
  EXPECT_TRUE(moment_domain(DecreasingProfile({{1, 1}}), w).zero_interior());
  EXPECT_FALSE(moment_domain(DecreasingProfile::inverse_power(1.0, 1.0), w).zero_interior());
  EXPECT_THROW(moment_domain(DecreasingProfile({{1, 1}}), DecreasingProfile::power(1.0, 0.5)), DomainError);
}

TEST(MomentTransform, closedFormValues) {
  const auto w = DecreasingProfile::exponential(1.0, 1.0);
  // int_0^1 t^{-t a} e^{-t}... use a step: M(t) = e^{2t}(1 - e^{-1}) + e^{-1}
  const DecreasingProfile p({{2, 1}});
  for (double t : {-1.0, 0.5, 2.0})
    EXPECT_LT(rel(std::exp(2 * t) * (1 - std::exp(-1.0)) + std::exp(-1.0), moment_transform(p, w, t).value()), 1e-10);
  // int_0^1 t^{-a} dt with weight 1 on (0,1]
  const DecreasingProfile w1({{1, 1}});
  EXPECT_LT(rel(1.0 / (1.0 - 0.5), moment_transform(DecreasingProfile::log_singularity(1.0), w1, 0.5).value()), 1e-9);
  EXPECT_TRUE(moment_transform(DecreasingProfile::log_singularity(1.0), w1, 1.0).is_infinite());
}
