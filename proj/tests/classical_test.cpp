#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "orlicz/classical.hpp"
#include "orlicz/errors.hpp"

using namespace orlicz;

namespace {

double rel(double a, double b) { return std::fabs(a - b) / std::max(std::fabs(a), std::fabs(b)); }

std::vector<std::pair<double, double>> pairs(const SimpleFunction& f) {
  std::vector<std::pair<double, double>> out;
  for (const auto& a : f.atoms()) out.emplace_back(a.value, a.weight);
  return out;
}

}  // namespace

TEST(Luxemburg, powerIsLpNorm) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const double p = 1.0 + 5.0 * u(rng);
    std::vector<Atom> atoms;
    for (int i = 0; i < 5; ++i) atoms.push_back({8.0 * u(rng) - 4.0, 2.0 * u(rng) + 0.01});
    const SimpleFunction f(atoms);
    const auto r = luxemburg_norm(YoungFunction::power(p), f);
    EXPECT_TRUE(r.converged);
    EXPECT_LT(rel(static_cast<double>(oracle::lp_norm(pairs(f), p)), r.value.value()), 1e-10) << p;
  }
}

TEST(Luxemburg, indicatorMatchesRootFind) {
  for (const char* name : {"power:2", "identity", "cosh-1", "llog", "xlog1p", "llogl", "lexp"}) {
    const auto y = YoungFunction::parse(name);
    for (double m : {0.01, 0.3, 1.0, 4.0, 100.0}) {
      const auto r = luxemburg_norm(y, SimpleFunction({{1.0, m}}));
      const double want = static_cast<double>(oracle::indicator_norm(oracle::young(name), m));
      EXPECT_LT(rel(want, r.value.value()), 1e-9) << name << " m=" << m;
      EXPECT_LT(rel(1.0 / y.inverse(1.0 / m), r.value.value()), 1e-9) << name << " m=" << m;
    }
  }
}

TEST(Luxemburg, profileWithHeadAndTail) {
  // ||e^{-t}||_2 = 1/sqrt(2)
  const auto r = luxemburg_norm(YoungFunction::power(2.0), DecreasingProfile::exponential(1.0, 1.0));
  EXPECT_NEAR(std::sqrt(0.5), r.value.value(), 1e-9);
  // log(1/t) on (0,1] is not in L^{cosh-1}... its multiples below 1 are: norm finite.
  const auto c = luxemburg_norm(YoungFunction::cosh_minus_1(), DecreasingProfile::log_singularity(1.0));
  EXPECT_TRUE(c.value.is_finite());
  EXPECT_TRUE(luxemburg_norm(YoungFunction::power(2.0), DecreasingProfile::inverse_power(1.0, 0.5)).value.is_infinite());
}

TEST(Luxemburg, zeroFunction) {
  EXPECT_EQ(ExtReal(0.0), luxemburg_norm(YoungFunction::llog(), SimpleFunction({{0.0, 2.0}})).value);
}

TEST(Orlicz, amemiyaMatchesBruteForceSup) {
  const SimpleFunction two({{1.0, 1.0}, {1.0, 1.0}});
  EXPECT_NEAR(2.0 * std::sqrt(2.0), orlicz_norm(YoungFunction::power(2.0), two).value.value(), 1e-9);

  const SimpleFunction f({{2.0, 0.5}, {-1.0, 1.0}, {0.5, 2.0}, {0.1, 0.3}});
  for (const char* name : {"power:2", "power:3", "cosh-1", "xlog1p"}) {
    const auto y = oracle::young(name);
    auto phi = [&](long double v) { return oracle::legendre(y, v); };
    const double want = static_cast<double>(oracle::orlicz_sup(pairs(f), phi));
    EXPECT_LT(rel(want, orlicz_norm(YoungFunction::parse(name), f).value.value()), 1e-6) << name;
  }
}

TEST(Orlicz, betweenLuxemburgAndTwiceIt) {
  const SimpleFunction f({{3.0, 0.2}, {1.0, 1.5}});
  for (const char* name : {"power:1.5", "cosh-1", "llog", "lexp"}) {
    const auto y = YoungFunction::parse(name);
    const double lux = luxemburg_norm(y, f).value.value();
    const double orl = orlicz_norm(y, f).value.value();
    EXPECT_LE(lux, orl * (1 + 1e-10)) << name;
    EXPECT_LE(orl, 2.0 * lux * (1 + 1e-10)) << name;
  }
}

TEST(Holder, holdsOnRandomPairs) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const char* name : {"power:3", "cosh-1", "xlog1p"}) {
    const auto y = YoungFunction::parse(name);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<Atom> fa, ga;
      for (int i = 0; i < 4; ++i) {
        const double w = u(rng) + 0.05;
        fa.push_back({5.0 * u(rng), w});
        ga.push_back({5.0 * u(rng), w});
      }
      EXPECT_TRUE(holder_check(SimpleFunction(fa), SimpleFunction(ga), y).holds) << name;
    }
  }
}

TEST(Holder, rejectsMismatchedWeights) {
  EXPECT_THROW(holder_check(SimpleFunction({{1, 1}}), SimpleFunction({{1, 2}}), YoungFunction::power(2)), DomainError);
}

TEST(Membership, distinguishesByHead) {
  const auto lg = DecreasingProfile::log_singularity(1.0);
  EXPECT_TRUE(membership(YoungFunction::cosh_minus_1(), lg).member);
  EXPECT_FALSE(membership(YoungFunction::cosh_minus_1(), DecreasingProfile::inverse_power(1.0, 0.1)).member);
  EXPECT_TRUE(membership(YoungFunction::xlog1p(), DecreasingProfile::inverse_power(1.0, 0.9)).member);
  EXPECT_FALSE(membership(YoungFunction::power(2.0), DecreasingProfile::power(1.0, 0.4)).member);
}

TEST(Embedding, chainOnProbabilitySpace) {
  const SimpleFunction f({{3.0, 0.25}, {1.0, 0.5}, {0.0, 0.25}}, MeasureSpaceDesc::probability());
  const auto t = embedding_chain_check(f, 2.0);
  EXPECT_TRUE(t.finiteness_monotone());
  EXPECT_NEAR(3.0, t.sup_norm.value(), 0.0);
  EXPECT_NEAR(std::sqrt(0.25 * 9 + 0.5), t.lp_norm.value(), 1e-10);
  EXPECT_NEAR(0.25 * 3 + 0.5, t.l1_norm.value(), 1e-10);
}

TEST(Embedding, singularProfilesLeaveTheChainInOrder) {
  const auto t = embedding_chain_check(DecreasingProfile::inverse_power(1.0, 0.7), 2.0);
  EXPECT_TRUE(t.sup_norm.is_infinite());
  EXPECT_TRUE(t.exp_norm.is_infinite());
  EXPECT_TRUE(t.lp_norm.is_infinite());
  EXPECT_TRUE(t.llogl_norm.is_finite());
  EXPECT_TRUE(t.finiteness_monotone());
  const auto l = embedding_chain_check(DecreasingProfile::log_singularity(1.0), 4.0);
  EXPECT_TRUE(l.sup_norm.is_infinite());
  EXPECT_TRUE(l.exp_norm.is_finite());
}

TEST(Entropy, boundsAreTightAtExtremes) {
  const double v = std::exp(-2.0);
  const auto b = entropy_bounds(SimpleFunction({{v, 1.0}}));
  EXPECT_NEAR(b.lower, b.value, 1e-15);
  const auto big = entropy_bounds(SimpleFunction({{1e3, 1.0}}));
  EXPECT_LT(big.upper / big.value, 1.001);
  EXPECT_THROW(entropy(SimpleFunction({{-1.0, 1.0}})), DomainError);
  EXPECT_NEAR(0.0, entropy(SimpleFunction({{0.0, 1.0}, {1.0, 1.0}})), 0.0);
}

TEST(Regular, coshMembershipAgreesWithMomentDomain) {
  const auto w = DecreasingProfile::exponential(1.0, 1.0);
  const auto a = classical_regular_check(DecreasingProfile::log_singularity(0.5), w);
  EXPECT_TRUE(a.regular);
  EXPECT_TRUE(a.cosh_member);
  EXPECT_TRUE(a.agrees);
  const auto b = classical_regular_check(DecreasingProfile::inverse_power(1.0, 1.0), w);
  EXPECT_FALSE(b.regular);
  EXPECT_FALSE(b.cosh_member);
  EXPECT_TRUE(b.agrees);
}

TEST(Regular, densityStateRequiresUnitMass) {
  EXPECT_THROW(WeightedDensityState(SimpleFunction({{0.5, 1.0}})), DomainError);
  const WeightedDensityState s(SimpleFunction({{2.0, 0.25}, {2.0 / 3.0, 0.75}}));
  const auto r = classical_regular_check(SimpleFunction({{10.0, 0.25}, {-3.0, 0.75}}), s);
  EXPECT_TRUE(r.regular);
  EXPECT_TRUE(r.agrees);
}
