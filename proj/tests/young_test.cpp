#include <cmath>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/young.hpp"

using namespace orlicz;

namespace {

constexpr double eps = 1e-12;

const char* const kCatalog[] = {"power:1.5", "power:2", "power:3", "identity",
                                "cosh-1",    "llog",    "xlog1p",  "llogl", "lexp"};

double rel(double a, double b) { return std::fabs(a - b) / std::max({std::fabs(a), std::fabs(b), 1e-300}); }

}  // namespace

TEST(Young, closedFormValues) {
  ASSERT_NEAR(9.0, YoungFunction::power(2.0)(3.0).value(), eps);
  ASSERT_NEAR(0.0, YoungFunction::cosh_minus_1()(0.0).value(), eps);
  ASSERT_NEAR(std::exp(1.0), YoungFunction::zygmund_exp()(2.0).value(), eps);
  ASSERT_NEAR(0.5, YoungFunction::zygmund_exp()(0.5).value(), eps);
  ASSERT_NEAR(0.0, YoungFunction::zygmund_llogl()(0.7).value(), eps);
  ASSERT_NEAR(2.0 * std::log(3.0), YoungFunction::xlog1p()(2.0).value(), eps);
}

TEST(Young, matchesOracleFormulas) {
  for (const char* name : kCatalog) {
    const auto y = YoungFunction::parse(name);
    const auto f = oracle::young(name);
    for (double s : {1e-6, 1e-3, 0.1, 0.5, 1.0, 1.5, 3.0, 10.0, 40.0}) {
      const double want = static_cast<double>(f(s));
      const double got = y(s).to_double();
      if (want == 0.0)
        EXPECT_EQ(0.0, got) << name << " at " << s;
      else
        EXPECT_LT(rel(want, got), 1e-9) << name << " at " << s;
    }
  }
}

TEST(Young, negativeArgumentIsDomainError) {
  EXPECT_THROW(YoungFunction::llog()(-1.0), DomainError);
  EXPECT_THROW(YoungFunction::power(2.0).density(-0.5), DomainError);
}

TEST(Young, parseRejectsUnknownNames) {
  EXPECT_THROW(YoungFunction::parse("cosh"), DomainError);
  EXPECT_THROW(YoungFunction::parse("power:0.5"), DomainError);
  EXPECT_THROW(YoungFunction::parse("power:x"), DomainError);
  EXPECT_EQ(YoungKind::power, YoungFunction::parse("identity").kind());
}

TEST(Young, catalogIsConvex) {
  const auto grid = geometric_grid(1e-4, 1e3, 1000);
  for (const char* name : kCatalog) EXPECT_TRUE(validate(YoungFunction::parse(name), grid).ok()) << name;
}

TEST(Complement, coshPairsWithLlog) {
  const auto numeric = numeric_complement(YoungFunction::cosh_minus_1());
  const auto closed = YoungFunction::llog();
  EXPECT_EQ(YoungKind::llog, complement(YoungFunction::cosh_minus_1()).kind());
  for (double t : default_grid()) EXPECT_LT(rel(closed(t).value(), numeric(t).value()), 1e-9) << t;
}

TEST(Complement, matchesLegendreOracle) {
  for (const char* name : kCatalog) {
    const auto phi = complement(YoungFunction::parse(name));
    const auto f = oracle::young(name);
    for (double v : {0.05, 0.3, 0.9, 1.0, 2.0, 7.5}) {
      const long double want = oracle::legendre(f, v);
      const ExtReal got = phi(v);
      if (std::isinf(static_cast<double>(want)) || want > 1e300L) {
        EXPECT_TRUE(got.is_infinite()) << name << " at " << v;
      } else if (want < 1e-300L) {
        EXPECT_NEAR(0.0, got.to_double(), 1e-12) << name << " at " << v;
      } else {
        EXPECT_LT(rel(static_cast<double>(want), got.to_double()), 1e-8) << name << " at " << v;
      }
    }
  }
}

TEST(Complement, identityIsIndicator) {
  const auto phi = complement(YoungFunction::identity());
  EXPECT_EQ(ExtReal(0.0), phi(0.5));
  EXPECT_EQ(ExtReal(0.0), phi(1.0));
  EXPECT_TRUE(phi(1.0001).is_infinite());
}

TEST(Complement, powerClosedForm) {
  const auto phi = complement(YoungFunction::power(3.0));
  ASSERT_TRUE(phi.power_params());
  EXPECT_NEAR(1.5, phi.power_params()->exponent, eps);
  EXPECT_NEAR(2.0 / 3.0 * std::pow(3.0, -0.5), phi.power_params()->coef, eps);
}

TEST(Complement, involution) {
  const auto grid = geometric_grid(1e-3, 1e2, 60);
  for (const char* name : {"power:3", "xlog1p", "cosh-1"}) {
    const auto y = YoungFunction::parse(name);
    const auto back = numeric_complement(numeric_complement(y));
    for (double s : grid) EXPECT_LT(rel(y(s).value(), back(s).value()), 1e-8) << name << " at " << s;
  }
}

TEST(Complement, youngInequalitySample) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 30.0);
  for (const char* name : kCatalog) {
    const auto y = YoungFunction::parse(name);
    const auto phi = complement(y);
    for (int i = 0; i < 500; ++i) {
      const double a = u(rng), b = u(rng);
      const ExtReal rhs = y(a) + phi(b);
      EXPECT_LE(a * b, rhs.to_double() * (1.0 + 1e-12) + 1e-12) << name;
    }
  }
}

TEST(Tabulated, integratesPiecewiseLinearDensity) {
  // Density 0 on [0,1], rising to 2 at 2, constant after.
  const auto y = YoungFunction::tabulated({{0, 0}, {1, 0}, {2, 2}});
  EXPECT_NEAR(0.0, y(1.0).value(), eps);
  EXPECT_NEAR(0.25, y(1.5).value(), eps);
  EXPECT_NEAR(1.0 + 2.0 * 3.0, y(5.0).value(), eps);
}

TEST(Tabulated, reflectionMatchesNumericComplement) {
  const auto y = YoungFunction::tabulated({{0, 0.5}, {1, 1}, {1, 3}, {4, 5}});
  const auto closed = complement(y);
  const auto numeric = numeric_complement(y);
  for (double t : {0.1, 0.5, 0.9, 2.0, 3.5, 5.0})
    EXPECT_LT(rel(closed(t).value(), numeric(t).value()), 1e-9) << t;
  EXPECT_TRUE(closed(5.5).is_infinite());
}

TEST(Tabulated, loadsTwoColumnText) {
  std::istringstream in("# x psi\n0 0\n1 1\n2 4\n");
  const auto y = YoungFunction::load_tabulated(in);
  EXPECT_NEAR(0.5, y(1.0).value(), eps);
  std::istringstream bad("0 0\n1 1\n1 2\n");
  EXPECT_THROW(YoungFunction::load_tabulated(bad), DomainError);
}
