#include <cmath>

#include <gtest/gtest.h>

#include "orlicz/young_checks.hpp"

using namespace orlicz;

TEST(Delta2, powerHasConstantTwoToP) {
  const auto r = delta2_check(YoungFunction::power(2.5), default_grid());
  ASSERT_TRUE(r.holds);
  EXPECT_NEAR(std::pow(2.0, 2.5), r.c, 1e-12);
}

TEST(Delta2, coshFails) {
  EXPECT_FALSE(delta2_check(YoungFunction::cosh_minus_1(), default_grid()).holds);
}

TEST(Delta2, xlog1pHolds) {
  const auto r = delta2_check(YoungFunction::xlog1p(), default_grid());
  ASSERT_TRUE(r.holds);
  EXPECT_LE(r.c, 4.0);
  EXPECT_GE(r.c, 2.0);
}

TEST(Nabla2, powerAndCoshHold) {
  EXPECT_TRUE(nabla2_check(YoungFunction::power(2.0), default_grid()).holds);
  EXPECT_TRUE(nabla2_check(YoungFunction::cosh_minus_1(), default_grid()).holds);
}

TEST(Nabla2, identityFails) {
  EXPECT_FALSE(nabla2_check(YoungFunction::identity(), default_grid()).holds);
  EXPECT_FALSE(nabla2_check(YoungFunction::xlog1p(), default_grid()).holds);
}

TEST(Equivalence, xlog1pAndLlog) {
  const auto r = equivalence_check(YoungFunction::xlog1p(), YoungFunction::llog(), default_grid());
  EXPECT_TRUE(r.equivalent);
  EXPECT_GT(r.b_forward, 0.0);
  EXPECT_GT(r.b_backward, 0.0);
}

TEST(Equivalence, coshAndLexpAtInfinity) {
  const auto grid = geometric_grid(1.0, 1e6, 256);
  EXPECT_TRUE(equivalence_check(YoungFunction::cosh_minus_1(), YoungFunction::zygmund_exp(), grid).equivalent);
}

TEST(Equivalence, powersOfDifferentOrderAreNot) {
  EXPECT_FALSE(equivalence_check(YoungFunction::power(2.0), YoungFunction::power(3.0),
                                 geometric_grid(1.0, 1e12, 256)).equivalent);
}
