#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/maps.hpp"

using namespace orlicz;

namespace {

Eigen::MatrixXcd random_matrix(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g;
  Eigen::MatrixXcd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = {g(rng), g(rng)};
  return a;
}

}  // namespace

TEST(PositiveMap, pinchingKeepsDiagonalBlocks) {
  const auto t = PositiveMap::pinching({{0, 2}, {1}});
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Ones(3, 3);
  const auto b = t.apply(MatrixObservable(a)).matrix();
  EXPECT_EQ(std::complex<double>(1.0), b(0, 2));
  EXPECT_EQ(std::complex<double>(0.0), b(0, 1));
  EXPECT_NEAR(1.0, t.trace_constant(), 0.0);
  EXPECT_THROW(PositiveMap::pinching({{0, 1}, {1}}), DomainError);
  EXPECT_THROW(t.apply(MatrixObservable::diagonal({1, 2})), DomainError);
}

TEST(PositiveMap, krausTraceConstant) {
  Eigen::MatrixXcd k = Eigen::MatrixXcd::Zero(2, 2);
  k(0, 0) = 2.0;
  k(1, 1) = 1.0;
  EXPECT_NEAR(4.0, PositiveMap::kraus({k}).trace_constant(), 1e-12);
  Eigen::MatrixXcd nu = Eigen::MatrixXcd::Identity(2, 2) * 1.1;
  EXPECT_THROW(PositiveMap::unitary_conjugation(nu), DomainError);
}

TEST(Majorization, profilesByPartialSums) {
  const DecreasingProfile f({{3, 1}, {1, 2}});
  const DecreasingProfile g({{2, 2}, {1, 1}});
  EXPECT_TRUE(majorization_check(f, g).majorized);
  EXPECT_FALSE(majorization_check(g, f).majorized);
  const auto r = majorization_check(f, g, std::vector<double>{0.5, 3.0});
  EXPECT_NEAR(static_cast<double>(oracle::step_partial({{3, 1}, {1, 2}}, 0.5) - oracle::step_partial({{2, 2}, {1, 1}}, 0.5)),
              r.margins[0], 1e-12);
}

TEST(Majorization, tailsUseGeometricGrid) {
  const auto f = DecreasingProfile::exponential(2.0, 1.0);
  const auto g = DecreasingProfile::exponential(1.0, 1.0);
  const auto r = majorization_check(f, g);
  EXPECT_TRUE(r.majorized);
  EXPECT_GE(r.alphas.size(), 20u);
}

TEST(Majorization, pinchingOutputIsMajorized) {
  std::mt19937_64 rng(8);
  const auto t = PositiveMap::pinching({{0, 1}, {2, 3, 4}});
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::MatrixXcd b = random_matrix(rng, 5);
    const MatrixObservable a(b * b.adjoint());
    EXPECT_TRUE(majorization_check(a, t.apply(a)).majorized);
  }
}

TEST(Extension, pinchingContractsAndUnitaryPreserves) {
  std::mt19937_64 rng(9);
  std::vector<MatrixObservable> sample;
  for (int i = 0; i < 10; ++i) {
    const Eigen::MatrixXcd b = random_matrix(rng, 4);
    sample.emplace_back(b * b.adjoint());
  }
  for (const char* name : {"power:2", "cosh-1", "xlog1p"}) {
    const auto y = YoungFunction::parse(name);
    const auto p = extension_boundedness_check(PositiveMap::pinching({{0}, {1, 2}, {3}}), y, sample);
    EXPECT_TRUE(p.sharp_contraction) << name;
    EXPECT_LE(p.max_ratio, 1.0 + 1e-9) << name;
    const Eigen::MatrixXcd u = Eigen::HouseholderQR<Eigen::MatrixXcd>(random_matrix(rng, 4)).householderQ();
    const auto r = extension_boundedness_check(PositiveMap::unitary_conjugation(u), y, sample);
    EXPECT_NEAR(1.0, r.max_ratio, 1e-12) << name;
    EXPECT_TRUE(r.bounded);
  }
}
