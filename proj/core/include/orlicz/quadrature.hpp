#pragma once

#include <functional>

namespace orlicz::quad {

struct Options {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  int max_intervals = 2000;
};

struct Result {
  double value = 0.0;
  double error = 0.0;
  bool converged = false;
  int evaluations = 0;
};

/// 15-point Gauss-Kronrod rule on [a, b]; `error` is the QUADPACK-style
/// estimate derived from the embedded 7-point Gauss rule.
Result gauss_kronrod15(const std::function<double(double)>& f, double a, double b);

/// Globally adaptive Gauss-Kronrod integration on a finite interval: the
/// subinterval with the largest error estimate is bisected until
/// error <= max(abs_tol, rel_tol * |value|) or the interval budget runs out.
/// The subdivision order is deterministic.
Result integrate(const std::function<double(double)>& f, double a, double b,
                 const Options& opts = {});

}  // namespace orlicz::quad
