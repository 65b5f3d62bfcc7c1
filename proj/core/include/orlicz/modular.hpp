#pragma once

#include "orlicz/ext_real.hpp"
#include "orlicz/kernel.hpp"
#include "orlicz/measure.hpp"
#include "orlicz/profile.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

struct ModularOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  int max_intervals = 2000;
};

/// int_0^inf F(p(t)) w(t) dt, with w = 1 (Lebesgue) when `weight` is null.
///
/// Constant pieces of p integrate in closed form. Analytic pieces use
/// adaptive Gauss-Kronrod quadrature; unbounded regions are truncated where a
/// certified majorant bounds the remainder. Divergence is decided by
/// comparison tests on the (growth of F) x (shape of p, w) combination and
/// reported as +inf. Throws InconclusiveError when neither finiteness nor
/// divergence can be certified.
ExtReal kernel_integral(const Kernel& f, const DecreasingProfile& p,
                        const DecreasingProfile* weight, const ModularOptions& opts = {});

/// int_0^inf Psi(p(t)) dt.
ExtReal modular(const YoungFunction& y, const DecreasingProfile& p,
                const ModularOptions& opts = {});
/// int_0^inf Psi(p(t)) w(t) dt.
ExtReal modular(const YoungFunction& y, const DecreasingProfile& p,
                const DecreasingProfile& weight, const ModularOptions& opts = {});
/// sum_i weight_i Psi(|value_i|).
ExtReal modular(const YoungFunction& y, const SimpleFunction& f);

/// M(t) = int_0^inf exp(t p(s)) w(s) ds for an integrable weight w.
ExtReal moment_transform(const DecreasingProfile& p, const DecreasingProfile& weight,
                         double t, const ModularOptions& opts = {});

/// Interval {t : M(t) < inf}. The lower end is always -inf.
struct MomentDomain {
  double lower = -kInf;
  double upper = kInf;
  bool upper_closed = false;

  bool contains(double t) const {
    return t > lower && (t < upper || (upper_closed && t == upper));
  }
  /// 0 lies in the interior.
  bool zero_interior() const { return upper > 0.0; }
};

MomentDomain moment_domain(const DecreasingProfile& p, const DecreasingProfile& weight);

}  // namespace orlicz
