#pragma once

#include "orlicz/ext_real.hpp"

namespace orlicz {

/// Upper bound F(x) <= coef * x^index on [0, xmax].
struct PowerMajorant {
  double index = 1.0;
  double coef = 0.0;
};

/// Behaviour of F(x) as x -> infinity, used by the comparison tests.
///
///  - threshold:   F = +inf beyond `threshold`.
///  - polynomial:  c x^index <= F(x) <= coef x^index (1 + log(1 + x))^log_power
///                 for large x (the upper bound holds for every x >= 0).
///  - exponential: c e^{rate x} <= F(x) <= coef e^{rate x} for large x (the
///                 upper bound holds for every x >= 0).
///  - unknown:     no certified comparison available.
struct Growth {
  enum class Kind { threshold, polynomial, exponential, unknown };
  Kind kind = Kind::unknown;
  double threshold = kInf;
  double index = 0.0;
  double log_power = 0.0;
  double rate = 0.0;
  double coef = 0.0;

  static Growth polynomial(double index, double log_power, double coef) {
    return {Kind::polynomial, kInf, index, log_power, 0.0, coef};
  }
  static Growth exponential(double rate, double coef) {
    return {Kind::exponential, kInf, 0.0, 0.0, rate, coef};
  }
  static Growth at_threshold(double t) { return {Kind::threshold, t, 0.0, 0.0, 0.0, 0.0}; }
  static Growth unknown() { return {}; }
};

/// A nonnegative, non-decreasing function F on [0, inf) with F(0) = 0, as
/// consumed by the profile integration engine. Young functions are kernels;
/// so are the moment-transform integrands exp(t x) - 1.
class Kernel {
 public:
  virtual ~Kernel() = default;

  virtual ExtReal value(double x) const = 0;

  /// log F(x), usable where F(x) overflows a double.
  virtual double log_value(double x) const;

  /// sup{x : F(x) < inf}.
  virtual double threshold() const { return kInf; }
  /// Whether F(threshold()) is finite (meaningful for a finite threshold).
  virtual bool finite_at_threshold() const { return true; }

  /// sup{x : F(x) = 0}.
  virtual double vanishing_limit() const { return 0.0; }

  /// Exponent r with F(x) ~ x^r as x -> 0 (+inf when F vanishes near 0).
  virtual double small_index() const = 0;

  /// Certified power bound on [0, xmax]; the default uses the monotonicity
  /// of F(x)/x, valid for every convex F with F(0) = 0.
  virtual PowerMajorant small_majorant(double xmax) const;

  virtual Growth growth() const = 0;
};

}  // namespace orlicz
