#pragma once

#include <vector>

#include "orlicz/ext_real.hpp"
#include "orlicz/measure.hpp"

namespace orlicz {

struct Step {
  double level = 0.0;
  double length = 0.0;
  friend bool operator==(const Step&, const Step&) = default;
};

/// Unbounded part near t = 0, on (0, end):
///   log:           scale * log(1/t)   (end <= 1)
///   inverse_power: scale * t^-exponent
struct ProfileHead {
  enum class Kind { none, log, inverse_power };
  Kind kind = Kind::none;
  double scale = 1.0;
  double exponent = 1.0;
  double end = 1.0;
};

/// Part after the last step, in local time s >= 0 measured from the junction:
///   exponential: amplitude * e^{-rate s}
///   power:       amplitude * (offset + s)^-exponent
struct ProfileTail {
  enum class Kind { zero, exponential, power };
  Kind kind = Kind::zero;
  double amplitude = 0.0;
  double rate = 0.0;
  double exponent = 0.0;
  double offset = 1.0;

  static ProfileTail exponential(double amplitude, double rate) {
    return {Kind::exponential, amplitude, rate, 0.0, 1.0};
  }
  static ProfileTail power(double amplitude, double exponent, double offset = 1.0) {
    return {Kind::power, amplitude, 0.0, exponent, offset};
  }
};

/// One analytic piece of a profile on [start, end).
struct ProfilePiece {
  enum class Shape { constant, log_head, power_head, exp_tail, power_tail, zero };
  Shape shape = Shape::zero;
  double start = 0.0;
  double end = kInf;
  /// Level for constant pieces, scale or amplitude otherwise.
  double coef = 0.0;
  /// Head or tail exponent, or the exponential rate.
  double exponent = 0.0;
  double offset = 0.0;

  double value(double t) const;
  /// Value at start (right limit); +inf for heads.
  double sup() const;
  /// Exact integral over [a, b] within the piece; b may be +inf.
  ExtReal integral(double a, double b) const;
};

/// Non-increasing, right-continuous function on (0, inf): optional head,
/// finite step sequence, parametric tail.
class DecreasingProfile {
 public:
  DecreasingProfile() = default;
  /// Equal adjacent levels are merged and zero levels at the end dropped.
  /// Throws DomainError if the assembled function would increase anywhere.
  explicit DecreasingProfile(std::vector<Step> steps, ProfileTail tail = {},
                             ProfileHead head = {});

  static DecreasingProfile log_singularity(double scale = 1.0, double end = 1.0);
  static DecreasingProfile inverse_power(double scale, double exponent, double end = 1.0);
  static DecreasingProfile exponential(double amplitude, double rate);
  static DecreasingProfile power(double amplitude, double exponent, double offset = 1.0);

  const std::vector<Step>& steps() const { return steps_; }
  const ProfileTail& tail() const { return tail_; }
  const ProfileHead& head() const { return head_; }

  double head_end() const { return head_.kind == ProfileHead::Kind::none ? 0.0 : head_.end; }
  /// Start of the tail.
  double junction() const;

  double operator()(double t) const;
  /// sup of the profile (value at 0+).
  double sup() const;
  bool is_zero() const;
  bool bounded() const { return head_.kind == ProfileHead::Kind::none; }
  bool has_tail() const { return tail_.kind != ProfileTail::Kind::zero; }

  DecreasingProfile scaled(double c) const;
  std::vector<ProfilePiece> pieces() const;
  /// Start points of the pieces, increasing, beginning with 0.
  std::vector<double> breakpoints() const;

  friend bool operator==(const DecreasingProfile&, const DecreasingProfile&);

 private:
  std::vector<Step> steps_;
  ProfileTail tail_;
  ProfileHead head_;
};

/// Decreasing rearrangement of |f|: sorted levels, lengths are summed weights.
DecreasingProfile rearrange(const SimpleFunction& f);

/// Integral of the profile over (0, alpha]; alpha may be +inf.
ExtReal hl_partial(const DecreasingProfile& p, double alpha);

}  // namespace orlicz
