#pragma once

#include <cmath>
#include <compare>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace orlicz {

/// Extended nonnegative real number: a finite value or +infinity.
///
/// Mathematical infinity is carried by an explicit flag. A finite value can
/// still saturate to a double `inf` through overflow (for example
/// cosh(800) - 1); `is_finite()` keeps reporting mathematical finiteness in
/// that case, while comparisons order it above every representable double.
class ExtReal {
 public:
  constexpr ExtReal() = default;
  constexpr ExtReal(double v) : value_(v) {}  // NOLINT(implicit)

  static constexpr ExtReal infinity() {
    ExtReal r;
    r.infinite_ = true;
    r.value_ = std::numeric_limits<double>::infinity();
    return r;
  }

  constexpr bool is_finite() const { return !infinite_; }
  constexpr bool is_infinite() const { return infinite_; }

  /// Numeric view; +inf for the infinite value.
  constexpr double to_double() const { return value_; }

  /// Finite value; throws for +infinity.
  double value() const {
    if (infinite_) throw std::logic_error("ExtReal::value() on +infinity");
    return value_;
  }

  friend constexpr ExtReal operator+(ExtReal a, ExtReal b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return ExtReal(a.value_ + b.value_);
  }
  ExtReal& operator+=(ExtReal other) { return *this = *this + other; }

  /// Multiplication by a nonnegative scalar with the measure-theory
  /// convention 0 * inf = 0.
  friend ExtReal operator*(double c, ExtReal a) {
    if (c == 0.0) return ExtReal(0.0);
    if (a.infinite_) return infinity();
    return ExtReal(c * a.value_);
  }
  friend ExtReal operator*(ExtReal a, double c) { return c * a; }

  friend constexpr bool operator==(ExtReal a, ExtReal b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  friend constexpr std::partial_ordering operator<=>(ExtReal a, ExtReal b) {
    if (a.infinite_ && b.infinite_) return std::partial_ordering::equivalent;
    if (a.infinite_) return std::partial_ordering::greater;
    if (b.infinite_) return std::partial_ordering::less;
    return a.value_ <=> b.value_;
  }

  friend std::ostream& operator<<(std::ostream& os, ExtReal v) {
    if (v.infinite_) return os << "+inf";
    return os << v.value_;
  }

 private:
  double value_ = 0.0;
  bool infinite_ = false;
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace orlicz
