#pragma once

#include <iosfwd>
#include <vector>

#include "orlicz/ext_real.hpp"

namespace orlicz {

struct MeasureSpaceDesc {
  enum class Kind { probability, finite, sigma_finite_discrete };
  Kind kind = Kind::sigma_finite_discrete;
  ExtReal total_mass = ExtReal::infinity();

  static MeasureSpaceDesc probability() { return {Kind::probability, 1.0}; }
  static MeasureSpaceDesc finite(double mass);
  static MeasureSpaceDesc sigma_finite() { return {}; }
};

struct Atom {
  double value = 0.0;
  double weight = 0.0;
};

/// Finitely supported function: each atom carries a value and the measure of
/// the set on which the function takes it. Mass not covered by atoms is a
/// zero set.
class SimpleFunction {
 public:
  SimpleFunction() = default;
  SimpleFunction(std::vector<Atom> atoms, MeasureSpaceDesc space = {});

  const std::vector<Atom>& atoms() const { return atoms_; }
  const MeasureSpaceDesc& space() const { return space_; }
  double total_weight() const;
  bool is_zero() const;

  SimpleFunction scaled(double c) const;

  /// Two-column text (value, weight); '#' starts a comment.
  static SimpleFunction load(std::istream& in, MeasureSpaceDesc space = {});

 private:
  std::vector<Atom> atoms_;
  MeasureSpaceDesc space_;
};

}  // namespace orlicz
