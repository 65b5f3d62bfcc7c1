#pragma once

#include <string>

#include "orlicz/kernel.hpp"
#include "orlicz/young.hpp"

namespace orlicz::detail {

class YoungImpl : public Kernel {
 public:
  virtual YoungKind kind() const = 0;
  virtual std::string name() const = 0;
  virtual ExtReal density(double s) const = 0;
  virtual double density_at_zero_plus() const { return 0.0; }
  virtual ExtReal density_sup() const { return ExtReal::infinity(); }
};

ExtReal generalized_inverse(const YoungImpl& y, double v);

/// Shortest round-trip decimal form.
std::string format_number(double v);

}  // namespace orlicz::detail
