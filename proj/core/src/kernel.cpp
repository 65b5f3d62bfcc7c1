#include "orlicz/kernel.hpp"

#include <cmath>

namespace orlicz {

double Kernel::log_value(double x) const {
  const ExtReal v = value(x);
  if (v.is_infinite()) return kInf;
  return std::log(v.to_double());
}

PowerMajorant Kernel::small_majorant(double xmax) const {
  if (!(xmax > 0.0)) return {1.0, 0.0};
  const ExtReal v = value(xmax);
  if (v.is_infinite()) return {1.0, kInf};
  return {1.0, v.to_double() / xmax};
}

}  // namespace orlicz
