#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orlicz/ext_real.hpp"
#include "orlicz/kernel.hpp"

namespace orlicz {

enum class YoungKind {
  power,          // coef * s^p, p >= 1 (identity is power:1)
  cosh_minus_1,   // cosh(s) - 1
  llog,           // s asinh(s) - sqrt(1 + s^2) + 1
  xlog1p,         // s log(s + 1)
  zygmund_llogl,  // s log+ s
  zygmund_exp,    // s on [0, 1], e^{s - 1} beyond
  tabulated,      // piecewise-linear density
  conjugate,      // generalized-inverse complement of another Young function
};

/// Breakpoint of a tabulated density.
struct DensityPoint {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const DensityPoint&, const DensityPoint&) = default;
};

/// Density behaviour past the last breakpoint: held constant, or +inf (in
/// which case Psi is +inf beyond the last breakpoint).
enum class DensityTail { constant, infinite };

struct PowerParams {
  double exponent = 1.0;
  double coef = 1.0;
};

namespace detail {
class YoungImpl;
}

/// A Young function Psi(s) = int_0^s psi(u) du with psi non-decreasing and
/// left-continuous. Immutable value type; copies share the implementation.
class YoungFunction {
 public:
  static YoungFunction power(double p, double coef = 1.0);
  static YoungFunction identity() { return power(1.0); }
  static YoungFunction cosh_minus_1();
  static YoungFunction llog();
  static YoungFunction xlog1p();
  static YoungFunction zygmund_llogl();
  static YoungFunction zygmund_exp();

  /// Piecewise-linear density through `points` (x non-decreasing, y
  /// non-decreasing, both finite and >= 0). A repeated x encodes a jump. The
  /// density is extended as the constant y_0 to the left of the first point.
  static YoungFunction tabulated(std::vector<DensityPoint> points,
                                 DensityTail tail = DensityTail::constant);

  /// Catalog names: "power:p", "identity", "cosh-1", "llog", "xlog1p",
  /// "llogl", "lexp". Throws DomainError on anything else.
  static YoungFunction parse(std::string_view name);

  /// Two-column text (breakpoint, density), '#' comments, strictly
  /// increasing first column.
  static YoungFunction load_tabulated(std::istream& in);

  YoungKind kind() const;
  std::string name() const;

  /// Psi(s); DomainError for negative s.
  ExtReal operator()(double s) const;
  /// psi(s), left-continuous; DomainError for negative s.
  ExtReal density(double s) const;
  double density_at_zero_plus() const;
  ExtReal density_sup() const;
  /// sup{s : Psi(s) < inf}.
  double threshold() const;

  /// Generalized inverse of the density: inf{w >= 0 : psi(w) >= v}.
  ExtReal density_inverse(double v) const;
  /// sup{s >= 0 : Psi(s) <= y}.
  double inverse(double y) const;

  std::optional<PowerParams> power_params() const;
  /// Breakpoints (normalized to start at the origin) for tabulated kinds;
  /// empty otherwise.
  std::span<const DensityPoint> breakpoints() const;
  DensityTail density_tail() const;
  /// Base function of a conjugate kind.
  std::optional<YoungFunction> conjugate_base() const;

  const Kernel& kernel() const;

 private:
  explicit YoungFunction(std::shared_ptr<const detail::YoungImpl> impl)
      : impl_(std::move(impl)) {}
  std::shared_ptr<const detail::YoungImpl> impl_;

  friend YoungFunction complement(const YoungFunction&);
  friend YoungFunction numeric_complement(const YoungFunction&);
};

/// Complementary Young function. Catalog pairs with closed forms map to each
/// other (power p <-> scaled power p/(p-1), cosh-1 <-> llog, lexp <-> llogl);
/// tabulated densities are reflected exactly; anything else falls back to
/// numeric_complement.
YoungFunction complement(const YoungFunction& y);

/// Complement built from the generalized-inverse construction
/// phi(v) = inf{w : psi(w) >= v}, evaluated through the equality case of
/// Young's inequality Phi(t) = t phi(t) - Psi(phi(t)).
YoungFunction numeric_complement(const YoungFunction& y);

/// `n` geometrically spaced points on [lo, hi].
std::vector<double> geometric_grid(double lo, double hi, std::size_t n);

/// Default evaluation grid: 512 geometric points on [1e-6, 1e6].
std::vector<double> default_grid();

struct YoungValidity {
  bool zero_at_origin = false;
  bool nondecreasing = false;
  bool midpoint_convex = false;
  bool nontrivial = false;
  /// Largest relative midpoint-convexity violation seen on the grid.
  double worst_convexity_violation = 0.0;
  bool ok() const { return zero_at_origin && nondecreasing && midpoint_convex && nontrivial; }
};

/// Checks the Young-function invariants on a grid: Psi(0) = 0, monotonicity,
/// midpoint convexity within `rel_tol`, and non-triviality.
YoungValidity validate(const YoungFunction& y, std::span<const double> grid,
                       double rel_tol = 1e-12);

}  // namespace orlicz
