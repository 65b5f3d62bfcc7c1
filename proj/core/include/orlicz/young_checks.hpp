#pragma once

#include <span>
#include <vector>

#include "orlicz/young.hpp"

namespace orlicz {

/// Grid verdict for Psi(2s) <= c Psi(s), s >= s0.
struct Delta2Report {
  bool holds = false;
  double s0 = 0.0;
  double c = 0.0;
  /// Grid points with Psi(s) > 0 at which the ratio was evaluated.
  std::vector<double> evidence_grid;
};

/// Grid verdict for Phi(x) <= Phi(l x) / (2 l), x >= x0.
struct Nabla2Report {
  bool holds = false;
  double x0 = 0.0;
  double l = 0.0;
  std::vector<double> evidence_grid;
};

/// Witness scales with F1(b_forward x) >= F2(x) and F2(b_backward x) >= F1(x)
/// on the grid.
struct EquivalenceReport {
  bool equivalent = false;
  double b_forward = 0.0;
  double b_backward = 0.0;
  std::vector<double> grid;
};

struct GrowthCheckOptions {
  /// Ratios above this count as unbounded.
  double explosion = 1e6;
  /// The bounded suffix must contain at least this fraction of the evidence.
  double min_suffix_fraction = 0.25;
};

Delta2Report delta2_check(const YoungFunction& y, std::span<const double> grid,
                          const GrowthCheckOptions& opts = {});

Nabla2Report nabla2_check(const YoungFunction& y, std::span<const double> grid,
                          std::span<const double> l_candidates,
                          const GrowthCheckOptions& opts = {});
Nabla2Report nabla2_check(const YoungFunction& y, std::span<const double> grid);

/// Candidate scales 2^k, k = -10..10.
std::vector<double> default_scale_grid();

EquivalenceReport equivalence_check(const YoungFunction& y1, const YoungFunction& y2,
                                    std::span<const double> grid,
                                    std::span<const double> b_candidates);
EquivalenceReport equivalence_check(const YoungFunction& y1, const YoungFunction& y2,
                                    std::span<const double> grid);

/// log Psi(s), -inf where Psi vanishes and +inf where it is infinite; falls
/// back to the kernel's log form when Psi(s) overflows a double.
double log_eval(const YoungFunction& y, double s);

}  // namespace orlicz
