#include "orlicz/young_checks.hpp"

#include <algorithm>
#include <cmath>

#include "orlicz/errors.hpp"

namespace orlicz {
namespace {

void check_grid(std::span<const double> grid) {
  if (grid.empty()) throw DomainError("evaluation grid is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] >= 0.0) || !std::isfinite(grid[i]))
      throw DomainError("grid points must be finite and >= 0");
    if (i > 0 && !(grid[i] > grid[i - 1])) throw DomainError("grid must be increasing");
  }
}

// Smallest index i such that every value from i on is <= bound; n if none.
std::size_t bounded_suffix(const std::vector<double>& values, double bound) {
  std::size_t start = values.size();
  while (start > 0 && values[start - 1] <= bound) --start;
  return start;
}

bool suffix_long_enough(std::size_t start, std::size_t n, double fraction) {
  if (n == 0 || start >= n) return false;
  return static_cast<double>(n - start) >= fraction * static_cast<double>(n);
}

}  // namespace

double log_eval(const YoungFunction& y, double s) {
  const ExtReal v = y(s);
  if (v.is_infinite()) return kInf;
  const double d = v.to_double();
  if (d <= 0.0) return -kInf;
  if (std::isinf(d)) return y.kernel().log_value(s);
  return std::log(d);
}

Delta2Report delta2_check(const YoungFunction& y, std::span<const double> grid,
                          const GrowthCheckOptions& opts) {
  check_grid(grid);
  Delta2Report r;
  std::vector<double> ratios;
  for (double s : grid) {
    const ExtReal v = y(s);
    if (v.is_infinite()) {
      // Psi(s) < inf is part of the condition.
      r.evidence_grid.push_back(s);
      ratios.push_back(kInf);
      continue;
    }
    if (!(v.to_double() > 0.0)) continue;
    r.evidence_grid.push_back(s);
    const ExtReal v2 = y(2.0 * s);
    if (v2.is_infinite()) {
      ratios.push_back(kInf);
    } else if (std::isfinite(v.to_double()) && std::isfinite(v2.to_double())) {
      ratios.push_back(v2.to_double() / v.to_double());
    } else {
      ratios.push_back(std::exp(log_eval(y, 2.0 * s) - log_eval(y, s)));
    }
  }
  const std::size_t start = bounded_suffix(ratios, opts.explosion);
  if (!suffix_long_enough(start, ratios.size(), opts.min_suffix_fraction)) return r;
  r.holds = true;
  r.s0 = r.evidence_grid[start];
  r.c = *std::max_element(ratios.begin() + static_cast<std::ptrdiff_t>(start), ratios.end());
  return r;
}

Nabla2Report nabla2_check(const YoungFunction& y, std::span<const double> grid,
                          std::span<const double> l_candidates,
                          const GrowthCheckOptions& opts) {
  check_grid(grid);
  for (double l : l_candidates)
    if (!(l > 1.0)) throw DomainError("nabla2 candidates must exceed 1");
  constexpr double kSlack = 1e-12;
  Nabla2Report best;
  best.evidence_grid.assign(grid.begin(), grid.end());
  std::size_t best_start = grid.size();
  for (double l : l_candidates) {
    // excess_i = log Phi(x) - log(Phi(l x) / (2 l)); <= 0 means the condition holds.
    std::vector<double> excess;
    excess.reserve(grid.size());
    for (double x : grid) {
      const double lhs = log_eval(y, x);
      const double rhs = log_eval(y, l * x) - std::log(2.0 * l);
      if (lhs == -kInf || rhs == kInf)
        excess.push_back(-kInf);
      else
        excess.push_back(lhs - rhs);
    }
    const std::size_t start = bounded_suffix(excess, kSlack);
    if (!suffix_long_enough(start, excess.size(), opts.min_suffix_fraction)) continue;
    if (start < best_start) {
      best_start = start;
      best.holds = true;
      best.l = l;
      best.x0 = grid[start];
    }
  }
  return best;
}

Nabla2Report nabla2_check(const YoungFunction& y, std::span<const double> grid) {
  const double ls[] = {2.0, 4.0, 8.0, 16.0};
  return nabla2_check(y, grid, ls);
}

std::vector<double> default_scale_grid() {
  std::vector<double> b;
  for (int k = -10; k <= 10; ++k) b.push_back(std::ldexp(1.0, k));
  return b;
}

namespace {

// Smallest candidate b with F(b x) >= G(x) on the whole grid.
double dominating_scale(const YoungFunction& f, const YoungFunction& g,
                        std::span<const double> grid, std::span<const double> bs) {
  constexpr double kSlack = 1e-12;
  for (double b : bs) {
    bool ok = true;
    for (double x : grid) {
      const double lg = log_eval(g, x);
      if (lg == -kInf) continue;
      const double lf = log_eval(f, b * x);
      if (lf == kInf) continue;
      if (lg == kInf || lf < lg - kSlack) {
        ok = false;
        break;
      }
    }
    if (ok) return b;
  }
  return 0.0;
}

}  // namespace

EquivalenceReport equivalence_check(const YoungFunction& y1, const YoungFunction& y2,
                                    std::span<const double> grid,
                                    std::span<const double> b_candidates) {
  check_grid(grid);
  if (b_candidates.empty()) throw DomainError("scale candidates are empty");
  std::vector<double> bs(b_candidates.begin(), b_candidates.end());
  std::sort(bs.begin(), bs.end());
  EquivalenceReport r;
  r.grid.assign(grid.begin(), grid.end());
  r.b_forward = dominating_scale(y1, y2, grid, bs);
  r.b_backward = dominating_scale(y2, y1, grid, bs);
  r.equivalent = r.b_forward > 0.0 && r.b_backward > 0.0;
  return r;
}

EquivalenceReport equivalence_check(const YoungFunction& y1, const YoungFunction& y2,
                                    std::span<const double> grid) {
  const auto bs = default_scale_grid();
  return equivalence_check(y1, y2, grid, bs);
}

}  // namespace orlicz
