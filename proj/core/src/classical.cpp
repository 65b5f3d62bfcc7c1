#include "orlicz/classical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "orlicz/errors.hpp"

namespace orlicz {
namespace {

constexpr double kMinLogLambda = -690.0;  // about 1e-300
constexpr double kMaxLogLambda = 690.0;

// log modular(p / e^x); -inf for a vanishing modular, +inf for a divergent one.
double log_modular_at(const YoungFunction& y, const DecreasingProfile& p,
                      const DecreasingProfile* weight, double x, const ModularOptions& opts) {
  const ExtReal g = kernel_integral(y.kernel(), p.scaled(std::exp(-x)), weight, opts);
  if (g.is_infinite()) return kInf;
  const double v = g.to_double();
  if (v <= 0.0) return -kInf;
  return std::log(v);
}

double initial_scale(const DecreasingProfile& p) {
  if (p.bounded()) return p.sup();
  const ExtReal head = hl_partial(p, 1.0);
  if (head.is_finite() && head.value() > 0.0) return head.value();
  return 1.0;
}

}  // namespace

NormReport luxemburg_norm(const YoungFunction& y, const DecreasingProfile& p,
                          const DecreasingProfile* weight, const NormOptions& opts) {
  NormReport r;
  if (p.is_zero()) {
    r.converged = true;
    return r;
  }
  auto h = [&](double x) {
    ++r.iterations;
    return log_modular_at(y, p, weight, x, opts.modular);
  };

  // Bracket: h(lo) > 0 >= h(hi).
  double x0 = std::log(initial_scale(p));
  double h0 = h(x0);
  double xlo, hlo, xhi, hhi;
  if (h0 <= 0.0) {
    xhi = x0, hhi = h0;
    double d = 1.0;
    for (;;) {
      const double x = xhi - d;
      if (x < kMinLogLambda) {
        r.value = std::exp(xhi);
        r.witness = r.value.value();
        r.bracket_hi = r.value.value();
        return r;
      }
      const double hx = h(x);
      if (hx > 0.0) {
        xlo = x, hlo = hx;
        break;
      }
      xhi = x, hhi = hx;
      d *= 2.0;
    }
  } else {
    xlo = x0, hlo = h0;
    double d = 1.0;
    for (;;) {
      const double x = xlo + d;
      if (x > kMaxLogLambda) {
        r.value = ExtReal::infinity();
        r.converged = std::isinf(hlo);
        r.bracket_lo = std::exp(xlo);
        r.bracket_hi = kInf;
        return r;
      }
      const double hx = h(x);
      if (hx <= 0.0) {
        xhi = x, hhi = hx;
        break;
      }
      xlo = x, hlo = hx;
      d *= 2.0;
    }
  }

  // Illinois false position in log(lambda), with bisection whenever the
  // secant is unusable or stalls.
  constexpr double eps = std::numeric_limits<double>::epsilon();
  int last_side = 0, same_side = 0, refine = 0;
  while (refine < opts.max_iterations) {
    if (xhi - xlo <= 4.0 * eps * std::max(1.0, std::abs(xhi))) break;
    const double mid = 0.5 * (xlo + xhi);
    double x = mid;
    if (std::isfinite(hlo) && std::isfinite(hhi) && hlo != hhi && same_side < 3)
      x = xhi - hhi * (xhi - xlo) / (hhi - hlo);
    if (!(x > xlo && x < xhi)) x = mid;
    if (x <= xlo || x >= xhi) break;
    const double hx = h(x);
    ++refine;
    if (hx == 0.0) {
      xlo = xhi = x;
      hlo = hhi = 0.0;
      break;
    }
    const int side = hx > 0.0 ? -1 : 1;
    if (side == last_side) {
      ++same_side;
      if (side == 1)
        hlo *= 0.5;
      else
        hhi *= 0.5;
    } else {
      same_side = 0;
    }
    if (side == -1)
      xlo = x, hlo = hx;
    else
      xhi = x, hhi = hx;
    last_side = side;
  }
  const double lam_lo = std::exp(xlo), lam_hi = std::exp(xhi);
  r.value = lam_hi;
  r.witness = lam_hi;
  r.bracket_lo = lam_lo;
  r.bracket_hi = lam_hi;
  r.converged = lam_hi - lam_lo <= opts.rel_tol * lam_hi;
  return r;
}

NormReport luxemburg_norm(const YoungFunction& y, const SimpleFunction& f,
                          const NormOptions& opts) {
  return luxemburg_norm(y, rearrange(f), nullptr, opts);
}

NormReport orlicz_norm(const YoungFunction& y, const DecreasingProfile& p,
                       const DecreasingProfile* weight, const NormOptions& opts) {
  NormReport r;
  if (p.is_zero()) {
    r.converged = true;
    return r;
  }
  const NormReport lux = luxemburg_norm(y, p, weight, opts);
  r.iterations = lux.iterations;
  if (lux.value.is_infinite()) {
    r.value = ExtReal::infinity();
    r.converged = lux.converged;
    return r;
  }
  const double k_lux = 1.0 / lux.value.value();

  // Amemiya function on x = log k.
  auto amemiya = [&](double x) {
    ++r.iterations;
    const double k = std::exp(x);
    const ExtReal g = kernel_integral(y.kernel(), p.scaled(k), weight, opts.modular);
    if (g.is_infinite()) return kInf;
    return (1.0 + g.to_double()) / k;
  };

  // The minimizer lies above k_lux / 2; scan quarter octaves from there.
  const double x_start = std::log(k_lux) - std::log(2.0);
  const double step = 0.25 * std::log(2.0);
  int best = 0;
  double best_val = kInf;
  for (int j = 0; j <= 64; ++j) {
    const double v = amemiya(x_start + step * j);
    if (v < best_val) {
      best_val = v;
      best = j;
    }
    if (std::isinf(v) && j > best + 1) break;
    if (j > best + 8) break;
  }
  if (std::isinf(best_val)) {
    r.value = ExtReal::infinity();
    return r;
  }

  // Golden-section refinement around the best grid point.
  double a = x_start + step * (best - 1);
  double b = x_start + step * (best + 1);
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - invphi * (b - a), d = a + invphi * (b - a);
  double fc = amemiya(c), fd = amemiya(d);
  int it = 0;
  while (b - a > 1e-13 * std::max(1.0, std::abs(a)) && it < opts.max_iterations) {
    if (fc <= fd) {
      b = d, d = c, fd = fc;
      c = b - invphi * (b - a);
      fc = amemiya(c);
    } else {
      a = c, c = d, fc = fd;
      d = a + invphi * (b - a);
      fd = amemiya(d);
    }
    ++it;
  }
  double x_best = x_start + step * best;
  for (auto [x, v] : {std::pair{c, fc}, std::pair{d, fd}}) {
    if (v < best_val) {
      best_val = v;
      x_best = x;
    }
  }
  r.value = best_val;
  r.witness = std::exp(x_best);
  r.bracket_lo = std::exp(a);
  r.bracket_hi = std::exp(b);
  r.converged = it < opts.max_iterations;
  return r;
}

NormReport orlicz_norm(const YoungFunction& y, const SimpleFunction& f, const NormOptions& opts) {
  return orlicz_norm(y, rearrange(f), nullptr, opts);
}

MembershipReport membership(const YoungFunction& y, const DecreasingProfile& p,
                            const DecreasingProfile* weight, const ModularOptions& opts) {
  for (int k = 0; k <= 60; ++k) {
    const double lam = std::ldexp(1.0, -k);
    if (kernel_integral(y.kernel(), p.scaled(lam), weight, opts).is_finite())
      return {true, lam};
  }
  return {};
}

MembershipReport membership(const YoungFunction& y, const SimpleFunction& f) {
  for (int k = 0; k <= 60; ++k) {
    const double lam = std::ldexp(1.0, -k);
    if (modular(y, f.scaled(lam)).is_finite()) return {true, lam};
  }
  return {};
}

namespace {

void check_paired(const SimpleFunction& f, const SimpleFunction& g) {
  if (f.atoms().size() != g.atoms().size())
    throw DomainError("paired simple functions need the same atoms");
  for (std::size_t i = 0; i < f.atoms().size(); ++i)
    if (f.atoms()[i].weight != g.atoms()[i].weight)
      throw DomainError("paired simple functions need identical atom weights");
}

}  // namespace

HolderReport holder_check(const SimpleFunction& f, const SimpleFunction& g,
                          const YoungFunction& y) {
  check_paired(f, g);
  HolderReport r;
  for (std::size_t i = 0; i < f.atoms().size(); ++i)
    r.lhs += std::abs(f.atoms()[i].value * g.atoms()[i].value) * f.atoms()[i].weight;
  const ExtReal nf = luxemburg_norm(y, f).value;
  const ExtReal ng = orlicz_norm(complement(y), g).value;
  if (nf == ExtReal(0.0) || ng == ExtReal(0.0))
    r.rhs = 0.0;
  else
    r.rhs = nf.is_infinite() || ng.is_infinite() ? ExtReal::infinity()
                                                 : ExtReal(nf.value() * ng.value());
  r.holds = ExtReal(r.lhs) <= r.rhs * (1.0 + 1e-9);
  return r;
}

bool EmbeddingTable::finiteness_monotone() const {
  const ExtReal chain[] = {sup_norm, exp_norm, lp_norm, llogl_norm, l1_norm};
  for (int i = 0; i + 1 < 5; ++i)
    if (chain[i].is_finite() && chain[i + 1].is_infinite()) return false;
  return true;
}

EmbeddingTable embedding_chain_check(const DecreasingProfile& profile, double p) {
  if (!(p > 1.0) || !std::isfinite(p)) throw DomainError("embedding exponent must lie in (1, inf)");
  if (profile.has_tail() || profile.junction() > 1.0 * (1.0 + 1e-12))
    throw DomainError("embedding chain needs a profile supported in (0, 1]");
  EmbeddingTable t;
  t.p = p;
  t.sup_norm = profile.bounded() ? ExtReal(profile.sup()) : ExtReal::infinity();
  t.exp_norm = luxemburg_norm(YoungFunction::zygmund_exp(), profile).value;
  t.lp_norm = luxemburg_norm(YoungFunction::power(p), profile).value;
  t.llogl_norm = luxemburg_norm(YoungFunction::xlog1p(), profile).value;
  t.l1_norm = profile.is_zero() ? ExtReal(0.0) : hl_partial(profile, kInf);
  return t;
}

EmbeddingTable embedding_chain_check(const SimpleFunction& f, double p) {
  if (f.space().kind != MeasureSpaceDesc::Kind::probability)
    throw DomainError("embedding chain needs a probability space");
  return embedding_chain_check(rearrange(f), p);
}

double entropy_plus(const SimpleFunction& f) {
  double h = 0.0;
  for (const auto& a : f.atoms()) {
    if (a.value < 0.0) throw DomainError("entropy needs a nonnegative function");
    if (a.value > 0.0) h += a.weight * a.value * std::log(a.value);
  }
  return h;
}

double entropy(const SimpleFunction& f) { return -entropy_plus(f); }

EntropyBounds entropy_bounds(const SimpleFunction& f) {
  EntropyBounds b;
  b.value = entropy_plus(f);
  for (const auto& a : f.atoms()) {
    b.lower -= 2.0 / std::numbers::e * a.weight * std::sqrt(a.value);
    b.upper += a.weight * a.value * std::log1p(a.value);
  }
  return b;
}

WeightedDensityState::WeightedDensityState(SimpleFunction f) : f_(std::move(f)) {
  double mass = 0.0;
  for (const auto& a : f_.atoms()) {
    if (a.value < 0.0) throw DomainError("density state must be nonnegative");
    mass += a.value * a.weight;
  }
  if (std::abs(mass - 1.0) > 1e-12) throw DomainError("density state must have unit mass");
}

RegularityReport classical_regular_check(const DecreasingProfile& u,
                                         const DecreasingProfile& weight,
                                         const ModularOptions& opts) {
  const MomentDomain d = moment_domain(u, weight);
  RegularityReport r;
  r.domain = {d.lower, d.upper, false, d.upper_closed};
  r.symmetric_domain = {-d.upper, d.upper, d.upper_closed, d.upper_closed};
  r.regular = d.zero_interior();
  r.cosh_member = membership(YoungFunction::cosh_minus_1(), u, &weight, opts).member;
  r.agrees = r.regular == r.cosh_member;
  return r;
}

RegularityReport classical_regular_check(const SimpleFunction& u,
                                         const WeightedDensityState& state) {
  check_paired(u, state.density());
  // A simple function is bounded, so every exponential moment is finite.
  RegularityReport r;
  r.regular = true;
  r.cosh_member = membership(YoungFunction::cosh_minus_1(), u).member;
  r.agrees = r.regular == r.cosh_member;
  return r;
}

}  // namespace orlicz
