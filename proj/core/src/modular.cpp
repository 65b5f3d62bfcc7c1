#include "orlicz/modular.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "orlicz/errors.hpp"
#include "orlicz/quadrature.hpp"

namespace orlicz {
namespace {

using Shape = ProfilePiece::Shape;

bool is_head(const ProfilePiece& p) {
  return p.shape == Shape::log_head || p.shape == Shape::power_head;
}

// exp(t x) - 1 for t > 0.
class ExpMinus1Kernel final : public Kernel {
 public:
  explicit ExpMinus1Kernel(double t) : t_(t) {}
  ExtReal value(double x) const override { return std::expm1(t_ * x); }
  double log_value(double x) const override {
    const double tx = t_ * x;
    if (tx < 1.0) return std::log(std::expm1(tx));
    return tx + std::log1p(-std::exp(-tx));
  }
  double small_index() const override { return 1.0; }
  Growth growth() const override { return Growth::exponential(t_, 1.0); }

 private:
  double t_;
};

// 1 - exp(t x) for t < 0.
class OneMinusExpKernel final : public Kernel {
 public:
  explicit OneMinusExpKernel(double t) : t_(t) {}
  ExtReal value(double x) const override { return -std::expm1(t_ * x); }
  double small_index() const override { return 1.0; }
  PowerMajorant small_majorant(double) const override { return {1.0, -t_}; }
  Growth growth() const override { return Growth::polynomial(0.0, 0.0, 1.0); }

 private:
  double t_;
};

struct Interval {
  double a, b;
  const ProfilePiece* p;
  const ProfilePiece* w;
};

class Engine {
 public:
  Engine(const Kernel& k, const ModularOptions& opts)
      : k_(k),
        opts_(opts),
        growth_(k.growth()),
        vanish_(k.vanishing_limit()),
        threshold_(k.threshold()),
        finite_at_threshold_(k.finite_at_threshold()) {}

  ExtReal run(const DecreasingProfile& p, const DecreasingProfile* weight) {
    const std::vector<ProfilePiece> pp = p.pieces();
    const std::vector<ProfilePiece> wp =
        weight ? weight->pieces()
               : std::vector<ProfilePiece>{{Shape::constant, 0.0, kInf, 1.0, 0.0, 0.0}};

    std::vector<double> cuts;
    for (const auto& x : pp) cuts.push_back(x.start);
    for (const auto& x : wp) cuts.push_back(x.start);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<Interval> intervals;
    std::size_t ip = 0, iw = 0;
    for (std::size_t i = 0; i < cuts.size(); ++i) {
      const double a = cuts[i];
      const double b = i + 1 < cuts.size() ? cuts[i + 1] : kInf;
      while (pp[ip].end <= a) ++ip;
      while (wp[iw].end <= a) ++iw;
      intervals.push_back({a, b, &pp[ip], &wp[iw]});
    }
    abs_share_ = opts_.abs_tol / static_cast<double>(intervals.size());

    ExtReal total = 0.0;
    for (const auto& iv : intervals) {
      total += contribution(iv);
      if (total.is_infinite()) return total;
    }
    return total;
  }

 private:
  const Kernel& k_;
  ModularOptions opts_;
  Growth growth_;
  double vanish_;
  double threshold_;
  bool finite_at_threshold_;
  double abs_share_ = 0.0;

  quad::Options quad_opts(double abs_tol) const {
    return {abs_tol, opts_.rel_tol, opts_.max_intervals};
  }

  // F(x) * w, falling back to the log form when F(x) overflows.
  double weighted_value(double x, double w) const {
    if (w == 0.0) return 0.0;
    if (!std::isfinite(x)) throw InconclusiveError("profile value overflows during quadrature");
    const ExtReal v = k_.value(x);
    if (v.is_infinite()) return kInf;
    const double r = v.to_double() * w;
    if (std::isfinite(r)) return r;
    return std::exp(k_.log_value(x) + std::log(w));
  }

  double integrate_checked(const std::function<double(double)>& f, double a, double b,
                           double abs_tol) const {
    const quad::Result r = quad::integrate(f, a, b, quad_opts(abs_tol));
    if (!r.converged)
      throw InconclusiveError("quadrature did not converge on [" + std::to_string(a) + ", " +
                              std::to_string(b) + "]");
    return r.value;
  }

  ExtReal contribution(const Interval& iv) {
    const ProfilePiece& P = *iv.p;
    const ProfilePiece& W = *iv.w;
    if (P.shape == Shape::zero || W.shape == Shape::zero) return 0.0;
    if (W.shape == Shape::constant && W.coef == 0.0) return 0.0;

    const double psup = iv.a == P.start ? P.sup() : P.value(iv.a);
    if (psup <= vanish_) return 0.0;
    if (psup > threshold_) return ExtReal::infinity();
    if (psup == threshold_ && !finite_at_threshold_) {
      if (P.shape == Shape::constant) return ExtReal::infinity();
      throw InconclusiveError("profile touches a non-finite threshold");
    }

    if (P.shape == Shape::constant) {
      const ExtReal wi = W.integral(iv.a, iv.b);
      if (wi.is_infinite()) return ExtReal::infinity();
      if (wi.value() == 0.0) return 0.0;
      return wi.value() * k_.value(P.coef);
    }
    if (iv.a == 0.0 && is_head(P)) return head(iv);
    if (std::isinf(iv.b)) return tail(iv);
    if (W.integral(iv.a, iv.b).is_infinite()) return ExtReal::infinity();
    return finite(iv.a, iv.b, P, W);
  }

  double finite(double a, double b, const ProfilePiece& P, const ProfilePiece& W) const {
    auto f = [&](double t) { return weighted_value(P.value(t), W.value(t)); };
    return integrate_checked(f, a, b, abs_share_);
  }

  // Head of p at the origin, integrated in u = log(1/t).
  ExtReal head(const Interval& iv) const {
    const ProfilePiece& P = *iv.p;
    const ProfilePiece& W = *iv.w;
    const bool log_head = P.shape == Shape::log_head;
    const double kappa = P.coef;
    const double gamma = P.exponent;

    // Majorant C u^m e^{-beta u} of the u-space integrand for u >= 1.
    double c = 0.0, m = 0.0, beta = 1.0;
    switch (growth_.kind) {
      case Growth::Kind::unknown:
        throw InconclusiveError("no growth comparison available for this Young function");
      case Growth::Kind::threshold:
        return ExtReal::infinity();
      case Growth::Kind::polynomial: {
        const double r = growth_.index, lp = growth_.log_power;
        if (log_head) {
          c = growth_.coef * std::pow(kappa, r) * std::pow(1.0 + kappa, lp);
          m = r + lp;
        } else {
          c = growth_.coef * std::pow(kappa, r) * std::pow(1.0 + std::log1p(kappa) + gamma, lp);
          m = lp;
          beta -= r * gamma;
        }
        break;
      }
      case Growth::Kind::exponential:
        if (!log_head) return ExtReal::infinity();
        c = growth_.coef;
        beta -= growth_.rate * kappa;
        break;
    }
    switch (W.shape) {
      case Shape::log_head:
        c *= W.coef;
        m += 1.0;
        break;
      case Shape::power_head:
        c *= W.coef;
        beta -= W.exponent;
        break;
      default:
        c *= W.sup();
        break;
    }
    if (beta <= 0.0) return ExtReal::infinity();
    if (!std::isfinite(c)) throw InconclusiveError("head majorant overflows");

    const double ub = std::log(1.0 / iv.b);
    auto integrand = [&](double u) {
      const double t = std::exp(-u);
      const double wt = W.value(t) * t;
      return weighted_value(P.value(t), wt);
    };
    auto bound = [&](double l) { return 2.0 / beta * c * std::pow(l, m) * std::exp(-beta * l); };

    double l = std::max({1.0, ub, 2.0 * m / beta});
    double estimate = 0.0;
    for (int round = 0; round < 8; ++round) {
      const double target = 0.25 * std::max(abs_share_, opts_.rel_tol * estimate);
      while (bound(l) > target) {
        l = 1.5 * l + 1.0;
        if (l > 1e7) throw InconclusiveError("head truncation point out of range");
      }
      const double value = integrate_checked(integrand, ub, l, 0.75 * abs_share_);
      if (bound(l) <= 0.25 * std::max(abs_share_, opts_.rel_tol * value)) return value;
      estimate = value;
    }
    throw InconclusiveError("head truncation did not settle");
  }

  // Unbounded interval [a, inf) on which p is an analytic tail.
  ExtReal tail(const Interval& iv) const {
    const ProfilePiece& P = *iv.p;
    const ProfilePiece& W = *iv.w;
    const double a = iv.a;

    if (vanish_ > 0.0) {
      double cut;
      if (P.shape == Shape::exp_tail)
        cut = P.start + std::log(P.coef / vanish_) / P.exponent;
      else
        cut = P.start + std::pow(P.coef / vanish_, 1.0 / P.exponent) - P.offset;
      if (!(cut > a)) return 0.0;
      return finite(a, cut, P, W);
    }

    const double r0 = k_.small_index();
    if (std::isinf(r0)) throw InconclusiveError("kernel vanishes near 0 without a vanishing limit");
    if (P.shape == Shape::power_tail) {
      double decay = r0 * P.exponent;
      if (W.shape == Shape::power_tail) decay += W.exponent;
      if (W.shape != Shape::exp_tail && decay <= 1.0) return ExtReal::infinity();
    }

    const double pa = P.value(a);
    const PowerMajorant maj = k_.small_majorant(pa);
    const double ri = maj.index;
    const double front = maj.coef * std::pow(P.coef, ri);
    if (!std::isfinite(front)) throw InconclusiveError("tail majorant overflows");
    const double wa = W.value(a);

    // Certified bound on int_S^inf F(p) w.
    auto bound = [&](double s) -> double {
      if (P.shape == Shape::exp_tail) {
        const double rate = ri * P.exponent;
        return front * wa * std::exp(-rate * (s - P.start)) / rate;
      }
      const double us = P.offset + (s - P.start);
      const double g = ri * P.exponent;
      switch (W.shape) {
        case Shape::constant:
          if (g <= 1.0) return kInf;
          return front * W.coef * std::pow(us, 1.0 - g) / (g - 1.0);
        case Shape::exp_tail:
          return front * std::pow(us, -g) * W.integral(s, kInf).to_double();
        case Shape::power_tail: {
          const double e = g + W.exponent;
          if (e <= 1.0) return kInf;
          const double ws = W.offset + (s - W.start);
          return front * W.coef * std::pow(std::min(us, ws), 1.0 - e) / (e - 1.0);
        }
        default:
          return kInf;
      }
    };

    auto f = [&](double t) { return weighted_value(P.value(t), W.value(t)); };
    double sum = 0.0;
    double lo = a, width = 1.0;
    double chunk_tol = 0.375 * abs_share_;
    for (int k = 0; k < 1000; ++k) {
      const double hi = lo + width;
      sum += integrate_checked(f, lo, hi, chunk_tol);
      const double rem = bound(hi);
      if (rem <= 0.25 * std::max(abs_share_, opts_.rel_tol * sum)) return sum;
      if (!std::isfinite(hi) || hi > 1e300) break;
      lo = hi;
      width *= 2.0;
      chunk_tol = std::max(0.5 * chunk_tol, 1e-300);
    }
    throw InconclusiveError("tail truncation bound not reached");
  }
};

}  // namespace

ExtReal kernel_integral(const Kernel& f, const DecreasingProfile& p,
                        const DecreasingProfile* weight, const ModularOptions& opts) {
  return Engine(f, opts).run(p, weight);
}

ExtReal modular(const YoungFunction& y, const DecreasingProfile& p, const ModularOptions& opts) {
  return kernel_integral(y.kernel(), p, nullptr, opts);
}

ExtReal modular(const YoungFunction& y, const DecreasingProfile& p,
                const DecreasingProfile& weight, const ModularOptions& opts) {
  return kernel_integral(y.kernel(), p, &weight, opts);
}

ExtReal modular(const YoungFunction& y, const SimpleFunction& f) {
  ExtReal total = 0.0;
  for (const auto& a : f.atoms()) total += a.weight * y(std::abs(a.value));
  return total;
}

namespace {

double weight_mass(const DecreasingProfile& w) {
  const ExtReal mass = hl_partial(w, kInf);
  if (mass.is_infinite()) throw DomainError("weight profile is not integrable");
  return mass.value();
}

}  // namespace

ExtReal moment_transform(const DecreasingProfile& p, const DecreasingProfile& weight, double t,
                         const ModularOptions& opts) {
  if (!std::isfinite(t)) throw DomainError("moment parameter must be finite");
  const double mass = weight_mass(weight);
  if (t == 0.0) return mass;
  if (t > 0.0) return mass + kernel_integral(ExpMinus1Kernel(t), p, &weight, opts);
  const ExtReal deficit = kernel_integral(OneMinusExpKernel(t), p, &weight, opts);
  return std::max(0.0, mass - deficit.value());
}

MomentDomain moment_domain(const DecreasingProfile& p, const DecreasingProfile& weight) {
  weight_mass(weight);
  MomentDomain d;
  switch (p.head().kind) {
    case ProfileHead::Kind::none:
      break;
    case ProfileHead::Kind::log: {
      // exp(t kappa log(1/s)) = s^{-t kappa} against the weight near 0.
      const double wexp =
          weight.head().kind == ProfileHead::Kind::inverse_power ? weight.head().exponent : 0.0;
      d.upper = (1.0 - wexp) / p.head().scale;
      break;
    }
    case ProfileHead::Kind::inverse_power:
      d.upper = 0.0;
      d.upper_closed = true;
      break;
  }
  return d;
}

}  // namespace orlicz
