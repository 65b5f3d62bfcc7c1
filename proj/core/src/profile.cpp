#include "orlicz/profile.hpp"

#include <algorithm>
#include <cmath>

#include "orlicz/errors.hpp"

namespace orlicz {

double ProfilePiece::value(double t) const {
  switch (shape) {
    case Shape::constant: return coef;
    case Shape::log_head: return t <= 0.0 ? kInf : coef * std::log(1.0 / t);
    case Shape::power_head: return t <= 0.0 ? kInf : coef * std::pow(t, -exponent);
    case Shape::exp_tail: return coef * std::exp(-exponent * (t - start));
    case Shape::power_tail: return coef * std::pow(offset + (t - start), -exponent);
    case Shape::zero: return 0.0;
  }
  return 0.0;
}

double ProfilePiece::sup() const {
  switch (shape) {
    case Shape::log_head:
    case Shape::power_head: return kInf;
    default: return value(start);
  }
}

namespace {

double log_head_primitive(double kappa, double x) {
  if (x <= 0.0) return 0.0;
  return kappa * x * (1.0 - std::log(x));
}

}  // namespace

ExtReal ProfilePiece::integral(double a, double b) const {
  if (!(b > a)) return 0.0;
  switch (shape) {
    case Shape::zero: return 0.0;
    case Shape::constant:
      if (coef == 0.0) return 0.0;
      if (std::isinf(b)) return ExtReal::infinity();
      return coef * (b - a);
    case Shape::log_head:
      return log_head_primitive(coef, b) - log_head_primitive(coef, a);
    case Shape::power_head: {
      const double g = exponent;
      if (g == 1.0) {
        if (a <= 0.0) return ExtReal::infinity();
        return coef * std::log(b / a);
      }
      if (g > 1.0) {
        if (a <= 0.0) return ExtReal::infinity();
        return coef * (std::pow(a, 1.0 - g) - std::pow(b, 1.0 - g)) / (g - 1.0);
      }
      return coef * (std::pow(b, 1.0 - g) - std::pow(a, 1.0 - g)) / (1.0 - g);
    }
    case Shape::exp_tail: {
      const double beta = exponent;
      const double head = coef * std::exp(-beta * (a - start)) / beta;
      if (std::isinf(b)) return head;
      return head * -std::expm1(-beta * (b - a));
    }
    case Shape::power_tail: {
      const double g = exponent;
      const double ua = offset + (a - start);
      if (std::isinf(b)) {
        if (g <= 1.0) return ExtReal::infinity();
        return coef * std::pow(ua, 1.0 - g) / (g - 1.0);
      }
      const double ub = offset + (b - start);
      if (g == 1.0) return coef * std::log1p((b - a) / ua);
      return coef * (std::pow(ub, 1.0 - g) - std::pow(ua, 1.0 - g)) / (1.0 - g);
    }
  }
  return 0.0;
}

namespace {

double head_value_at_end(const ProfileHead& h) {
  switch (h.kind) {
    case ProfileHead::Kind::log: return h.scale * std::log(1.0 / h.end);
    case ProfileHead::Kind::inverse_power: return h.scale * std::pow(h.end, -h.exponent);
    case ProfileHead::Kind::none: return kInf;
  }
  return kInf;
}

double tail_start_value(const ProfileTail& t) {
  switch (t.kind) {
    case ProfileTail::Kind::exponential: return t.amplitude;
    case ProfileTail::Kind::power: return t.amplitude * std::pow(t.offset, -t.exponent);
    case ProfileTail::Kind::zero: return 0.0;
  }
  return 0.0;
}

bool exceeds(double later, double earlier) {
  return later > earlier * (1.0 + 1e-12);
}

bool positive_finite(double v) { return v > 0.0 && std::isfinite(v); }

}  // namespace

DecreasingProfile::DecreasingProfile(std::vector<Step> steps, ProfileTail tail, ProfileHead head)
    : tail_(tail), head_(head) {
  switch (head_.kind) {
    case ProfileHead::Kind::none: head_ = ProfileHead{}; break;
    case ProfileHead::Kind::log:
      if (!positive_finite(head_.scale) || !(head_.end > 0.0) || !(head_.end <= 1.0))
        throw DomainError("log head needs scale > 0 and 0 < end <= 1");
      head_.exponent = 1.0;
      break;
    case ProfileHead::Kind::inverse_power:
      if (!positive_finite(head_.scale) || !positive_finite(head_.exponent) ||
          !positive_finite(head_.end))
        throw DomainError("inverse-power head needs scale, exponent, end > 0");
      break;
  }
  switch (tail_.kind) {
    case ProfileTail::Kind::zero: tail_ = ProfileTail{}; break;
    case ProfileTail::Kind::exponential:
      if (!positive_finite(tail_.amplitude) || !positive_finite(tail_.rate))
        throw DomainError("exponential tail needs amplitude, rate > 0");
      tail_.exponent = 0.0;
      tail_.offset = 1.0;
      break;
    case ProfileTail::Kind::power:
      if (!positive_finite(tail_.amplitude) || !positive_finite(tail_.exponent) ||
          !positive_finite(tail_.offset))
        throw DomainError("power tail needs amplitude, exponent, offset > 0");
      tail_.rate = 0.0;
      break;
  }

  for (const auto& s : steps) {
    if (!(s.level >= 0.0) || !std::isfinite(s.level))
      throw DomainError("step levels must be finite and >= 0");
    if (!positive_finite(s.length)) throw DomainError("step lengths must be finite and > 0");
    if (!steps_.empty() && s.level == steps_.back().level) {
      steps_.back().length += s.length;
      continue;
    }
    steps_.push_back(s);
  }
  double prev = head_value_at_end(head_);
  for (const auto& s : steps_) {
    if (exceeds(s.level, prev)) throw DomainError("profile levels must be non-increasing");
    prev = s.level;
  }
  if (exceeds(tail_start_value(tail_), prev))
    throw DomainError("tail starts above the last step level");
  if (tail_.kind == ProfileTail::Kind::zero)
    while (!steps_.empty() && steps_.back().level == 0.0) steps_.pop_back();
}

DecreasingProfile DecreasingProfile::log_singularity(double scale, double end) {
  return DecreasingProfile({}, {}, {ProfileHead::Kind::log, scale, 1.0, end});
}

DecreasingProfile DecreasingProfile::inverse_power(double scale, double exponent, double end) {
  return DecreasingProfile({}, {}, {ProfileHead::Kind::inverse_power, scale, exponent, end});
}

DecreasingProfile DecreasingProfile::exponential(double amplitude, double rate) {
  return DecreasingProfile({}, ProfileTail::exponential(amplitude, rate));
}

DecreasingProfile DecreasingProfile::power(double amplitude, double exponent, double offset) {
  return DecreasingProfile({}, ProfileTail::power(amplitude, exponent, offset));
}

double DecreasingProfile::junction() const {
  double j = head_end();
  for (const auto& s : steps_) j += s.length;
  return j;
}

double DecreasingProfile::operator()(double t) const {
  if (t <= 0.0) return sup();
  for (const auto& piece : pieces())
    if (t < piece.end) return piece.value(t);
  return 0.0;
}

double DecreasingProfile::sup() const {
  if (head_.kind != ProfileHead::Kind::none) return kInf;
  if (!steps_.empty()) return steps_.front().level;
  return tail_start_value(tail_);
}

bool DecreasingProfile::is_zero() const {
  return head_.kind == ProfileHead::Kind::none && steps_.empty() &&
         tail_.kind == ProfileTail::Kind::zero;
}

DecreasingProfile DecreasingProfile::scaled(double c) const {
  if (!(c >= 0.0) || !std::isfinite(c)) throw DomainError("profile scale must be finite and >= 0");
  if (c == 0.0) return DecreasingProfile();
  DecreasingProfile out = *this;
  out.head_.scale *= c;
  for (auto& s : out.steps_) s.level *= c;
  out.tail_.amplitude *= c;
  return out;
}

std::vector<ProfilePiece> DecreasingProfile::pieces() const {
  using Shape = ProfilePiece::Shape;
  std::vector<ProfilePiece> out;
  double t = 0.0;
  if (head_.kind == ProfileHead::Kind::log)
    out.push_back({Shape::log_head, 0.0, head_.end, head_.scale, 1.0, 0.0});
  else if (head_.kind == ProfileHead::Kind::inverse_power)
    out.push_back({Shape::power_head, 0.0, head_.end, head_.scale, head_.exponent, 0.0});
  t = head_end();
  for (const auto& s : steps_) {
    out.push_back({Shape::constant, t, t + s.length, s.level, 0.0, 0.0});
    t += s.length;
  }
  switch (tail_.kind) {
    case ProfileTail::Kind::exponential:
      out.push_back({Shape::exp_tail, t, kInf, tail_.amplitude, tail_.rate, 0.0});
      break;
    case ProfileTail::Kind::power:
      out.push_back({Shape::power_tail, t, kInf, tail_.amplitude, tail_.exponent, tail_.offset});
      break;
    case ProfileTail::Kind::zero:
      out.push_back({Shape::zero, t, kInf, 0.0, 0.0, 0.0});
      break;
  }
  return out;
}

std::vector<double> DecreasingProfile::breakpoints() const {
  std::vector<double> b;
  for (const auto& piece : pieces()) b.push_back(piece.start);
  return b;
}

bool operator==(const DecreasingProfile& a, const DecreasingProfile& b) {
  auto head_eq = [](const ProfileHead& x, const ProfileHead& y) {
    return x.kind == y.kind && x.scale == y.scale && x.exponent == y.exponent && x.end == y.end;
  };
  auto tail_eq = [](const ProfileTail& x, const ProfileTail& y) {
    return x.kind == y.kind && x.amplitude == y.amplitude && x.rate == y.rate &&
           x.exponent == y.exponent && x.offset == y.offset;
  };
  return a.steps_ == b.steps_ && head_eq(a.head_, b.head_) && tail_eq(a.tail_, b.tail_);
}

DecreasingProfile rearrange(const SimpleFunction& f) {
  std::vector<Step> steps;
  for (const auto& a : f.atoms())
    if (a.value != 0.0) steps.push_back({std::abs(a.value), a.weight});
  // Ordering ties by length makes merged lengths independent of atom order.
  std::sort(steps.begin(), steps.end(), [](const Step& x, const Step& y) {
    if (x.level != y.level) return x.level > y.level;
    return x.length < y.length;
  });
  return DecreasingProfile(std::move(steps));
}

ExtReal hl_partial(const DecreasingProfile& p, double alpha) {
  if (!(alpha > 0.0)) throw DomainError("hl_partial needs alpha > 0");
  ExtReal total = 0.0;
  for (const auto& piece : p.pieces()) {
    if (piece.start >= alpha) break;
    total += piece.integral(piece.start, std::min(piece.end, alpha));
  }
  return total;
}

}  // namespace orlicz
