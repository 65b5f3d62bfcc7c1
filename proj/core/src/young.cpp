#include "orlicz/young.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <sstream>

#include "orlicz/errors.hpp"
#include "young_impl.hpp"

namespace orlicz {
namespace detail {

ExtReal generalized_inverse(const YoungImpl& y, double v) {
  if (!(v > 0.0)) return 0.0;
  if (v <= y.density_at_zero_plus()) return 0.0;
  const ExtReal sup = y.density_sup();
  if (sup.is_finite() && v > sup.value()) return ExtReal::infinity();

  double hi = 1.0;
  while (y.density(hi) < ExtReal(v)) {
    hi *= 2.0;
    if (hi > 1e300) return ExtReal::infinity();
  }
  double lo = 0.5 * hi;
  while (y.density(lo) >= ExtReal(v)) {
    hi = lo;
    lo *= 0.5;
    if (lo < std::numeric_limits<double>::min()) return hi;
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();
  while (hi - lo > 2.0 * eps * hi) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    if (y.density(mid) >= ExtReal(v))
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

std::string format_number(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

class PowerImpl final : public YoungImpl {
 public:
  PowerImpl(double p, double c) : p_(p), c_(c) {}
  YoungKind kind() const override { return YoungKind::power; }
  std::string name() const override {
    std::string base = p_ == 1.0 ? "identity" : "power:" + format_number(p_);
    if (c_ == 1.0) return base;
    return format_number(c_) + "*" + base;
  }
  ExtReal value(double s) const override {
    if (p_ == 1.0) return c_ * s;
    if (p_ == 2.0) return c_ * s * s;
    return c_ * std::pow(s, p_);
  }
  double log_value(double s) const override { return std::log(c_) + p_ * std::log(s); }
  ExtReal density(double s) const override {
    if (s <= 0.0) return 0.0;
    if (p_ == 1.0) return c_;
    return c_ * p_ * std::pow(s, p_ - 1.0);
  }
  double density_at_zero_plus() const override { return p_ == 1.0 ? c_ : 0.0; }
  ExtReal density_sup() const override {
    return p_ == 1.0 ? ExtReal(c_) : ExtReal::infinity();
  }
  double small_index() const override { return p_; }
  PowerMajorant small_majorant(double) const override { return {p_, c_}; }
  Growth growth() const override { return Growth::polynomial(p_, 0.0, c_); }

  double exponent() const { return p_; }
  double coef() const { return c_; }

 private:
  double p_, c_;
};

class CoshImpl final : public YoungImpl {
 public:
  YoungKind kind() const override { return YoungKind::cosh_minus_1; }
  std::string name() const override { return "cosh-1"; }
  ExtReal value(double s) const override {
    if (s < 1.0) {
      const double h = std::sinh(0.5 * s);
      return 2.0 * h * h;
    }
    return std::cosh(s) - 1.0;
  }
  double log_value(double s) const override {
    if (s < 20.0) return std::log(value(s).to_double());
    return s - std::log(2.0) + std::log1p(-2.0 * std::exp(-s) + std::exp(-2.0 * s));
  }
  ExtReal density(double s) const override { return std::sinh(s); }
  double small_index() const override { return 2.0; }
  PowerMajorant small_majorant(double xmax) const override {
    // (cosh x - 1) / x^2 is increasing.
    if (xmax <= 1e-4) return {2.0, 0.5 + xmax * xmax / 24.0 + 1e-16};
    return {2.0, value(xmax).to_double() / (xmax * xmax)};
  }
  Growth growth() const override { return Growth::exponential(1.0, 0.5); }
};

class LLogImpl final : public YoungImpl {
 public:
  YoungKind kind() const override { return YoungKind::llog; }
  std::string name() const override { return "llog"; }
  ExtReal value(double s) const override {
    if (s < 1.0) return s * std::asinh(s) - s * s / (std::sqrt(1.0 + s * s) + 1.0);
    return s * std::asinh(s) - (std::hypot(1.0, s) - 1.0);
  }
  ExtReal density(double s) const override { return std::asinh(s); }
  double small_index() const override { return 2.0; }
  PowerMajorant small_majorant(double) const override { return {2.0, 0.5}; }
  Growth growth() const override { return Growth::polynomial(1.0, 1.0, 1.0); }
};

class XLog1pImpl final : public YoungImpl {
 public:
  YoungKind kind() const override { return YoungKind::xlog1p; }
  std::string name() const override { return "xlog1p"; }
  ExtReal value(double s) const override { return s * std::log1p(s); }
  ExtReal density(double s) const override { return std::log1p(s) + s / (1.0 + s); }
  double small_index() const override { return 2.0; }
  PowerMajorant small_majorant(double) const override { return {2.0, 1.0}; }
  Growth growth() const override { return Growth::polynomial(1.0, 1.0, 1.0); }
};

class LLogLImpl final : public YoungImpl {
 public:
  YoungKind kind() const override { return YoungKind::zygmund_llogl; }
  std::string name() const override { return "llogl"; }
  ExtReal value(double s) const override { return s <= 1.0 ? 0.0 : s * std::log(s); }
  ExtReal density(double s) const override { return s <= 1.0 ? 0.0 : 1.0 + std::log(s); }
  double vanishing_limit() const override { return 1.0; }
  double small_index() const override { return kInf; }
  Growth growth() const override { return Growth::polynomial(1.0, 1.0, 1.0); }
};

class LExpImpl final : public YoungImpl {
 public:
  YoungKind kind() const override { return YoungKind::zygmund_exp; }
  std::string name() const override { return "lexp"; }
  ExtReal value(double s) const override { return s <= 1.0 ? s : std::exp(s - 1.0); }
  double log_value(double s) const override { return s <= 1.0 ? std::log(s) : s - 1.0; }
  ExtReal density(double s) const override {
    if (s <= 0.0) return 0.0;
    if (s <= 1.0) return 1.0;
    return std::exp(s - 1.0);
  }
  double density_at_zero_plus() const override { return 1.0; }
  double small_index() const override { return 1.0; }
  Growth growth() const override { return Growth::exponential(1.0, std::exp(-1.0)); }
};

class TabulatedImpl final : public YoungImpl {
 public:
  TabulatedImpl(std::vector<DensityPoint> pts, DensityTail tail)
      : pts_(std::move(pts)), tail_(tail) {
    area_.resize(pts_.size(), 0.0);
    for (std::size_t i = 1; i < pts_.size(); ++i)
      area_[i] = area_[i - 1] + 0.5 * (pts_[i - 1].y + pts_[i].y) * (pts_[i].x - pts_[i - 1].x);
  }
  YoungKind kind() const override { return YoungKind::tabulated; }
  std::string name() const override {
    return "tabulated[" + std::to_string(pts_.size()) +
           (tail_ == DensityTail::infinite ? ",inf]" : "]");
  }
  ExtReal value(double s) const override {
    if (s <= 0.0) return 0.0;
    const DensityPoint& last = pts_.back();
    if (s > last.x) {
      if (tail_ == DensityTail::infinite) return ExtReal::infinity();
      return area_.back() + last.y * (s - last.x);
    }
    auto it = std::lower_bound(pts_.begin(), pts_.end(), s,
                               [](const DensityPoint& p, double v) { return p.x < v; });
    const std::size_t i = static_cast<std::size_t>(it - pts_.begin());
    if (it->x == s) return area_[i];
    const DensityPoint& a = pts_[i - 1];
    const DensityPoint& b = pts_[i];
    const double ys = a.y + (b.y - a.y) * (s - a.x) / (b.x - a.x);
    return area_[i - 1] + 0.5 * (a.y + ys) * (s - a.x);
  }
  ExtReal density(double s) const override {
    if (s <= 0.0) return 0.0;
    const DensityPoint& last = pts_.back();
    if (s > last.x) {
      if (tail_ == DensityTail::infinite) return ExtReal::infinity();
      return last.y;
    }
    auto it = std::lower_bound(pts_.begin(), pts_.end(), s,
                               [](const DensityPoint& p, double v) { return p.x < v; });
    if (it->x == s) return it->y;
    const DensityPoint& a = *(it - 1);
    const DensityPoint& b = *it;
    return a.y + (b.y - a.y) * (s - a.x) / (b.x - a.x);
  }
  double density_at_zero_plus() const override {
    double y = 0.0;
    for (const auto& p : pts_) {
      if (p.x > 0.0) break;
      y = p.y;
    }
    if (pts_.size() == 1 || pts_.back().x == 0.0) {
      // The whole path sits on the vertical axis.
      return tail_ == DensityTail::infinite ? kInf : y;
    }
    return y;
  }
  ExtReal density_sup() const override {
    if (tail_ == DensityTail::infinite) return ExtReal::infinity();
    return pts_.back().y;
  }
  double threshold() const override {
    return tail_ == DensityTail::infinite ? pts_.back().x : kInf;
  }
  double vanishing_limit() const override {
    double z = 0.0;
    for (const auto& p : pts_) {
      if (p.y > 0.0) break;
      z = p.x;
    }
    if (tail_ == DensityTail::constant && pts_.back().y == 0.0) return kInf;
    return z;
  }
  double small_index() const override {
    if (vanishing_limit() > 0.0) return kInf;
    if (density_at_zero_plus() > 0.0) return 1.0;
    return 2.0;
  }
  PowerMajorant small_majorant(double xmax) const override {
    if (small_index() != 2.0) return Kernel::small_majorant(xmax);
    // psi(u) <= K u on [0, xmax] with K the largest density slope from the
    // origin, hence Psi(x) <= K x^2 / 2.
    double k = 0.0;
    for (std::size_t i = 1; i < pts_.size(); ++i) {
      if (pts_[i].x > xmax) break;
      if (pts_[i].x > 0.0) k = std::max(k, pts_[i].y / pts_[i].x);
    }
    const ExtReal at = density(xmax);
    if (at.is_infinite()) return {2.0, kInf};
    k = std::max(k, at.to_double() / xmax);
    // Right limit at xmax when xmax sits on a jump.
    for (const auto& p : pts_)
      if (p.x == xmax) k = std::max(k, p.y / xmax);
    return {2.0, 0.5 * k};
  }
  Growth growth() const override {
    if (tail_ == DensityTail::infinite) return Growth::at_threshold(pts_.back().x);
    return Growth::polynomial(1.0, 0.0, pts_.back().y);
  }

  const std::vector<DensityPoint>& points() const { return pts_; }
  DensityTail tail() const { return tail_; }

 private:
  std::vector<DensityPoint> pts_;
  DensityTail tail_;
  std::vector<double> area_;
};

class ConjugateImpl final : public YoungImpl {
 public:
  explicit ConjugateImpl(YoungFunction base) : base_(std::move(base)) {}
  YoungKind kind() const override { return YoungKind::conjugate; }
  std::string name() const override { return "complement(" + base_.name() + ")"; }
  ExtReal value(double t) const override {
    if (t <= 0.0) return 0.0;
    const ExtReal w = base_.density_inverse(t);
    if (w.is_infinite()) return ExtReal::infinity();
    const ExtReal psi = base_(w.value());
    if (psi.is_infinite()) return ExtReal::infinity();
    return std::max(0.0, t * w.value() - psi.value());
  }
  ExtReal density(double v) const override { return base_.density_inverse(v); }
  double density_at_zero_plus() const override { return base_.kernel().vanishing_limit(); }
  ExtReal density_sup() const override {
    const double t = base_.threshold();
    return std::isfinite(t) ? ExtReal(t) : ExtReal::infinity();
  }
  double threshold() const override { return base_.density_sup().to_double(); }
  bool finite_at_threshold() const override {
    const double m = threshold();
    return !std::isfinite(m) || value(m).is_finite();
  }
  double vanishing_limit() const override { return base_.density_at_zero_plus(); }
  double small_index() const override {
    const double r = base_.kernel().small_index();
    if (r == 1.0) return kInf;
    if (std::isinf(r)) return 1.0;
    return r / (r - 1.0);
  }
  Growth growth() const override {
    const Growth g = base_.kernel().growth();
    if (g.kind == Growth::Kind::threshold) return Growth::polynomial(1.0, 0.0, g.threshold);
    if (g.kind == Growth::Kind::polynomial && g.index == 1.0 && g.log_power == 0.0)
      return Growth::at_threshold(base_.density_sup().to_double());
    return Growth::unknown();
  }

  const YoungFunction& base() const { return base_; }

 private:
  YoungFunction base_;
};

void check_nonnegative(double s) {
  if (!(s >= 0.0)) throw DomainError("Young function argument must be >= 0");
}

}  // namespace
}  // namespace detail

using detail::ConjugateImpl;

YoungFunction YoungFunction::power(double p, double coef) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw DomainError("power exponent must be finite and >= 1");
  if (!(coef > 0.0) || !std::isfinite(coef)) throw DomainError("power coefficient must be > 0");
  return YoungFunction(std::make_shared<detail::PowerImpl>(p, coef));
}
YoungFunction YoungFunction::cosh_minus_1() {
  static const auto impl = std::make_shared<detail::CoshImpl>();
  return YoungFunction(impl);
}
YoungFunction YoungFunction::llog() {
  static const auto impl = std::make_shared<detail::LLogImpl>();
  return YoungFunction(impl);
}
YoungFunction YoungFunction::xlog1p() {
  static const auto impl = std::make_shared<detail::XLog1pImpl>();
  return YoungFunction(impl);
}
YoungFunction YoungFunction::zygmund_llogl() {
  static const auto impl = std::make_shared<detail::LLogLImpl>();
  return YoungFunction(impl);
}
YoungFunction YoungFunction::zygmund_exp() {
  static const auto impl = std::make_shared<detail::LExpImpl>();
  return YoungFunction(impl);
}

YoungFunction YoungFunction::tabulated(std::vector<DensityPoint> points, DensityTail tail) {
  if (points.empty()) throw DomainError("tabulated density needs at least one breakpoint");
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || p.x < 0.0 || p.y < 0.0)
      throw DomainError("tabulated breakpoints must be finite and >= 0");
    if (i > 0 && (p.x < points[i - 1].x || p.y < points[i - 1].y))
      throw DomainError("tabulated density must be non-decreasing with non-decreasing breakpoints");
  }
  std::vector<DensityPoint> path;
  path.push_back({0.0, 0.0});
  if (points.front().x > 0.0) path.push_back({0.0, points.front().y});
  for (const auto& p : points) path.push_back(p);
  path.erase(std::unique(path.begin(), path.end()), path.end());

  const bool all_zero = std::all_of(path.begin(), path.end(),
                                    [](const DensityPoint& p) { return p.y == 0.0; });
  if (tail == DensityTail::constant && all_zero)
    throw DomainError("tabulated density is identically zero");
  if (tail == DensityTail::infinite && path.back().x == 0.0)
    throw DomainError("tabulated Young function is identically infinite");
  return YoungFunction(std::make_shared<detail::TabulatedImpl>(std::move(path), tail));
}

YoungFunction YoungFunction::parse(std::string_view name) {
  while (!name.empty() && std::isspace(static_cast<unsigned char>(name.front()))) name.remove_prefix(1);
  while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.remove_suffix(1);
  if (name == "identity") return identity();
  if (name == "cosh-1") return cosh_minus_1();
  if (name == "llog") return llog();
  if (name == "xlog1p") return xlog1p();
  if (name == "llogl") return zygmund_llogl();
  if (name == "lexp") return zygmund_exp();
  constexpr std::string_view prefix = "power:";
  if (name.substr(0, prefix.size()) == prefix) {
    const std::string_view num = name.substr(prefix.size());
    double p = 0.0;
    auto res = std::from_chars(num.data(), num.data() + num.size(), p);
    if (res.ec != std::errc() || res.ptr != num.data() + num.size())
      throw DomainError("bad power exponent in '" + std::string(name) + "'");
    return power(p);
  }
  throw DomainError("unknown Young function '" + std::string(name) + "'");
}

YoungFunction YoungFunction::load_tabulated(std::istream& in) {
  std::vector<DensityPoint> pts;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    double x, y;
    if (!(ls >> x)) continue;
    if (!(ls >> y)) throw DomainError("line " + std::to_string(lineno) + ": expected two columns");
    if (!pts.empty() && !(x > pts.back().x))
      throw DomainError("line " + std::to_string(lineno) + ": breakpoints must be strictly increasing");
    pts.push_back({x, y});
  }
  return tabulated(std::move(pts));
}

YoungKind YoungFunction::kind() const { return impl_->kind(); }
std::string YoungFunction::name() const { return impl_->name(); }

ExtReal YoungFunction::operator()(double s) const {
  detail::check_nonnegative(s);
  return impl_->value(s);
}
ExtReal YoungFunction::density(double s) const {
  detail::check_nonnegative(s);
  return impl_->density(s);
}
double YoungFunction::density_at_zero_plus() const { return impl_->density_at_zero_plus(); }
ExtReal YoungFunction::density_sup() const { return impl_->density_sup(); }
double YoungFunction::threshold() const { return impl_->threshold(); }

ExtReal YoungFunction::density_inverse(double v) const {
  return detail::generalized_inverse(*impl_, v);
}

double YoungFunction::inverse(double y) const {
  if (!(y >= 0.0)) throw DomainError("inverse argument must be >= 0");
  const double t = impl_->threshold();
  auto fits = [&](double s) { return impl_->value(s) <= ExtReal(y); };
  double hi = 1.0;
  while (fits(hi)) {
    if (hi >= t) return t;
    hi *= 2.0;
    if (hi > 1e300) return kInf;
  }
  double lo = 0.5 * hi;
  while (!fits(lo)) {
    hi = lo;
    lo *= 0.5;
    if (lo < std::numeric_limits<double>::min()) return 0.0;
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();
  while (hi - lo > 2.0 * eps * hi) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    if (fits(mid))
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

std::optional<PowerParams> YoungFunction::power_params() const {
  if (auto* p = dynamic_cast<const detail::PowerImpl*>(impl_.get()))
    return PowerParams{p->exponent(), p->coef()};
  return std::nullopt;
}

std::span<const DensityPoint> YoungFunction::breakpoints() const {
  if (auto* t = dynamic_cast<const detail::TabulatedImpl*>(impl_.get())) return t->points();
  return {};
}

DensityTail YoungFunction::density_tail() const {
  if (auto* t = dynamic_cast<const detail::TabulatedImpl*>(impl_.get())) return t->tail();
  return DensityTail::constant;
}

std::optional<YoungFunction> YoungFunction::conjugate_base() const {
  if (auto* c = dynamic_cast<const ConjugateImpl*>(impl_.get())) return c->base();
  return std::nullopt;
}

const Kernel& YoungFunction::kernel() const { return *impl_; }

YoungFunction numeric_complement(const YoungFunction& y) {
  return YoungFunction(std::make_shared<ConjugateImpl>(y));
}

YoungFunction complement(const YoungFunction& y) {
  switch (y.kind()) {
    case YoungKind::power: {
      const PowerParams pp = *y.power_params();
      if (pp.exponent == 1.0)
        return YoungFunction::tabulated({{0.0, 0.0}, {pp.coef, 0.0}}, DensityTail::infinite);
      const double p = pp.exponent;
      const double q = p / (p - 1.0);
      const double c = (1.0 - 1.0 / p) * std::pow(pp.coef * p, -1.0 / (p - 1.0));
      return YoungFunction::power(q, c);
    }
    case YoungKind::cosh_minus_1: return YoungFunction::llog();
    case YoungKind::llog: return YoungFunction::cosh_minus_1();
    case YoungKind::zygmund_exp: return YoungFunction::zygmund_llogl();
    case YoungKind::zygmund_llogl: return YoungFunction::zygmund_exp();
    case YoungKind::tabulated: {
      // Reflecting the density graph across the diagonal yields the
      // generalized inverse; a constant tail becomes a vertical one.
      std::vector<DensityPoint> reflected;
      for (const auto& p : y.breakpoints()) reflected.push_back({p.y, p.x});
      const DensityTail tail = y.density_tail() == DensityTail::constant
                                   ? DensityTail::infinite
                                   : DensityTail::constant;
      return YoungFunction::tabulated(std::move(reflected), tail);
    }
    case YoungKind::conjugate: return *y.conjugate_base();
    case YoungKind::xlog1p: break;
  }
  return numeric_complement(y);
}

std::vector<double> geometric_grid(double lo, double hi, std::size_t n) {
  if (!(lo > 0.0) || !(hi >= lo) || n == 0) throw DomainError("geometric grid needs 0 < lo <= hi, n > 0");
  std::vector<double> g(n);
  if (n == 1) {
    g[0] = lo;
    return g;
  }
  const double step = std::log(hi / lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) g[i] = lo * std::exp(step * static_cast<double>(i));
  g.front() = lo;
  g.back() = hi;
  return g;
}

std::vector<double> default_grid() { return geometric_grid(1e-6, 1e6, 512); }

YoungValidity validate(const YoungFunction& y, std::span<const double> grid, double rel_tol) {
  YoungValidity v;
  v.zero_at_origin = y(0.0) == ExtReal(0.0);
  v.nondecreasing = true;
  bool some_positive = false, some_finite = false;
  ExtReal prev = 0.0;
  for (double s : grid) {
    const ExtReal val = y(s);
    if (val < prev) v.nondecreasing = false;
    prev = val;
    if (val > ExtReal(0.0)) some_positive = true;
    if (val.is_finite() && s > 0.0) some_finite = true;
  }
  v.nontrivial = some_positive && some_finite;

  double worst = 0.0;
  for (std::size_t offset : {1u, 2u, 7u, 31u, 127u}) {
    for (std::size_t i = 0; i + offset < grid.size(); ++i) {
      const double s = grid[i], t = grid[i + offset];
      const ExtReal a = y(s), b = y(t);
      if (a.is_infinite() || b.is_infinite()) continue;
      const double rhs = 0.5 * (a.to_double() + b.to_double());
      if (!std::isfinite(rhs)) continue;
      const ExtReal mid = y(0.5 * (s + t));
      if (mid.is_infinite()) {
        worst = kInf;
        continue;
      }
      const double excess = mid.to_double() - rhs;
      if (excess > 0.0) worst = std::max(worst, rhs > 0.0 ? excess / rhs : kInf);
    }
  }
  v.worst_convexity_violation = worst;
  v.midpoint_convex = worst <= rel_tol;
  return v;
}

}  // namespace orlicz
