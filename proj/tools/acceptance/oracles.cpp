#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace orlicz::oracle {
namespace {

constexpr long double kInf = std::numeric_limits<long double>::infinity();

long double safe(const ScalarFn& f, long double x) {
  const long double v = f(x);
  return std::isnan(v) ? kInf : v;
}

}  // namespace

ScalarFn young(const std::string& name) {
  if (name.rfind("power:", 0) == 0) {
    const long double p = std::stold(name.substr(6));
    return [p](long double s) { return std::pow(s, p); };
  }
  if (name == "identity") return [](long double s) { return s; };
  if (name == "cosh-1")
    return [](long double s) {
      const long double h = std::sinh(s / 2.0L);
      return 2.0L * h * h;
    };
  if (name == "llog")
    return [](long double s) {
      const long double r = std::sqrt(1.0L + s * s);
      return s * std::asinh(s) - s * s / (r + 1.0L);
    };
  if (name == "xlog1p") return [](long double s) { return s * std::log(s + 1.0L); };
  if (name == "llogl") return [](long double s) { return s <= 1.0L ? 0.0L : s * std::log(s); };
  if (name == "lexp") return [](long double s) { return s <= 1.0L ? s : std::exp(s - 1.0L); };
  throw std::invalid_argument("oracle: unknown Young function " + name);
}

long double legendre(const ScalarFn& f, long double v) {
  if (v <= 0.0L) return 0.0L;
  auto obj = [&](long double u) { return u * v - safe(f, u); };
  // Scan u = 2^k; the objective is concave, so its maximum lies between the
  // neighbours of the best sample.
  long double best_u = 0.0L, best = 0.0L;
  long double prev = 0.0L;
  bool closed = false;
  for (int k = -60; k <= 400; ++k) {
    const long double u = std::ldexp(1.0L, k);
    const long double val = obj(u);
    if (val > best) {
      best = val;
      best_u = u;
    }
    if (u > 1.0L && val <= prev) {
      closed = true;
      break;
    }
    prev = val;
  }
  // Still increasing at 2^400: the supremum is infinite.
  if (!closed) return kInf;
  if (best_u == 0.0L) return 0.0L;
  long double a = best_u / 2.0L, b = best_u * 2.0L;
  const long double g = (std::sqrt(5.0L) - 1.0L) / 2.0L;
  long double c = b - g * (b - a), d = a + g * (b - a);
  long double fc = obj(c), fd = obj(d);
  for (int it = 0; it < 300 && (b - a) > 1e-14L * b; ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = obj(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = obj(d);
    }
  }
  return std::max({best, fc, fd, obj((a + b) / 2.0L)});
}

long double indicator_norm(const ScalarFn& f, long double m) {
  // m F(1/lambda) is non-increasing in lambda.
  auto g = [&](long double lam) { return m * safe(f, 1.0L / lam); };
  long double lo = 1.0L, hi = 1.0L;
  while (g(lo) <= 1.0L) lo /= 2.0L;
  while (g(hi) > 1.0L) hi *= 2.0L;
  for (int it = 0; it < 200; ++it) {
    const long double mid = (lo + hi) / 2.0L;
    if (mid <= lo || mid >= hi) break;
    (g(mid) > 1.0L ? lo : hi) = mid;
  }
  return hi;
}

long double lp_norm(const std::vector<std::pair<double, double>>& atoms, long double p) {
  long double s = 0.0L;
  for (const auto& [v, w] : atoms) s += static_cast<long double>(w) * std::pow(std::fabs(static_cast<long double>(v)), p);
  return std::pow(s, 1.0L / p);
}

std::vector<double> svd_singular_values(const Eigen::MatrixXcd& a) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
  const auto& s = svd.singularValues();
  std::vector<double> out(s.data(), s.data() + s.size());
  std::sort(out.rbegin(), out.rend());
  return out;
}

long double schatten_norm(const Eigen::MatrixXcd& a, long double p) {
  long double s = 0.0L;
  for (double x : svd_singular_values(a)) s += std::pow(static_cast<long double>(x), p);
  return std::pow(s, 1.0L / p);
}

double spectral_mu(const std::vector<double>& sv, double t) {
  std::vector<double> cand = sv;
  cand.push_back(0.0);
  std::sort(cand.begin(), cand.end());
  for (double s : cand) {
    const auto count = std::count_if(sv.begin(), sv.end(), [s](double x) { return x > s; });
    if (static_cast<double>(count) <= t) return s;
  }
  return cand.back();
}

long double orlicz_sup(const std::vector<std::pair<double, double>>& atoms, const ScalarFn& phi) {
  const std::size_t n = atoms.size();
  if (n == 0 || n > 4) throw std::invalid_argument("oracle: orlicz_sup needs 1..4 atoms");
  // Bisections for nearby budgets revisit the same midpoints.
  std::map<long double, long double> phi_cache;
  auto phi_at = [&](long double x) {
    const auto it = phi_cache.find(x);
    if (it != phi_cache.end()) return it->second;
    return phi_cache[x] = safe(phi, x);
  };
  // g_i = Phi^{-1}(b_i / w_i) spends budget share b_i on atom i.
  auto inv = [&](long double y) {
    long double lo = 0.0L, hi = 1.0L;
    while (phi_at(hi) <= y) {
      lo = hi;
      hi *= 2.0L;
      if (hi > 1e300L) return hi;
    }
    for (int it = 0; it < 400 && hi - lo > 1e-13L * hi; ++it) {
      const long double mid = (lo + hi) / 2.0L;
      (phi_at(mid) <= y ? lo : hi) = mid;
    }
    return lo;
  };
  auto value = [&](const std::vector<long double>& b) {
    long double s = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
      const auto [v, w] = atoms[i];
      s += std::fabs(static_cast<long double>(v)) * w * inv(b[i] / w);
    }
    return s;
  };

  const int res = n == 1 ? 1 : n == 2 ? 64 : n == 3 ? 24 : 12;
  std::vector<long double> best(n, 0.0L), b(n, 0.0L);
  long double best_val = -1.0L;
  std::vector<int> k(n, 0);
  auto visit = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      k[i] = left;
      for (std::size_t j = 0; j < n; ++j) b[j] = static_cast<long double>(k[j]) / res;
      const long double v = value(b);
      if (v > best_val) {
        best_val = v;
        best = b;
      }
      return;
    }
    for (int c = 0; c <= left; ++c) {
      k[i] = c;
      self(self, i + 1, left - c);
    }
  };
  visit(visit, 0, res);

  // The objective is concave in the shares, so pairwise transfers with a
  // shrinking step converge to the maximum.
  for (long double step = 1.0L / res; step > 1e-11L; step /= 2.0L) {
    bool moved = true;
    while (moved) {
      moved = false;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          if (i == j || best[j] < step) continue;
          std::vector<long double> t = best;
          t[i] += step;
          t[j] -= step;
          const long double v = value(t);
          if (v > best_val) {
            best_val = v;
            best = t;
            moved = true;
          }
        }
    }
  }
  return best_val;
}

long double step_partial(const std::vector<std::pair<double, double>>& steps, long double alpha) {
  long double acc = 0.0L, pos = 0.0L;
  for (const auto& [level, length] : steps) {
    const long double take = std::min<long double>(length, alpha - pos);
    if (take <= 0.0L) break;
    acc += level * take;
    pos += take;
  }
  return acc;
}

long double simpson(const ScalarFn& f, long double a, long double b, int n) {
  if (n % 2) ++n;
  const long double h = (b - a) / n;
  long double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0L : 2.0L) * f(a + i * h);
  return s * h / 3.0L;
}

}  // namespace orlicz::oracle
