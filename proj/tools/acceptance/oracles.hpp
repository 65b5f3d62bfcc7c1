#pragma once

// Reference computations used by the tests and the acceptance suite. They
// rely only on textbook formulas and brute force, never on the library's
// own solvers, so that agreement between the two is meaningful.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace orlicz::oracle {

using ScalarFn = std::function<long double(long double)>;

/// Young functions written directly from their defining formulas.
/// Supported: "power:p", "identity", "cosh-1", "llog", "xlog1p", "llogl", "lexp".
ScalarFn young(const std::string& name);

/// sup_{u >= 0} (u v - F(u)) for convex F with F(0) = 0: geometric scan for
/// the bracket of the concave objective, then golden section.
long double legendre(const ScalarFn& f, long double v);

/// The lambda solving m F(1 / lambda) = 1, by geometric scan and bisection on
/// lambda with F evaluated directly.
long double indicator_norm(const ScalarFn& f, long double m);

/// (sum_i w_i |v_i|^p)^{1/p}.
long double lp_norm(const std::vector<std::pair<double, double>>& atoms, long double p);

/// Singular values, descending, from a two-sided Jacobi SVD.
std::vector<double> svd_singular_values(const Eigen::MatrixXcd& a);

/// (sum_i s_i^p)^{1/p} from the Jacobi SVD.
long double schatten_norm(const Eigen::MatrixXcd& a, long double p);

/// mu_t(a) = inf{s >= 0 : #{singular values > s} <= t}, evaluated by
/// scanning candidate levels (counting trace).
double spectral_mu(const std::vector<double>& singular_values, double t);

/// sup{ sum_i |f_i| g_i w_i : sum_i w_i Phi(g_i) <= 1 } for at most four
/// atoms. Budget shares on a simplex grid, then pairwise transfer ascent.
long double orlicz_sup(const std::vector<std::pair<double, double>>& atoms, const ScalarFn& phi);

/// Integral over (0, alpha] of the step function with the given levels and
/// lengths.
long double step_partial(const std::vector<std::pair<double, double>>& steps, long double alpha);

/// Plain composite Simpson rule on [a, b] with n (even) panels.
long double simpson(const ScalarFn& f, long double a, long double b, int n);

}  // namespace orlicz::oracle
