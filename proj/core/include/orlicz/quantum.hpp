#pragma once

#include <vector>

#include <Eigen/Dense>

#include "orlicz/classical.hpp"
#include "orlicz/ext_real.hpp"
#include "orlicz/modular.hpp"
#include "orlicz/profile.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

/// Square complex matrix acting on a finite-dimensional Hilbert space.
class MatrixObservable {
 public:
  explicit MatrixObservable(Eigen::MatrixXcd a);
  static MatrixObservable diagonal(const std::vector<double>& d);

  const Eigen::MatrixXcd& matrix() const { return a_; }
  int dim() const { return static_cast<int>(a_.rows()); }
  /// max|A - A*| <= 1e-12 max|A|.
  bool hermitian() const { return hermitian_; }
  double max_abs() const;

 private:
  Eigen::MatrixXcd a_;
  bool hermitian_ = false;
};

/// tau = scale * Tr.
struct TraceFunctional {
  double scale = 1.0;

  static TraceFunctional counting() { return {}; }
  static TraceFunctional scaled(double c);
  double operator()(const Eigen::MatrixXcd& a) const { return scale * a.trace().real(); }
};

/// Singular values of a, descending, from the Hermitian eigenproblem of a*a
/// (of a itself when a is Hermitian). Values below 1e-12 ||a|| are reported
/// as 0.
std::vector<double> singular_values(const MatrixObservable& a);

/// mu_t(a): step levels are the distinct singular values (values within
/// 1e-12 ||a|| of a group's largest member share the group mean), lengths
/// the tau-mass of the spectral projections.
DecreasingProfile singular_profile(const MatrixObservable& a,
                                   const TraceFunctional& tau = TraceFunctional::counting());

/// tau(Psi(|a| / lambda)) by spectral functional calculus.
ExtReal kunze_modular(const YoungFunction& y, const MatrixObservable& a,
                      const TraceFunctional& tau, double lambda);

/// Luxemburg norm of the singular profile.
NormReport nc_norm(const YoungFunction& y, const MatrixObservable& a,
                   const TraceFunctional& tau = TraceFunctional::counting(),
                   const NormOptions& opts = {});

/// sum_i lambda_i log(lambda_i + eps) over the spectrum of a positive
/// semidefinite f, times the trace scale (0 log 0 = 0).
double nc_entropy(const MatrixObservable& f, const TraceFunctional& tau, double eps);

struct NcEntropyBounds {
  double lower = 0.0;  // -(2/e) tau(f^{1/2})
  double value = 0.0;  // tau(f log f)
  double upper = 0.0;  // tau(f log(f + 1))
};
NcEntropyBounds nc_entropy_bounds(const MatrixObservable& f, const TraceFunctional& tau);

/// Orlicz space over (0, inf) with the measure mu_t(x) dt of a positive
/// integrable weight x.
class WeightedQuantumSpace {
 public:
  struct Admissibility {
    /// k for E = (0, k].
    std::vector<double> sets;
    /// Weighted Luxemburg norm of the indicator of E.
    std::vector<ExtReal> indicator_norms;
    /// int_E mu(f) dnu <= C_E ||f||; C_E is the weighted Orlicz norm of the
    /// indicator in the complementary function.
    std::vector<ExtReal> c_e;
    bool ok = false;
  };

  /// DomainError unless the weight is integrable.
  WeightedQuantumSpace(YoungFunction y, DecreasingProfile weight, int num_sets = 8);
  static WeightedQuantumSpace from_matrix(YoungFunction y, const MatrixObservable& x,
                                          const TraceFunctional& tau = TraceFunctional::counting());

  const YoungFunction& young() const { return y_; }
  const DecreasingProfile& weight() const { return weight_; }
  const Admissibility& admissibility() const { return adm_; }

 private:
  YoungFunction y_;
  DecreasingProfile weight_;
  Admissibility adm_;
};

NormReport weighted_nc_norm(const WeightedQuantumSpace& space, const DecreasingProfile& g,
                            const NormOptions& opts = {});
NormReport weighted_nc_norm(const WeightedQuantumSpace& space, const MatrixObservable& g,
                            const TraceFunctional& tau = TraceFunctional::counting(),
                            const NormOptions& opts = {});

struct QuantumRegularityReport {
  bool regular = false;
  /// {t : int exp(t mu_s(g)) mu_s(x) ds < inf}.
  DomainInterval domain;
  /// mu(g) lies in the weighted L^{cosh-1}.
  bool weighted_member = false;
  bool agrees = false;
};

QuantumRegularityReport quantum_regular_check(const DecreasingProfile& g,
                                              const DecreasingProfile& x_weight,
                                              const ModularOptions& opts = {});
QuantumRegularityReport quantum_regular_check(const MatrixObservable& g,
                                              const DecreasingProfile& x_weight,
                                              const TraceFunctional& tau = TraceFunctional::counting());

}  // namespace orlicz
