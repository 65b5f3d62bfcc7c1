#include "orlicz/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "orlicz/errors.hpp"

namespace orlicz {

MatrixObservable::MatrixObservable(Eigen::MatrixXcd a) : a_(std::move(a)) {
  if (a_.rows() < 1 || a_.rows() != a_.cols()) throw DomainError("observable must be a non-empty square matrix");
  if (!a_.allFinite()) throw DomainError("observable entries must be finite");
  const double scale = max_abs();
  const double asym = (a_ - a_.adjoint()).cwiseAbs().maxCoeff();
  hermitian_ = asym <= 1e-12 * scale;
}

MatrixObservable MatrixObservable::diagonal(const std::vector<double>& d) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) v[static_cast<Eigen::Index>(i)] = d[i];
  return MatrixObservable(v.asDiagonal());
}

double MatrixObservable::max_abs() const { return a_.cwiseAbs().maxCoeff(); }

TraceFunctional TraceFunctional::scaled(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("trace scale must be finite and > 0");
  return {c};
}

namespace {

struct Spectrum {
  Eigen::VectorXd s;  // singular values, ascending, tiny ones zeroed
  Eigen::MatrixXcd v;
};

// |a| = (a*a)^{1/2}. A Hermitian a is diagonalized directly, |a| = V|L|V*,
// which avoids squaring its condition number.
Spectrum abs_spectrum(const MatrixObservable& a, bool vectors) {
  const bool direct = a.hermitian();
  const Eigen::MatrixXcd h = direct ? Eigen::MatrixXcd(0.5 * (a.matrix() + a.matrix().adjoint()))
                                    : Eigen::MatrixXcd(a.matrix().adjoint() * a.matrix());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
      h, vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericError("Hermitian eigensolver failed");
  Spectrum out;
  out.s = direct ? Eigen::VectorXd(es.eigenvalues().cwiseAbs())
                 : Eigen::VectorXd(es.eigenvalues().cwiseMax(0.0).cwiseSqrt());
  const double norm = out.s.size() ? out.s.maxCoeff() : 0.0;
  const double tol = 1e-12 * norm;
  for (Eigen::Index i = 0; i < out.s.size(); ++i)
    if (out.s[i] < tol) out.s[i] = 0.0;
  if (vectors) out.v = es.eigenvectors();
  return out;
}

}  // namespace

std::vector<double> singular_values(const MatrixObservable& a) {
  const Spectrum sp = abs_spectrum(a, false);
  std::vector<double> s(sp.s.data(), sp.s.data() + sp.s.size());
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

DecreasingProfile singular_profile(const MatrixObservable& a, const TraceFunctional& tau) {
  const std::vector<double> s = singular_values(a);
  if (s.empty() || s.front() == 0.0) return DecreasingProfile();
  const double tol = 1e-12 * s.front();
  std::vector<Step> steps;
  std::size_t i = 0;
  while (i < s.size() && s[i] > 0.0) {
    std::size_t j = i;
    double sum = 0.0;
    while (j < s.size() && s[j] > 0.0 && s[i] - s[j] <= tol) sum += s[j++];
    const double count = static_cast<double>(j - i);
    steps.push_back({sum / count, count * tau.scale});
    i = j;
  }
  return DecreasingProfile(std::move(steps));
}

ExtReal kunze_modular(const YoungFunction& y, const MatrixObservable& a,
                      const TraceFunctional& tau, double lambda) {
  if (!(lambda > 0.0)) throw DomainError("lambda must be > 0");
  const Spectrum sp = abs_spectrum(a, true);
  Eigen::VectorXd d(sp.s.size());
  for (Eigen::Index i = 0; i < sp.s.size(); ++i) {
    const ExtReal v = y(sp.s[i] / lambda);
    if (v.is_infinite()) return ExtReal::infinity();
    if (!std::isfinite(v.to_double())) return kInf;
    d[i] = v.to_double();
  }
  const Eigen::MatrixXcd f = sp.v * d.cast<std::complex<double>>().asDiagonal() * sp.v.adjoint();
  return tau(f);
}

NormReport nc_norm(const YoungFunction& y, const MatrixObservable& a, const TraceFunctional& tau,
                   const NormOptions& opts) {
  return luxemburg_norm(y, singular_profile(a, tau), nullptr, opts);
}

namespace {

Eigen::VectorXd psd_spectrum(const MatrixObservable& f) {
  if (!f.hermitian()) throw DomainError("entropy needs a Hermitian matrix");
  const Eigen::MatrixXcd h = 0.5 * (f.matrix() + f.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericError("Hermitian eigensolver failed");
  Eigen::VectorXd ev = es.eigenvalues();
  const double norm = ev.cwiseAbs().maxCoeff();
  if (ev.minCoeff() < -1e-12 * norm) throw DomainError("entropy needs a positive semidefinite matrix");
  return ev.cwiseMax(0.0);
}

}  // namespace

double nc_entropy(const MatrixObservable& f, const TraceFunctional& tau, double eps) {
  if (!(eps >= 0.0) || !std::isfinite(eps)) throw DomainError("epsilon must be finite and >= 0");
  const Eigen::VectorXd ev = psd_spectrum(f);
  double h = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (ev[i] > 0.0) h += ev[i] * std::log(ev[i] + eps);
  return tau.scale * h;
}

NcEntropyBounds nc_entropy_bounds(const MatrixObservable& f, const TraceFunctional& tau) {
  const Eigen::VectorXd ev = psd_spectrum(f);
  NcEntropyBounds b;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    const double l = ev[i];
    b.lower -= 2.0 / std::numbers::e * std::sqrt(l);
    if (l > 0.0) b.value += l * std::log(l);
    b.upper += l * std::log1p(l);
  }
  b.lower *= tau.scale;
  b.value *= tau.scale;
  b.upper *= tau.scale;
  return b;
}

WeightedQuantumSpace::WeightedQuantumSpace(YoungFunction y, DecreasingProfile weight, int num_sets)
    : y_(std::move(y)), weight_(std::move(weight)) {
  if (weight_.is_zero()) throw DomainError("weight must be nonzero");
  if (hl_partial(weight_, kInf).is_infinite()) throw DomainError("weight must be integrable");
  if (num_sets < 1) throw DomainError("need at least one admissibility set");
  const YoungFunction dual = complement(y_);
  adm_.ok = true;
  for (int k = 1; k <= num_sets; ++k) {
    const DecreasingProfile indicator({{1.0, static_cast<double>(k)}});
    const ExtReal n = luxemburg_norm(y_, indicator, &weight_).value;
    const ExtReal c = orlicz_norm(dual, indicator, &weight_).value;
    adm_.sets.push_back(k);
    adm_.indicator_norms.push_back(n);
    adm_.c_e.push_back(c);
    adm_.ok = adm_.ok && n.is_finite() && c.is_finite();
  }
}

WeightedQuantumSpace WeightedQuantumSpace::from_matrix(YoungFunction y, const MatrixObservable& x,
                                                       const TraceFunctional& tau) {
  return WeightedQuantumSpace(std::move(y), singular_profile(x, tau));
}

NormReport weighted_nc_norm(const WeightedQuantumSpace& space, const DecreasingProfile& g,
                            const NormOptions& opts) {
  return luxemburg_norm(space.young(), g, &space.weight(), opts);
}

NormReport weighted_nc_norm(const WeightedQuantumSpace& space, const MatrixObservable& g,
                            const TraceFunctional& tau, const NormOptions& opts) {
  return weighted_nc_norm(space, singular_profile(g, tau), opts);
}

QuantumRegularityReport quantum_regular_check(const DecreasingProfile& g,
                                              const DecreasingProfile& x_weight,
                                              const ModularOptions& opts) {
  const MomentDomain d = moment_domain(g, x_weight);
  QuantumRegularityReport r;
  r.domain = {d.lower, d.upper, false, d.upper_closed};
  r.regular = d.zero_interior();
  r.weighted_member = membership(YoungFunction::cosh_minus_1(), g, &x_weight, opts).member;
  r.agrees = r.regular == r.weighted_member;
  return r;
}

QuantumRegularityReport quantum_regular_check(const MatrixObservable& g,
                                              const DecreasingProfile& x_weight,
                                              const TraceFunctional& tau) {
  return quantum_regular_check(singular_profile(g, tau), x_weight);
}

}  // namespace orlicz
