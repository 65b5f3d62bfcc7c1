#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "orlicz/profile.hpp"
#include "orlicz/quantum.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

/// Positive map between matrix algebras with trace-domination constant C:
/// tau(T(a)) <= C tau(a) for positive a.
class PositiveMap {
 public:
  enum class Kind { pinching, kraus, unitary_conjugation };

  /// Block-diagonal conditional expectation; `blocks` partitions the indices
  /// 0..n-1.
  static PositiveMap pinching(std::vector<std::vector<int>> blocks);
  /// a -> sum_j K_j a K_j^*; C = largest eigenvalue of sum_j K_j^* K_j.
  static PositiveMap kraus(std::vector<Eigen::MatrixXcd> ops);
  /// a -> u a u^*; u must be unitary within 1e-10.
  static PositiveMap unitary_conjugation(Eigen::MatrixXcd u);

  Kind kind() const { return kind_; }
  double trace_constant() const { return c_; }
  int input_dim() const { return dim_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  const std::vector<Eigen::MatrixXcd>& operators() const { return ops_; }

  /// DomainError on dimension mismatch.
  MatrixObservable apply(const MatrixObservable& a) const;

 private:
  Kind kind_ = Kind::pinching;
  int dim_ = 0;
  double c_ = 1.0;
  std::vector<std::vector<int>> blocks_;
  std::vector<Eigen::MatrixXcd> ops_;
};

struct MajorizationReport {
  bool majorized = false;
  std::vector<double> alphas;
  /// int_0^alpha mu(f) - int_0^alpha mu(g) at each alpha.
  std::vector<double> margins;
};

/// Whether g is majorized by f: int_0^alpha mu(g) <= int_0^alpha mu(f) within
/// 1e-12 max(1, |partial sums|) at each alpha. The default grid holds the breakpoints of both
/// profiles and, when either has a tail, geometric points past the junction.
MajorizationReport majorization_check(const DecreasingProfile& f, const DecreasingProfile& g,
                                      std::optional<std::vector<double>> alphas = std::nullopt);
MajorizationReport majorization_check(const MatrixObservable& f, const MatrixObservable& g);

struct ExtensionReport {
  double max_ratio = 0.0;
  double budget = 0.0;
  bool bounded = false;
  /// Pinchings only: every sample passed the majorization certificate and
  /// had ratio <= 1 + 1e-9.
  bool sharp_contraction = false;
  int samples = 0;
};

/// max over the sample of nc_norm(T(a)) / nc_norm(a). The default budget is
/// 2 max(1, C).
ExtensionReport extension_boundedness_check(const PositiveMap& t, const YoungFunction& y,
                                            const std::vector<MatrixObservable>& sample,
                                            std::optional<double> budget = std::nullopt);

}  // namespace orlicz
