#pragma once

#include <optional>

#include "orlicz/ext_real.hpp"
#include "orlicz/measure.hpp"
#include "orlicz/modular.hpp"
#include "orlicz/profile.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

struct NormReport {
  ExtReal value = 0.0;
  /// Optimal lambda (Luxemburg) or k (Orlicz); 0 when not applicable.
  double witness = 0.0;
  int iterations = 0;
  bool converged = false;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
};

struct NormOptions {
  ModularOptions modular;
  /// Relative bracket width on lambda below which the search counts as converged.
  double rel_tol = 1e-10;
  int max_iterations = 200;
};

struct MembershipReport {
  bool member = false;
  /// A lambda with finite modular(lambda f), or 0 if none was found.
  double lambda_witness = 0.0;
};

/// Searches lambda = 2^-k, k = 0..60, for a finite modular.
MembershipReport membership(const YoungFunction& y, const DecreasingProfile& p,
                            const DecreasingProfile* weight = nullptr,
                            const ModularOptions& opts = {});
MembershipReport membership(const YoungFunction& y, const SimpleFunction& f);

/// inf{lambda > 0 : modular(p / lambda) <= 1}. The value is +inf when no
/// lambda qualifies and 0 for the zero profile.
NormReport luxemburg_norm(const YoungFunction& y, const DecreasingProfile& p,
                          const DecreasingProfile* weight = nullptr,
                          const NormOptions& opts = {});
NormReport luxemburg_norm(const YoungFunction& y, const SimpleFunction& f,
                          const NormOptions& opts = {});

/// Orlicz norm through the Amemiya formula inf_k (1 + modular(k p)) / k.
NormReport orlicz_norm(const YoungFunction& y, const DecreasingProfile& p,
                       const DecreasingProfile* weight = nullptr,
                       const NormOptions& opts = {});
NormReport orlicz_norm(const YoungFunction& y, const SimpleFunction& f,
                       const NormOptions& opts = {});

struct HolderReport {
  double lhs = 0.0;
  ExtReal rhs = 0.0;
  bool holds = false;
};

/// int |f g| against ||f||_(Y) ||g||_complement(Y); f and g share atoms
/// index by index and must carry identical weights.
HolderReport holder_check(const SimpleFunction& f, const SimpleFunction& g,
                          const YoungFunction& y);

/// Norms along L^inf -> L_exp -> L^p -> L log L -> L^1 on a probability
/// space. L log L is normed through the equivalent xlog1p function.
struct EmbeddingTable {
  double p = 2.0;
  ExtReal sup_norm = 0.0;
  ExtReal exp_norm = 0.0;
  ExtReal lp_norm = 0.0;
  ExtReal llogl_norm = 0.0;
  ExtReal l1_norm = 0.0;

  /// Each norm is finite whenever the one to its left is.
  bool finiteness_monotone() const;
};

EmbeddingTable embedding_chain_check(const SimpleFunction& f, double p);
/// `profile` must live on (0, 1]: zero tail and junction <= 1.
EmbeddingTable embedding_chain_check(const DecreasingProfile& profile, double p);

/// sum_i w_i v_i log v_i with 0 log 0 = 0; DomainError for negative values.
double entropy_plus(const SimpleFunction& f);
double entropy(const SimpleFunction& f);

struct EntropyBounds {
  /// -(2/e) sum_i w_i sqrt(v_i)
  double lower = 0.0;
  double value = 0.0;
  /// sum_i w_i v_i log(v_i + 1)
  double upper = 0.0;
};
EntropyBounds entropy_bounds(const SimpleFunction& f);

/// Nonnegative simple function with unit integral (within 1e-12).
class WeightedDensityState {
 public:
  explicit WeightedDensityState(SimpleFunction f);
  const SimpleFunction& density() const { return f_; }

 private:
  SimpleFunction f_;
};

struct DomainInterval {
  double lo = -kInf;
  double hi = kInf;
  bool lo_closed = false;
  bool hi_closed = false;
};

struct RegularityReport {
  bool regular = false;
  /// {t : int exp(t u) w < inf}.
  DomainInterval domain;
  /// The same domain for the symmetrized variable +-|u|.
  DomainInterval symmetric_domain;
  /// u belongs to the weighted L^{cosh-1}.
  bool cosh_member = false;
  bool agrees = false;
};

RegularityReport classical_regular_check(const DecreasingProfile& u,
                                         const DecreasingProfile& weight,
                                         const ModularOptions& opts = {});
/// u and the state density share atoms index by index.
RegularityReport classical_regular_check(const SimpleFunction& u,
                                         const WeightedDensityState& state);

}  // namespace orlicz
