#include "orlicz/maps.hpp"

#include <algorithm>
#include <cmath>

#include "orlicz/errors.hpp"

namespace orlicz {

PositiveMap PositiveMap::pinching(std::vector<std::vector<int>> blocks) {
  int n = 0;
  for (const auto& b : blocks) n += static_cast<int>(b.size());
  if (n == 0) throw DomainError("pinching needs a non-empty partition");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (const auto& b : blocks) {
    if (b.empty()) throw DomainError("pinching blocks must be non-empty");
    for (int i : b) {
      if (i < 0 || i >= n || seen[static_cast<std::size_t>(i)])
        throw DomainError("pinching blocks must partition 0..n-1");
      seen[static_cast<std::size_t>(i)] = true;
    }
  }
  PositiveMap m;
  m.kind_ = Kind::pinching;
  m.dim_ = n;
  m.c_ = 1.0;
  m.blocks_ = std::move(blocks);
  return m;
}

PositiveMap PositiveMap::kraus(std::vector<Eigen::MatrixXcd> ops) {
  if (ops.empty()) throw DomainError("kraus map needs at least one operator");
  const auto rows = ops.front().rows(), cols = ops.front().cols();
  if (rows < 1 || cols < 1) throw DomainError("kraus operators must be non-empty");
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(cols, cols);
  for (const auto& k : ops) {
    if (k.rows() != rows || k.cols() != cols) throw DomainError("kraus operators must share a shape");
    if (!k.allFinite()) throw DomainError("kraus operators must be finite");
    sum += k.adjoint() * k;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sum, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericError("Hermitian eigensolver failed");
  PositiveMap m;
  m.kind_ = Kind::kraus;
  m.dim_ = static_cast<int>(cols);
  m.c_ = std::max(0.0, es.eigenvalues().maxCoeff());
  m.ops_ = std::move(ops);
  return m;
}

PositiveMap PositiveMap::unitary_conjugation(Eigen::MatrixXcd u) {
  if (u.rows() < 1 || u.rows() != u.cols()) throw DomainError("unitary must be square");
  const auto n = u.rows();
  if ((u.adjoint() * u - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-10)
    throw DomainError("matrix is not unitary");
  PositiveMap m;
  m.kind_ = Kind::unitary_conjugation;
  m.dim_ = static_cast<int>(n);
  m.c_ = 1.0;
  m.ops_.push_back(std::move(u));
  return m;
}

MatrixObservable PositiveMap::apply(const MatrixObservable& a) const {
  if (a.dim() != dim_) throw DomainError("map and observable dimensions differ");
  const Eigen::MatrixXcd& x = a.matrix();
  switch (kind_) {
    case Kind::pinching: {
      Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim_, dim_);
      for (const auto& b : blocks_)
        for (int i : b)
          for (int j : b) out(i, j) = x(i, j);
      return MatrixObservable(std::move(out));
    }
    case Kind::kraus: {
      const auto m = ops_.front().rows();
      Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(m, m);
      for (const auto& k : ops_) out += k * x * k.adjoint();
      return MatrixObservable(std::move(out));
    }
    case Kind::unitary_conjugation:
      return MatrixObservable(ops_.front() * x * ops_.front().adjoint());
  }
  throw DomainError("unknown map kind");
}

MajorizationReport majorization_check(const DecreasingProfile& f, const DecreasingProfile& g,
                                      std::optional<std::vector<double>> alphas) {
  MajorizationReport r;
  if (alphas) {
    r.alphas = std::move(*alphas);
  } else {
    for (const auto* p : {&f, &g}) {
      for (const auto& piece : p->pieces()) {
        if (piece.start > 0.0) r.alphas.push_back(piece.start);
        if (std::isfinite(piece.end)) r.alphas.push_back(piece.end);
      }
    }
    const double j = std::max({f.junction(), g.junction(), 1.0});
    if (f.has_tail() || g.has_tail())
      for (int k = 1; k <= 20; ++k) r.alphas.push_back(std::ldexp(j, k));
    if (r.alphas.empty()) r.alphas.push_back(1.0);
    std::sort(r.alphas.begin(), r.alphas.end());
    r.alphas.erase(std::unique(r.alphas.begin(), r.alphas.end()), r.alphas.end());
  }
  r.majorized = true;
  for (double a : r.alphas) {
    const ExtReal pf = hl_partial(f, a), pg = hl_partial(g, a);
    double margin, scale = 1.0;
    if (pf.is_infinite() && pg.is_infinite()) {
      margin = 0.0;
    } else {
      margin = pf.to_double() - pg.to_double();
      scale = std::max({1.0, std::fabs(pf.to_double()), std::fabs(pg.to_double())});
    }
    r.margins.push_back(margin);
    if (!(margin >= -1e-12 * scale)) r.majorized = false;
  }
  return r;
}

MajorizationReport majorization_check(const MatrixObservable& f, const MatrixObservable& g) {
  return majorization_check(singular_profile(f), singular_profile(g));
}

ExtensionReport extension_boundedness_check(const PositiveMap& t, const YoungFunction& y,
                                            const std::vector<MatrixObservable>& sample,
                                            std::optional<double> budget) {
  ExtensionReport r;
  r.budget = budget.value_or(2.0 * std::max(1.0, t.trace_constant()));
  r.sharp_contraction = t.kind() == PositiveMap::Kind::pinching;
  for (const auto& a : sample) {
    const MatrixObservable ta = t.apply(a);
    const ExtReal na = nc_norm(y, a).value;
    if (na == ExtReal(0.0) || na.is_infinite()) continue;
    const ExtReal nt = nc_norm(y, ta).value;
    const double ratio = nt.to_double() / na.value();
    r.max_ratio = std::max(r.max_ratio, ratio);
    ++r.samples;
    if (t.kind() == PositiveMap::Kind::pinching) {
      const bool cert = majorization_check(a, ta).majorized;
      r.sharp_contraction = r.sharp_contraction && cert && ratio <= 1.0 + 1e-9;
    }
  }
  r.bounded = r.max_ratio <= r.budget;
  return r;
}

}  // namespace orlicz
