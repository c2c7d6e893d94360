#include "framemult/multiplier.hpp"

#include <cmath>
#include <limits>

#include "framemult/linalg.hpp"

namespace framemult {

MultiplierOp build(const Symbol& m, const FiniteFrame& phi,
                   const FiniteFrame& psi) {
  if (phi.dim() != psi.dim() || phi.count() != psi.count()) {
    throw ShapeError("build: frames differ in shape");
  }
  if (m.size() != phi.count()) {
    throw ShapeError("build: symbol length does not match frame count");
  }
  CMat matrix = phi.vectors() * m.values().asDiagonal() * psi.vectors().adjoint();
  return MultiplierOp{m, phi, psi, std::move(matrix)};
}

CVec apply(const MultiplierOp& op, const CVec& f) {
  if (f.size() != op.frame_phi.dim()) {
    throw ShapeError("apply: vector length mismatch");
  }
  CVec coeffs = analysis(op.frame_psi, f);
  coeffs.array() *= op.symbol.values().array();
  return synthesis(op.frame_phi, coeffs);
}

double adjoint_identity_check(const MultiplierOp& op) {
  const MultiplierOp swapped =
      build(op.symbol.conjugated(), op.frame_psi, op.frame_phi);
  const double denom = spectral_norm(op.matrix);
  const double num = spectral_norm(CMat(op.matrix.adjoint()) - swapped.matrix);
  return denom > 0.0 ? num / denom : num;
}

NormBound norm_bound_check(const MultiplierOp& op) {
  NormBound r;
  r.lhs = spectral_norm(op.matrix);
  r.rhs = std::sqrt(op.frame_phi.bounds().upper * op.frame_psi.bounds().upper) *
          op.symbol.stats().sup_abs;
  return r;
}

SchattenReport schatten_report(const MultiplierOp& op, double p) {
  if (p < 1.0) throw ShapeError("schatten_report: p must be >= 1");
  SchattenReport r;
  r.trace_diagonal = op.matrix.trace();
  cplx formula = 0.0;
  for (Index n = 0; n < op.symbol.size(); ++n) {
    // <phi_n, psi_n> with the inner product conjugate-linear in the second
    // argument.
    const cplx ip = op.frame_psi.vectors().col(n).dot(op.frame_phi.vectors().col(n));
    formula += op.symbol.values()[n] * ip;
  }
  r.trace_formula = formula;

  Eigen::JacobiSVD<CMat> svd(op.matrix);
  const RVec sv = svd.singularValues();
  r.trace_norm = sv.sum();
  r.hs_norm = std::sqrt(sv.squaredNorm());
  double acc = 0.0;
  for (Index i = 0; i < sv.size(); ++i) acc += std::pow(sv[i], p);
  r.p_norm = std::pow(acc, 1.0 / p);

  const double root_bb =
      std::sqrt(op.frame_phi.bounds().upper * op.frame_psi.bounds().upper);
  const auto lp = [&](double q) {
    double s = 0.0;
    for (Index i = 0; i < op.symbol.size(); ++i) {
      s += std::pow(std::abs(op.symbol.values()[i]), q);
    }
    return std::pow(s, 1.0 / q);
  };
  const double slack = 1.0 + 1e-12;
  r.bounds_ok = r.trace_norm <= root_bb * lp(1.0) * slack &&
                r.hs_norm <= root_bb * lp(2.0) * slack &&
                r.p_norm <= root_bb * lp(p) * slack;
  return r;
}

Classification classify_matrix(const CMat& m, double tol) {
  if (tol <= 0.0) throw ShapeError("classify: tol must be positive");
  Classification c;
  Eigen::JacobiSVD<CMat> svd(m);
  const RVec sv = svd.singularValues();
  c.sigma_max = sv.size() > 0 ? sv[0] : 0.0;
  c.sigma_min = sv.size() > 0 ? sv[sv.size() - 1] : 0.0;
  const bool regular = c.sigma_min > tol * c.sigma_max && c.sigma_max > 0.0;
  c.injective = regular;
  c.surjective = regular;
  c.invertible = regular;
  c.condition = regular ? c.sigma_max / c.sigma_min
                        : std::numeric_limits<double>::infinity();
  return c;
}

Classification classify(const MultiplierOp& op, double tol) {
  return classify_matrix(op.matrix, tol);
}

}  // namespace framemult
