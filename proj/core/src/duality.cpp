#include "framemult/duality.hpp"

#include <random>

#include "framemult/inversion.hpp"
#include "framemult/linalg.hpp"
#include "framemult/multiplier.hpp"

namespace framemult {

FiniteFrame psi_dagger(const CMat& m_inverse, const Symbol& m,
                       const FiniteFrame& phi) {
  if (m.stats().has_zero) {
    throw ConditionError("psi_dagger: symbol has a zero entry");
  }
  if (m_inverse.rows() != phi.dim() || m_inverse.cols() != phi.dim()) {
    throw ShapeError("psi_dagger: inverse shape mismatch");
  }
  if (m.size() != phi.count()) {
    throw ShapeError("psi_dagger: symbol length does not match count");
  }
  return FiniteFrame(m_inverse *
                     (phi.vectors() * m.values().asDiagonal()));
}

FiniteFrame phi_dagger(const CMat& m_inverse, const Symbol& m,
                       const FiniteFrame& psi) {
  if (m.stats().has_zero) {
    throw ConditionError("phi_dagger: symbol has a zero entry");
  }
  if (m_inverse.rows() != psi.dim() || m_inverse.cols() != psi.dim()) {
    throw ShapeError("phi_dagger: inverse shape mismatch");
  }
  if (m.size() != psi.count()) {
    throw ShapeError("phi_dagger: symbol length does not match count");
  }
  return FiniteFrame(m_inverse.adjoint() *
                     (psi.vectors() * m.values().conjugate().asDiagonal()));
}

std::vector<DualCandidateCheck> verify_inverse_representation(
    const CMat& m_inverse, const Symbol& m,
    const FiniteFrame& psi_dagger_frame, const FiniteFrame& phi,
    const std::vector<FiniteFrame>& candidates, double dual_tol) {
  const Symbol reciprocal = m.reciprocal();
  const double inv_norm = spectral_norm(m_inverse);
  std::vector<DualCandidateCheck> checks;
  checks.reserve(candidates.size());
  for (const FiniteFrame& candidate : candidates) {
    DualCandidateCheck check;
    check.dual_epsilon = is_dual(phi, candidate, dual_tol).epsilon;
    check.accepted = check.dual_epsilon <= dual_tol;
    const MultiplierOp rep = build(reciprocal, psi_dagger_frame, candidate);
    check.residual = spectral_norm(m_inverse - rep.matrix) / inv_norm;
    checks.push_back(check);
  }
  return checks;
}

CoincidenceResult canonical_coincidence(const CMat& m_inverse, const Symbol& m,
                                        const FiniteFrame& phi,
                                        const FiniteFrame& psi) {
  if (m.stats().has_zero) {
    throw ConditionError("canonical_coincidence: symbol has a zero entry");
  }
  CoincidenceResult result;
  result.psi_case = frames_equivalent(psi, scaled_frame(phi, m));
  result.phi_case = frames_equivalent(phi, scaled_frame(psi, m.conjugated()));
  const FiniteFrame induced_psi = psi_dagger(m_inverse, m, phi);
  const FiniteFrame induced_phi = phi_dagger(m_inverse, m, psi);
  result.psi_distance =
      spectral_norm(induced_psi.vectors() - canonical_dual(psi).vectors());
  result.phi_distance =
      spectral_norm(induced_phi.vectors() - canonical_dual(phi).vectors());
  return result;
}

double riesz_inverse_formula(const Symbol& m, const FiniteFrame& phi,
                             const FiniteFrame& psi) {
  if (phi.count() != phi.dim() || psi.count() != psi.dim()) {
    throw ConditionError("riesz_inverse_formula: frames must be bases (N = d)");
  }
  if (!classify_matrix(phi.vectors()).invertible ||
      !classify_matrix(psi.vectors()).invertible) {
    throw ConditionError("riesz_inverse_formula: synthesis matrix singular");
  }
  const Symbol reciprocal = m.reciprocal();  // also rejects zeros
  const MultiplierOp op = build(m, phi, psi);
  const CMat inv = direct_invert(op.matrix);
  const MultiplierOp rep =
      build(reciprocal, canonical_dual(psi), canonical_dual(phi));
  return spectral_norm(inv - rep.matrix) / spectral_norm(inv);
}

FiniteFrame alternate_dual(const FiniteFrame& phi, std::uint64_t seed,
                           double scale) {
  const Index d = phi.dim();
  const Index n = phi.count();
  if (n <= d) {
    throw ConditionError("alternate_dual: frame must be overcomplete");
  }
  // Any dual is canonical dual + W K^H with K an orthonormal kernel basis of
  // the synthesis operator and W arbitrary; a seeded Gaussian W gives a
  // generic second witness.
  Eigen::JacobiSVD<CMat> svd(phi.vectors(), Eigen::ComputeFullV);
  const CMat kernel = svd.matrixV().rightCols(n - d);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMat w(d, n - d);
  for (Index j = 0; j < w.cols(); ++j) {
    for (Index i = 0; i < d; ++i) {
      w(i, j) = scale * cplx(gauss(rng), gauss(rng));
    }
  }
  return FiniteFrame(canonical_dual(phi).vectors() + w * kernel.adjoint());
}

}  // namespace framemult
