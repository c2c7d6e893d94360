#pragma once

#include <cstdint>
#include <vector>

#include "framemult/frames.hpp"
#include "framemult/types.hpp"

namespace framemult {

/// The unique dual frame of Psi through which the inverse multiplier is
/// again a multiplier with reciprocal symbol: columns M^{-1} (m_n phi_n).
/// Requires a zero-free symbol.
FiniteFrame psi_dagger(const CMat& m_inverse, const Symbol& m,
                       const FiniteFrame& phi);

/// Mirror construction for Phi: columns (M^{-1})^H (conj(m_n) psi_n).
FiniteFrame phi_dagger(const CMat& m_inverse, const Symbol& m,
                       const FiniteFrame& psi);

struct DualCandidateCheck {
  double dual_epsilon = 0.0;  // is_dual(phi, candidate) defect
  bool accepted = false;      // dual_epsilon <= dual_tol
  double residual = 0.0;      // ||M^{-1} - M_{1/m, psi_dagger, cand}|| / ||M^{-1}||
};

/// Checks the reciprocal-symbol representation of the inverse against a list
/// of dual candidates of phi. Non-duals are flagged rather than evaluated as
/// witnesses; their residual is still reported.
std::vector<DualCandidateCheck> verify_inverse_representation(
    const CMat& m_inverse, const Symbol& m, const FiniteFrame& psi_dagger_frame,
    const FiniteFrame& phi, const std::vector<FiniteFrame>& candidates,
    double dual_tol = 1e-8);

struct CoincidenceResult {
  bool psi_case = false;      // psi equivalent to m*phi
  bool phi_case = false;      // phi equivalent to conj(m)*psi
  double psi_distance = 0.0;  // ||psi_dagger - canonical_dual(psi)||
  double phi_distance = 0.0;  // ||phi_dagger - canonical_dual(phi)||
};

/// When does the induced dual coincide with the canonical dual: the
/// equivalence tests and the direct distances, side by side.
CoincidenceResult canonical_coincidence(const CMat& m_inverse, const Symbol& m,
                                        const FiniteFrame& phi,
                                        const FiniteFrame& psi);

/// Residual of M^{-1} = M_{1/m, dual(psi), dual(phi)} for bases (N = d) with
/// a zero-free semi-normalized symbol.
double riesz_inverse_formula(const Symbol& m, const FiniteFrame& phi,
                             const FiniteFrame& psi);

/// Non-canonical dual of an overcomplete frame: canonical dual plus a random
/// bounded map into the coefficient-space kernel. Deterministic in the seed.
FiniteFrame alternate_dual(const FiniteFrame& phi, std::uint64_t seed,
                           double scale = 0.5);

}  // namespace framemult
