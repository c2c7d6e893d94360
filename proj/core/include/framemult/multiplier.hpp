#pragma once

#include "framemult/frames.hpp"
#include "framemult/types.hpp"

namespace framemult {

/// The operator f -> sum_n m_n <f, psi_n> phi_n, materialized as
/// T_phi diag(m) T_psi^H alongside its ingredients. Immutable after build;
/// apply() recomputes the action matrix-free from the ingredients.
struct MultiplierOp {
  Symbol symbol;
  FiniteFrame frame_phi;
  FiniteFrame frame_psi;
  CMat matrix;
};

MultiplierOp build(const Symbol& m, const FiniteFrame& phi,
                   const FiniteFrame& psi);

/// Analysis by psi, weight by m, synthesis by phi; never touches op.matrix.
CVec apply(const MultiplierOp& op, const CVec& f);

/// Relative distance between op.matrix^H and the multiplier with conjugated
/// symbol and swapped frames.
double adjoint_identity_check(const MultiplierOp& op);

struct NormBound {
  double lhs = 0.0;  // spectral norm of the multiplier
  double rhs = 0.0;  // sqrt(B_phi B_psi) * max |m_n|
};

NormBound norm_bound_check(const MultiplierOp& op);

struct SchattenReport {
  cplx trace_diagonal;   // sum of matrix diagonal
  cplx trace_formula;    // sum_n m_n <phi_n, psi_n>
  double trace_norm = 0.0;
  double hs_norm = 0.0;
  double p_norm = 0.0;
  bool bounds_ok = false;
};

/// Trace two ways plus Schatten norms from the singular values, with the
/// sqrt(B_phi B_psi) ||m||_p bound checks. Requires p >= 1.
SchattenReport schatten_report(const MultiplierOp& op, double p);

struct Classification {
  bool injective = false;
  bool surjective = false;
  bool invertible = false;
  double condition = 0.0;  // sigma_max / sigma_min, infinity when singular
  double sigma_min = 0.0;
  double sigma_max = 0.0;
};

/// Rank facts from the singular values: in square finite dimension
/// injective == surjective == invertible == (sigma_min > tol * sigma_max).
Classification classify_matrix(const CMat& m, double tol = kFrameTol);
Classification classify(const MultiplierOp& op, double tol = kFrameTol);

}  // namespace framemult
