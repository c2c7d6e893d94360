#pragma once

#include <optional>
#include <string>
#include <vector>

#include "framemult/frames.hpp"
#include "framemult/multiplier.hpp"
#include "framemult/types.hpp"

namespace framemult {

enum class InversionMethod {
  kProp8,
  kProp8Apply,
  kProp9,
  kProp11,
  kDirect,
  kGphi,
};

const char* method_name(InversionMethod m);

/// Whichever constants a method consumed; unset fields were not used.
struct InversionConstants {
  std::optional<double> lower_phi;   // A_phi
  std::optional<double> upper_phi;   // B_phi
  std::optional<double> upper_psi;   // B_psi
  std::optional<double> symbol_min;  // a
  std::optional<double> symbol_max;  // b
  std::optional<double> lambda;      // max |m_n - 1|
  std::optional<double> mu;          // optimal perturbation constant
  std::optional<double> epsilon;     // measured approximate-duality defect
};

/// Per-run record of an iterative inversion. bounds[k] is the a-priori error
/// bound after k accumulation steps (geometric, nonincreasing); residuals[k]
/// is the measured ||partial - oracle|| / ||oracle|| when an oracle was
/// supplied, empty otherwise. n_planned is the smallest n whose bound meets
/// the requested accuracy.
struct InversionReport {
  InversionMethod method = InversionMethod::kDirect;
  InversionConstants constants;
  int n_planned = 0;
  std::vector<double> bounds;
  std::vector<double> residuals;
  bool converged = false;
};

/// Header line naming method and constants, then one `k,bound,residual` line
/// per accumulation step (residual column empty without an oracle).
std::string format_report(const InversionReport& report);

/// Optimal constant of the perturbation condition
/// sum_n |<h, psi_n - phi_n>|^2 <= mu ||h||^2: the largest eigenvalue of the
/// frame operator of the difference system.
double mu_perturbation(const FiniteFrame& phi, const FiniteFrame& psi);

/// Smallest n >= 0 with ratio^(n+1) * scale <= e. Throws ConditionError when
/// ratio >= 1 (divergent series).
int plan_iterations(double ratio, double scale, double e);

/// Reusable first stage of the weighted-frame inversion: the frame operator
/// of (sqrt(|m_n|) phi_n), its inverse, and the constants. Depends only on
/// phi and m, so one precompute serves any number of partner frames.
struct Prop8Precompute {
  FiniteFrame phi;
  Symbol symbol;
  CMat weighted_op;      // S_w
  CMat weighted_op_inv;  // S_w^{-1}
  int sign = 1;          // +1 all-positive symbol, -1 all-negative
  double symbol_min = 0.0;
  double symbol_max = 0.0;
  double lower_phi = 0.0;
  double upper_phi = 0.0;
};

/// Requires a frame and a strictly one-signed real semi-normalized symbol.
Prop8Precompute prop8_precompute(const FiniteFrame& phi, const Symbol& m);

struct InversionResult {
  CMat inverse;
  InversionReport report;
};

/// Neumann-like series around the weighted frame operator:
///   M^{-1} = sign * sum_k [S_w^{-1}(S_w - sign*M)]^k S_w^{-1},
/// admissible when mu < a^2 A^2 / (b^2 B), with the n-term error bounded by
/// (b sqrt(mu B) / (a A))^(n+1) / (a A - b sqrt(mu B)).
InversionResult prop8_invert(const Prop8Precompute& pre,
                             const FiniteFrame& psi, double e,
                             const CMat* oracle = nullptr);

struct VectorInversionResult {
  CVec value;
  InversionReport report;
};

/// Same series applied to a single vector; only matrix-vector products per
/// step.
VectorInversionResult prop8_apply(const Prop8Precompute& pre,
                                  const FiniteFrame& psi, const CVec& f,
                                  double e, const CVec* oracle = nullptr);

struct Prop9Result {
  CMat m_phiphi_inverse;
  CMat inverse;
  InversionReport stage1;
  InversionReport stage2;
};

/// Two-stage series for complex symbols near one: first inverts
/// M_{m,phi,phi} around S_phi (needs lambda < A/B), then M around
/// M_{m,phi,phi} (needs mu < (A - lambda B)^2 / ((lambda+1)^2 B)).
/// Condition violations are reported per stage.
Prop9Result prop9_invert(const FiniteFrame& phi, const Symbol& m,
                         const FiniteFrame& psi, double e,
                         const CMat* stage1_oracle = nullptr,
                         const CMat* oracle = nullptr);

/// Pure power series M^{-1} = sum_k (I - M)^k for a frame and an
/// approximately dual partner. Never factorizes or inverts any full
/// operator; admissible when lambda sqrt(B_phi B_psi) + epsilon < 1 with the
/// n-term error bounded by ratio^(n+1) / (1 - ratio).
InversionResult prop11_invert(const FiniteFrame& phi, const FiniteFrame& psi,
                              const Symbol& m, double e,
                              const CMat* oracle = nullptr);

struct GphiResult {
  CMat inverse_phi_psi;  // M_{m,phi,G phi}^{-1} = (G^{-1})^* M_{m,phi,phi}^{-1}
  CMat inverse_psi_phi;  // M_{m,G phi,phi}^{-1} = M_{m,phi,phi}^{-1} G^{-1}
  InversionReport report;
};

/// Equivalent-frame route: psi_n = G phi_n is formed internally, the shared
/// factor M_{m,phi,phi}^{-1} comes from the weighted-frame identity for
/// one-signed symbols (exact) or from the first stage of the two-stage
/// series otherwise.
GphiResult gphi_invert(const FiniteFrame& phi, const CMat& g, const Symbol& m,
                       double e);

/// Pivoted-elimination oracle with residual refinement. Throws
/// SingularMatrixError when the pivots collapse.
CMat direct_invert(const CMat& m);

}  // namespace framemult
