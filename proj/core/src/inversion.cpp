#include "framemult/inversion.hpp"

#include <cmath>
#include <sstream>

#include "framemult/linalg.hpp"

namespace framemult {

const char* method_name(InversionMethod m) {
  switch (m) {
    case InversionMethod::kProp8: return "prop8";
    case InversionMethod::kProp8Apply: return "prop8_apply";
    case InversionMethod::kProp9: return "prop9";
    case InversionMethod::kProp11: return "prop11";
    case InversionMethod::kDirect: return "direct";
    case InversionMethod::kGphi: return "gphi";
  }
  return "unknown";
}

namespace {

void append_constant(std::ostringstream& out, const char* name,
                     const std::optional<double>& v) {
  if (v.has_value()) {
    out.precision(17);
    out << ' ' << name << '=' << *v;
  }
}

std::vector<double> geometric_bounds(double ratio, double scale, int n) {
  std::vector<double> bounds(static_cast<std::size_t>(n) + 1);
  double b = scale;
  for (int k = 0; k <= n; ++k) {
    b *= ratio;
    bounds[static_cast<std::size_t>(k)] = b;
  }
  return bounds;
}

// Measured relative distance to the oracle in spectral norm; the power
// iterate is warm-started across a residual sequence.
double relative_residual(const CMat& current, const CMat& oracle,
                         double oracle_norm, CVec* warm) {
  const double abs_err = spectral_norm_estimate(current - oracle, warm);
  return abs_err / oracle_norm;
}

// Shared accumulation kernel of all the matrix series: sums sign * P^k * init
// for k = 0..n, recording relative residuals against the oracle when one is
// supplied. The same loop serves the weighted-frame series and both stages of
// the two-stage variant.
CMat accumulate_series(const CMat& step, const CMat& init, int n, double sign,
                       const CMat* oracle, std::vector<double>* residuals) {
  CMat accum = init;
  double oracle_norm = 0.0;
  CVec warm;
  if (oracle != nullptr) {
    oracle_norm = spectral_norm(*oracle);
    residuals->reserve(static_cast<std::size_t>(n) + 1);
    residuals->push_back(
        relative_residual(sign * accum, *oracle, oracle_norm, &warm));
  }
  if (n > 0) {
    CMat term = init;
    for (int i = 1; i <= n; ++i) {
      term = step * term;
      accum += term;
      if (oracle != nullptr) {
        residuals->push_back(
            relative_residual(sign * accum, *oracle, oracle_norm, &warm));
      }
    }
  }
  return sign * accum;
}

}  // namespace

std::string format_report(const InversionReport& report) {
  std::ostringstream out;
  out << "# method=" << method_name(report.method);
  append_constant(out, "A_phi", report.constants.lower_phi);
  append_constant(out, "B_phi", report.constants.upper_phi);
  append_constant(out, "B_psi", report.constants.upper_psi);
  append_constant(out, "a", report.constants.symbol_min);
  append_constant(out, "b", report.constants.symbol_max);
  append_constant(out, "lambda", report.constants.lambda);
  append_constant(out, "mu", report.constants.mu);
  append_constant(out, "epsilon", report.constants.epsilon);
  out << " n_planned=" << report.n_planned
      << " converged=" << (report.converged ? 1 : 0) << '\n';
  out.precision(17);
  for (std::size_t k = 0; k < report.bounds.size(); ++k) {
    out << k << ',' << report.bounds[k] << ',';
    if (k < report.residuals.size()) out << report.residuals[k];
    out << '\n';
  }
  return out.str();
}

double mu_perturbation(const FiniteFrame& phi, const FiniteFrame& psi) {
  if (phi.dim() != psi.dim() || phi.count() != psi.count()) {
    throw ShapeError("mu_perturbation: frames differ in shape");
  }
  const CMat diff = psi.vectors() - phi.vectors();
  const RVec eigs = hermitian_eigenvalues(diff * diff.adjoint());
  return std::max(eigs.maxCoeff(), 0.0);
}

int plan_iterations(double ratio, double scale, double e) {
  if (!(ratio >= 0.0) || !(scale > 0.0) || !(e > 0.0)) {
    throw ShapeError("plan_iterations: need ratio >= 0, scale > 0, e > 0");
  }
  if (ratio >= 1.0) {
    throw ConditionError("plan_iterations: ratio >= 1, series does not converge");
  }
  if (ratio == 0.0 || ratio * scale <= e) return 0;
  // Closed form, then fix up against the exact recurrence to absorb rounding.
  int n = static_cast<int>(std::ceil(std::log(e / scale) / std::log(ratio))) - 1;
  n = std::max(n, 0);
  while (std::pow(ratio, n + 1) * scale > e) ++n;
  while (n > 0 && std::pow(ratio, n) * scale <= e) --n;
  return n;
}

Prop8Precompute prop8_precompute(const FiniteFrame& phi, const Symbol& m) {
  if (m.size() != phi.count()) {
    throw ShapeError("prop8_precompute: symbol length does not match count");
  }
  if (!is_frame(phi)) throw ConditionError("prop8_precompute: not a frame");
  const SymbolStats& stats = m.stats();
  if (stats.sign == SymbolSign::kMixedOrComplex) {
    throw ConditionError(
        "prop8_precompute: symbol must be strictly positive or strictly "
        "negative real");
  }
  if (stats.has_zero) {
    throw ConditionError("prop8_precompute: symbol must be bounded away from 0");
  }
  Prop8Precompute pre;
  pre.phi = phi;
  pre.symbol = m;
  pre.sign = stats.sign == SymbolSign::kAllPositiveReal ? 1 : -1;
  pre.symbol_min = stats.inf_abs;
  pre.symbol_max = stats.sup_abs;
  pre.lower_phi = phi.bounds().lower;
  pre.upper_phi = phi.bounds().upper;
  const RVec abs_weights = m.values().cwiseAbs();
  pre.weighted_op = frame_operator(weighted_frame(phi, abs_weights));
  pre.weighted_op_inv = hpd_inverse(pre.weighted_op);
  return pre;
}

namespace {

struct Prop8Plan {
  double mu = 0.0;
  double ratio = 0.0;
  double scale = 0.0;
  int n = 0;
};

Prop8Plan prop8_plan(const Prop8Precompute& pre, const FiniteFrame& psi,
                     double e) {
  Prop8Plan plan;
  plan.mu = mu_perturbation(pre.phi, psi);
  const double a = pre.symbol_min;
  const double b = pre.symbol_max;
  const double lower = pre.lower_phi;
  const double upper = pre.upper_phi;
  const double limit = a * a * lower * lower / (b * b * upper);
  if (!(plan.mu < limit)) {
    std::ostringstream msg;
    msg << "prop8: perturbation condition violated: mu=" << plan.mu
        << " >= a^2 A^2 / (b^2 B) = " << limit;
    throw ConditionError(msg.str());
  }
  const double root = b * std::sqrt(plan.mu * upper);
  plan.ratio = root / (a * lower);
  plan.scale = 1.0 / (a * lower - root);
  plan.n = plan_iterations(plan.ratio, plan.scale, e);
  return plan;
}

InversionReport prop8_report(const Prop8Precompute& pre, const Prop8Plan& plan,
                             InversionMethod method) {
  InversionReport report;
  report.method = method;
  report.constants.lower_phi = pre.lower_phi;
  report.constants.upper_phi = pre.upper_phi;
  report.constants.symbol_min = pre.symbol_min;
  report.constants.symbol_max = pre.symbol_max;
  report.constants.mu = plan.mu;
  report.n_planned = plan.n;
  report.bounds = geometric_bounds(plan.ratio, plan.scale, plan.n);
  return report;
}

}  // namespace

InversionResult prop8_invert(const Prop8Precompute& pre,
                             const FiniteFrame& psi, double e,
                             const CMat* oracle) {
  const Prop8Plan plan = prop8_plan(pre, psi, e);
  InversionReport report = prop8_report(pre, plan, InversionMethod::kProp8);

  const double sign = static_cast<double>(pre.sign);
  const MultiplierOp op = build(pre.symbol, pre.phi, psi);
  const CMat step =
      pre.weighted_op_inv * (pre.weighted_op - sign * op.matrix);
  CMat inverse = accumulate_series(step, pre.weighted_op_inv, plan.n, sign,
                                   oracle, &report.residuals);
  report.converged = report.bounds.back() <= e;
  return InversionResult{std::move(inverse), std::move(report)};
}

VectorInversionResult prop8_apply(const Prop8Precompute& pre,
                                  const FiniteFrame& psi, const CVec& f,
                                  double e, const CVec* oracle) {
  if (f.size() != pre.phi.dim()) {
    throw ShapeError("prop8_apply: vector length mismatch");
  }
  const Prop8Plan plan = prop8_plan(pre, psi, e);
  InversionReport report = prop8_report(pre, plan, InversionMethod::kProp8Apply);

  const double sign = static_cast<double>(pre.sign);
  const MultiplierOp op = build(pre.symbol, pre.phi, psi);
  CVec accum = pre.weighted_op_inv * f;

  double oracle_norm = 0.0;
  if (oracle != nullptr) {
    oracle_norm = oracle->norm();
    report.residuals.push_back((sign * accum - *oracle).norm() / oracle_norm);
  }

  if (plan.n > 0) {
    // Vector-only inner loop: two multiplier applications and one solve-free
    // product with the precomputed inverse per step.
    CVec q = accum;
    for (int i = 1; i <= plan.n; ++i) {
      const CVec sq = pre.weighted_op * q;
      const CVec mq = sign * framemult::apply(op, q);
      q = pre.weighted_op_inv * (sq - mq);
      accum += q;
      if (oracle != nullptr) {
        report.residuals.push_back((sign * accum - *oracle).norm() /
                                   oracle_norm);
      }
    }
  }
  report.converged = report.bounds.back() <= e;
  return VectorInversionResult{sign * accum, std::move(report)};
}

Prop9Result prop9_invert(const FiniteFrame& phi, const Symbol& m,
                         const FiniteFrame& psi, double e,
                         const CMat* stage1_oracle, const CMat* oracle) {
  if (m.size() != phi.count()) {
    throw ShapeError("prop9_invert: symbol length does not match count");
  }
  if (phi.dim() != psi.dim() || phi.count() != psi.count()) {
    throw ShapeError("prop9_invert: frames differ in shape");
  }
  if (!is_frame(phi)) throw ConditionError("prop9_invert: phi is not a frame");

  const double lower = phi.bounds().lower;
  const double upper = phi.bounds().upper;
  const double lambda = m.stats().lambda;
  if (!(lambda < lower / upper)) {
    std::ostringstream msg;
    msg << "prop9 stage 1: lambda=" << lambda << " >= A/B = " << lower / upper;
    throw ConditionError(msg.str());
  }

  Prop9Result result;

  // Stage 1: M_{m,phi,phi} around the plain frame operator.
  const double ratio1 = lambda * upper / lower;
  const double scale1 = 1.0 / (lower - lambda * upper);
  const int n1 = plan_iterations(ratio1, scale1, e);
  result.stage1.method = InversionMethod::kProp9;
  result.stage1.constants.lower_phi = lower;
  result.stage1.constants.upper_phi = upper;
  result.stage1.constants.lambda = lambda;
  result.stage1.n_planned = n1;
  result.stage1.bounds = geometric_bounds(ratio1, scale1, n1);

  const CMat s = frame_operator(phi);
  const CMat s_inv = hpd_inverse(s);
  const MultiplierOp op0 = build(m, phi, phi);
  result.m_phiphi_inverse =
      accumulate_series(s_inv * (s - op0.matrix), s_inv, n1, 1.0,
                        stage1_oracle, &result.stage1.residuals);
  result.stage1.converged = result.stage1.bounds.back() <= e;

  // Stage 2: M_{m,phi,psi} around M_{m,phi,phi}.
  const double mu = mu_perturbation(phi, psi);
  const double limit =
      (lower - lambda * upper) * (lower - lambda * upper) /
      ((lambda + 1.0) * (lambda + 1.0) * upper);
  if (!(mu < limit)) {
    std::ostringstream msg;
    msg << "prop9 stage 2: mu=" << mu
        << " >= (A - lambda B)^2 / ((lambda+1)^2 B) = " << limit;
    throw ConditionError(msg.str());
  }
  const double root = (lambda + 1.0) * std::sqrt(mu * upper);
  const double ratio2 = root / (lower - lambda * upper);
  const double scale2 = 1.0 / (lower - lambda * upper - root);
  const int n2 = plan_iterations(ratio2, scale2, e);
  result.stage2.method = InversionMethod::kProp9;
  result.stage2.constants = result.stage1.constants;
  result.stage2.constants.mu = mu;
  result.stage2.n_planned = n2;
  result.stage2.bounds = geometric_bounds(ratio2, scale2, n2);

  const MultiplierOp op = build(m, phi, psi);
  result.inverse = accumulate_series(
      result.m_phiphi_inverse * (op0.matrix - op.matrix),
      result.m_phiphi_inverse, n2, 1.0, oracle, &result.stage2.residuals);
  result.stage2.converged = result.stage2.bounds.back() <= e;
  return result;
}

InversionResult prop11_invert(const FiniteFrame& phi, const FiniteFrame& psi,
                              const Symbol& m, double e, const CMat* oracle) {
  if (m.size() != phi.count()) {
    throw ShapeError("prop11_invert: symbol length does not match count");
  }
  const double upper_phi = phi.bounds().upper;
  const double upper_psi = psi.bounds().upper;
  const double lambda = m.stats().lambda;
  const double eps = is_dual(phi, psi).epsilon;
  const double root_bb = std::sqrt(upper_phi * upper_psi);
  const double ratio = lambda * root_bb + eps;
  if (!(eps < 1.0) || !(ratio < 1.0)) {
    std::ostringstream msg;
    msg << "prop11: condition violated: epsilon=" << eps
        << ", lambda*sqrt(B_phi B_psi)=" << lambda * root_bb
        << ", sum=" << ratio << " (must stay below 1)";
    throw ConditionError(msg.str());
  }
  const double scale = 1.0 / (1.0 - ratio);
  const int n = plan_iterations(ratio, scale, e);

  InversionReport report;
  report.method = InversionMethod::kProp11;
  report.constants.upper_phi = upper_phi;
  report.constants.upper_psi = upper_psi;
  report.constants.lambda = lambda;
  report.constants.epsilon = eps;
  report.n_planned = n;
  report.bounds = geometric_bounds(ratio, scale, n);

  // Pure power series around the identity; no solve, no factorization of
  // anything beyond forming M itself.
  const MultiplierOp op = build(m, phi, psi);
  const Index d = phi.dim();
  CMat inverse = accumulate_series(CMat::Identity(d, d) - op.matrix,
                                   CMat::Identity(d, d), n, 1.0, oracle,
                                   &report.residuals);
  report.converged = report.bounds.back() <= e;
  return InversionResult{std::move(inverse), std::move(report)};
}

GphiResult gphi_invert(const FiniteFrame& phi, const CMat& g, const Symbol& m,
                       double e) {
  if (g.rows() != phi.dim() || g.cols() != phi.dim()) {
    throw ShapeError("gphi_invert: G shape mismatch");
  }
  const Classification g_class = classify_matrix(g);
  if (!g_class.invertible) {
    throw SingularMatrixError("gphi_invert: G is singular");
  }
  if (!is_frame(phi)) throw ConditionError("gphi_invert: phi is not a frame");

  GphiResult result;
  result.report.method = InversionMethod::kGphi;
  result.report.constants.lower_phi = phi.bounds().lower;
  result.report.constants.upper_phi = phi.bounds().upper;

  const SymbolStats& stats = m.stats();
  CMat m0_inv;
  if (stats.sign != SymbolSign::kMixedOrComplex && !stats.has_zero) {
    // One-signed symbol: M_{m,phi,phi} is sign * S_w, inverted exactly.
    const Prop8Precompute pre = prop8_precompute(phi, m);
    m0_inv = static_cast<double>(pre.sign) * pre.weighted_op_inv;
    result.report.constants.symbol_min = stats.inf_abs;
    result.report.constants.symbol_max = stats.sup_abs;
    result.report.constants.mu = 0.0;
    result.report.bounds = {0.0};
    result.report.converged = true;
  } else {
    Prop9Result stage = prop9_invert(phi, m, phi, e);
    m0_inv = std::move(stage.m_phiphi_inverse);
    result.report.constants.lambda = stats.lambda;
    result.report.n_planned = stage.stage1.n_planned;
    result.report.bounds = std::move(stage.stage1.bounds);
    result.report.converged = stage.stage1.converged;
  }

  const CMat g_inv = direct_invert(g);
  result.inverse_phi_psi = g_inv.adjoint() * m0_inv;
  result.inverse_psi_phi = m0_inv * g_inv;
  return result;
}

CMat direct_invert(const CMat& m) {
  if (m.rows() != m.cols()) throw ShapeError("direct_invert: matrix not square");
  detail::bump_solve_count();
  Eigen::PartialPivLU<CMat> lu(m);
  const RVec pivots = lu.matrixLU().diagonal().cwiseAbs();
  const double pmax = pivots.maxCoeff();
  if (pmax == 0.0 || pivots.minCoeff() <= 1e-14 * pmax) {
    throw SingularMatrixError("direct_invert: matrix numerically singular");
  }
  const Index d = m.rows();
  CMat x = lu.solve(CMat::Identity(d, d));
  // One Newton touch-up squares the solve residual; cheap at these sizes.
  for (int pass = 0; pass < 2; ++pass) {
    const CMat r = CMat::Identity(d, d) - m * x;
    if (r.norm() <= 1e-13 * std::sqrt(static_cast<double>(d))) break;
    x = x + x * r;
  }
  return x;
}

}  // namespace framemult
