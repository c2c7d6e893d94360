#include "framemult/frames.hpp"

#include <cmath>
#include <mutex>
#include <random>

#include "framemult/linalg.hpp"

namespace framemult {

struct FiniteFrame::BoundsCache {
  std::once_flag flag;
  FrameBounds value;
};

FiniteFrame::FiniteFrame() : cache_(std::make_shared<BoundsCache>()) {}

FiniteFrame::FiniteFrame(CMat vectors)
    : vectors_(std::move(vectors)), cache_(std::make_shared<BoundsCache>()) {
  if (vectors_.rows() < 1 || vectors_.cols() < 1) {
    throw ShapeError("frame needs at least one vector of dimension >= 1");
  }
}

FrameBounds FiniteFrame::bounds() const {
  std::call_once(cache_->flag, [this] {
    const RVec eigs = hermitian_eigenvalues(vectors_ * vectors_.adjoint());
    cache_->value.lower = std::max(eigs.minCoeff(), 0.0);
    cache_->value.upper = std::max(eigs.maxCoeff(), 0.0);
  });
  return cache_->value;
}

Symbol::Symbol() = default;

Symbol::Symbol(CVec values) : values_(std::move(values)) {
  if (values_.size() < 1) throw ShapeError("symbol must not be empty");
  stats_ = symbol_stats(values_);
}

Symbol Symbol::constant(Index n, cplx value) {
  return Symbol(CVec::Constant(n, value));
}

Symbol Symbol::ones(Index n) { return constant(n, cplx(1.0, 0.0)); }

Symbol Symbol::conjugated() const { return Symbol(values_.conjugate()); }

Symbol Symbol::reciprocal() const {
  if (stats_.has_zero) {
    throw ConditionError("symbol has a zero entry, reciprocal undefined");
  }
  return Symbol(values_.cwiseInverse());
}

SymbolStats symbol_stats(const CVec& values) {
  SymbolStats s;
  s.inf_abs = std::abs(values[0]);
  s.sup_abs = s.inf_abs;
  s.lambda = std::abs(values[0] - cplx(1.0, 0.0));
  bool all_pos = true;
  bool all_neg = true;
  for (Index i = 0; i < values.size(); ++i) {
    const cplx v = values[i];
    const double av = std::abs(v);
    s.inf_abs = std::min(s.inf_abs, av);
    s.sup_abs = std::max(s.sup_abs, av);
    s.lambda = std::max(s.lambda, std::abs(v - cplx(1.0, 0.0)));
    const bool real = v.imag() == 0.0;
    all_pos = all_pos && real && v.real() > 0.0;
    all_neg = all_neg && real && v.real() < 0.0;
  }
  s.has_zero = s.inf_abs == 0.0;
  s.sign = all_pos ? SymbolSign::kAllPositiveReal
           : all_neg ? SymbolSign::kAllNegativeReal
                     : SymbolSign::kMixedOrComplex;
  return s;
}

CVec analysis(const FiniteFrame& frame, const CVec& f) {
  if (f.size() != frame.dim()) {
    throw ShapeError("analysis: vector length does not match frame dimension");
  }
  return frame.vectors().adjoint() * f;
}

CVec synthesis(const FiniteFrame& frame, const CVec& coefficients) {
  if (coefficients.size() != frame.count()) {
    throw ShapeError("synthesis: coefficient length does not match frame count");
  }
  return frame.vectors() * coefficients;
}

CMat frame_operator(const FiniteFrame& frame) {
  return frame.vectors() * frame.vectors().adjoint();
}

FrameBounds frame_bounds(const FiniteFrame& frame) { return frame.bounds(); }

bool is_frame(const FiniteFrame& frame, double tol_frame) {
  const FrameBounds b = frame.bounds();
  return b.lower > tol_frame * b.upper;
}

namespace {

void require_frame(const FiniteFrame& frame, const char* who) {
  if (!is_frame(frame)) {
    throw ConditionError(std::string(who) + ": input is not a frame");
  }
}

}  // namespace

FiniteFrame canonical_dual(const FiniteFrame& frame) {
  require_frame(frame, "canonical_dual");
  const CMat s_inv = hpd_inverse(frame_operator(frame));
  return FiniteFrame(s_inv * frame.vectors());
}

FiniteFrame canonical_tight(const FiniteFrame& frame) {
  require_frame(frame, "canonical_tight");
  Eigen::SelfAdjointEigenSolver<CMat> es(frame_operator(frame));
  const RVec inv_sqrt = es.eigenvalues().cwiseMax(0.0).cwiseSqrt().cwiseInverse();
  const CMat s_inv_sqrt = es.eigenvectors() * inv_sqrt.asDiagonal() *
                          es.eigenvectors().adjoint();
  return FiniteFrame(s_inv_sqrt * frame.vectors());
}

DualityCheck is_dual(const FiniteFrame& frame, const FiniteFrame& candidate,
                     double tol) {
  if (frame.dim() != candidate.dim() || frame.count() != candidate.count()) {
    throw ShapeError("is_dual: frames differ in shape");
  }
  const Index d = frame.dim();
  const CMat composition =
      candidate.vectors() * frame.vectors().adjoint() - CMat::Identity(d, d);
  const double eps = spectral_norm(composition);
  return DualityCheck{eps <= tol, eps};
}

ApproximateDual approximate_dual(const FiniteFrame& frame, int order) {
  require_frame(frame, "approximate_dual");
  if (order < 0) throw ShapeError("approximate_dual: order must be >= 0");
  const FrameBounds b = frame.bounds();
  const double relax = 2.0 / (b.lower + b.upper);
  const Index d = frame.dim();
  const CMat residual = CMat::Identity(d, d) - relax * frame_operator(frame);
  CMat series = CMat::Identity(d, d);
  CMat power = CMat::Identity(d, d);
  for (int k = 1; k <= order; ++k) {
    power = residual * power;
    series += power;
  }
  FiniteFrame dual(relax * (series * frame.vectors()));
  const double eps = is_dual(frame, dual).epsilon;
  return ApproximateDual{std::move(dual), eps};
}

FiniteFrame weighted_frame(const FiniteFrame& frame, const RVec& weights) {
  if (weights.size() != frame.count()) {
    throw ShapeError("weighted_frame: weight length does not match count");
  }
  if ((weights.array() < 0.0).any()) {
    throw ConditionError("weighted_frame: weights must be nonnegative");
  }
  return FiniteFrame(frame.vectors() *
                     weights.cwiseSqrt().asDiagonal());
}

FiniteFrame scaled_frame(const FiniteFrame& frame, const Symbol& m) {
  if (m.size() != frame.count()) {
    throw ShapeError("scaled_frame: symbol length does not match count");
  }
  return FiniteFrame(frame.vectors() * m.values().asDiagonal());
}

bool frames_equivalent(const FiniteFrame& phi, const FiniteFrame& psi,
                       double tol) {
  if (phi.dim() != psi.dim() || phi.count() != psi.count()) {
    throw ShapeError("frames_equivalent: frames differ in shape");
  }
  require_frame(phi, "frames_equivalent");
  require_frame(psi, "frames_equivalent");
  // Psi = G Phi with invertible G iff the synthesis operators share their
  // coefficient-space kernel. Both inputs are frames (rank d), so the kernel
  // projector is I - V V^H over the d leading right singular vectors.
  const auto kernel_projector = [](const FiniteFrame& f) {
    Eigen::JacobiSVD<CMat> svd(f.vectors(), Eigen::ComputeFullV);
    const Index rank = f.dim();
    const CMat v = svd.matrixV().leftCols(rank);
    return CMat(CMat::Identity(f.count(), f.count()) - v * v.adjoint());
  };
  const CMat diff = kernel_projector(phi) - kernel_projector(psi);
  return spectral_norm(diff) <= tol;
}

FiniteFrame random_frame(Index dim, Index count, std::uint64_t seed) {
  if (count < dim || dim < 1) {
    throw ShapeError("random_frame: need count >= dim >= 1");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double root_half = std::sqrt(0.5);
  for (;;) {
    CMat m(dim, count);
    for (Index j = 0; j < count; ++j) {
      for (Index i = 0; i < dim; ++i) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        m(i, j) = cplx(re * root_half, im * root_half);
      }
    }
    FiniteFrame frame(std::move(m));
    if (is_frame(frame)) return frame;
  }
}

}  // namespace framemult
