#pragma once

#include <cstdint>
#include <memory>

#include "framemult/errors.hpp"
#include "framemult/types.hpp"

namespace framemult {

/// Optimal frame bounds: lower = smallest and upper = largest eigenvalue of
/// the frame operator. In finite dimension these are tight.
struct FrameBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// A finite sequence of N vectors in C^d, stored as the d x N synthesis
/// matrix (column n is the n-th vector). Immutable after construction;
/// frame bounds are computed on first use and cached, copies share the
/// cache.
class FiniteFrame {
 public:
  FiniteFrame();
  explicit FiniteFrame(CMat vectors);

  Index dim() const { return vectors_.rows(); }
  Index count() const { return vectors_.cols(); }
  const CMat& vectors() const { return vectors_; }

  /// Cached optimal bounds (eigendecomposition of the frame operator).
  FrameBounds bounds() const;

 private:
  CMat vectors_;
  struct BoundsCache;
  std::shared_ptr<BoundsCache> cache_;
};

enum class SymbolSign {
  kAllPositiveReal,
  kAllNegativeReal,
  kMixedOrComplex,
};

struct SymbolStats {
  double inf_abs = 0.0;  // a = min |m_n|
  double sup_abs = 0.0;  // b = max |m_n|
  double lambda = 0.0;   // max |m_n - 1|
  SymbolSign sign = SymbolSign::kMixedOrComplex;
  bool has_zero = true;  // equivalent to inf_abs == 0
};

/// A complex weight sequence together with its derived statistics.
class Symbol {
 public:
  Symbol();
  explicit Symbol(CVec values);
  static Symbol constant(Index n, cplx value);
  static Symbol ones(Index n);

  Index size() const { return values_.size(); }
  const CVec& values() const { return values_; }
  const SymbolStats& stats() const { return stats_; }

  Symbol conjugated() const;
  /// Entrywise 1/m_n; throws ConditionError when the symbol has a zero.
  Symbol reciprocal() const;

 private:
  CVec values_;
  SymbolStats stats_;
};

/// Exact statistics of a weight sequence. The sign classes require strictly
/// real entries (zero imaginary part) of one strict sign; anything else,
/// including zeros, classifies as mixed/complex.
SymbolStats symbol_stats(const CVec& values);

/// Analysis coefficients (<f, phi_n>)_n, inner product conjugate-linear in
/// the second argument.
CVec analysis(const FiniteFrame& frame, const CVec& f);

/// Synthesis sum_n c_n phi_n.
CVec synthesis(const FiniteFrame& frame, const CVec& coefficients);

/// Frame operator S = T T^H as a dense d x d matrix.
CMat frame_operator(const FiniteFrame& frame);

FrameBounds frame_bounds(const FiniteFrame& frame);

/// True when lower > tol_frame * upper.
bool is_frame(const FiniteFrame& frame, double tol_frame = kFrameTol);

/// Canonical dual (S^{-1} phi_n)_n. Throws ConditionError when not a frame.
FiniteFrame canonical_dual(const FiniteFrame& frame);

/// Parseval-ization (S^{-1/2} phi_n)_n via Hermitian eigendecomposition.
FiniteFrame canonical_tight(const FiniteFrame& frame);

struct DualityCheck {
  bool is_dual = false;
  double epsilon = 0.0;  // spectral norm of T_candidate U_frame - I
};

/// epsilon < 1 certifies an approximately dual pair; epsilon <= tol makes
/// the boolean true.
DualityCheck is_dual(const FiniteFrame& frame, const FiniteFrame& candidate,
                     double tol = 1e-10);

struct ApproximateDual {
  FiniteFrame frame;
  double epsilon = 0.0;  // measured via is_dual
};

/// Truncated frame-algorithm series with relaxation 2/(A+B):
/// psi_n = (2/(A+B)) sum_{k<=order} (I - 2S/(A+B))^k phi_n.
/// Guarantees epsilon <= ((B-A)/(B+A))^(order+1).
ApproximateDual approximate_dual(const FiniteFrame& frame, int order);

/// Columns sqrt(w_n) phi_n. Weights must be nonnegative.
FiniteFrame weighted_frame(const FiniteFrame& frame, const RVec& weights);

/// Columns m_n phi_n.
FiniteFrame scaled_frame(const FiniteFrame& frame, const Symbol& m);

/// Equivalence of frames (psi_n = G phi_n for an invertible G), decided by
/// comparing the orthogonal projections onto the coefficient-space kernels
/// of the two synthesis operators.
bool frames_equivalent(const FiniteFrame& phi, const FiniteFrame& psi,
                       double tol = 1e-8);

/// Seeded standard complex Gaussian columns, redrawn until the frame
/// predicate holds. Deterministic in the seed.
FiniteFrame random_frame(Index dim, Index count, std::uint64_t seed);

}  // namespace framemult
