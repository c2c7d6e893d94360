#pragma once

#include <cstdint>

#include "framemult/types.hpp"

namespace framemult {

/// Largest singular value, computed from the Hermitian eigendecomposition of
/// A^H A. Exact up to the eigensolver; used for all bound-grade constants.
double spectral_norm(const CMat& a);

/// Power-iteration estimate of the largest singular value. Deterministic
/// start vector; `warm`, when given, carries the iterate across calls so
/// sequences of slowly varying matrices converge in a handful of steps.
/// Used for per-iteration residual tracking where an eigensolver per step
/// would dominate the run time.
double spectral_norm_estimate(const CMat& a, CVec* warm = nullptr,
                              double tol = 1e-11, int max_iter = 500);

/// Eigenvalues of a Hermitian matrix, ascending order.
RVec hermitian_eigenvalues(const CMat& a);

/// Inverse of a Hermitian positive definite matrix via Cholesky.
/// Counts towards solve_count().
CMat hpd_inverse(const CMat& a);

/// Number of full-matrix factorizations used for solving/inverting on this
/// thread. Instrumentation for methods that promise to avoid them.
std::uint64_t solve_count();

namespace detail {
void bump_solve_count();
}

}  // namespace framemult
