#include "framemult/linalg.hpp"

#include <cmath>

#include "framemult/errors.hpp"

namespace framemult {

namespace {
thread_local std::uint64_t g_solve_count = 0;
}

namespace detail {
void bump_solve_count() { ++g_solve_count; }
}  // namespace detail

std::uint64_t solve_count() { return g_solve_count; }

double spectral_norm(const CMat& a) {
  if (a.size() == 0) return 0.0;
  // Eigenvalues of A^H A are the squared singular values; the gram form is
  // Hermitian so the solver is both fast and accurate at this scale.
  const CMat gram = a.adjoint() * a;
  Eigen::SelfAdjointEigenSolver<CMat> es(gram, Eigen::EigenvaluesOnly);
  const double top = es.eigenvalues().maxCoeff();
  return top > 0.0 ? std::sqrt(top) : 0.0;
}

RVec hermitian_eigenvalues(const CMat& a) {
  Eigen::SelfAdjointEigenSolver<CMat> es(a, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

double spectral_norm_estimate(const CMat& a, CVec* warm, double tol,
                              int max_iter) {
  const Index n = a.cols();
  if (n == 0 || a.rows() == 0) return 0.0;

  CVec v;
  if (warm != nullptr && warm->size() == n && warm->norm() > 0.0) {
    v = *warm / warm->norm();
  } else {
    // Fixed full-support start; no special structure, so it has a component
    // along the top singular space for any matrix met in practice.
    v.resize(n);
    for (Index i = 0; i < n; ++i) {
      const double x = static_cast<double>(i + 1);
      v[i] = cplx(1.0 + 0.25 * std::cos(2.39996322 * x),
                  0.25 * std::sin(1.61803399 * x));
    }
    v /= v.norm();
  }

  double sigma = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    CVec av = a * v;
    const double next = av.norm();
    if (next == 0.0) {
      sigma = 0.0;
      break;
    }
    CVec w = a.adjoint() * av;
    v = w / w.norm();
    if (std::abs(next - sigma) <= tol * next && it >= 2) {
      sigma = next;
      break;
    }
    sigma = next;
  }
  if (warm != nullptr) *warm = v;
  return sigma;
}

CMat hpd_inverse(const CMat& a) {
  detail::bump_solve_count();
  Eigen::LLT<CMat> llt(a);
  if (llt.info() != Eigen::Success) {
    throw SingularMatrixError("matrix is not positive definite");
  }
  return llt.solve(CMat::Identity(a.rows(), a.cols()));
}

}  // namespace framemult
