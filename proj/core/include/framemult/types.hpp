#pragma once

#include <complex>

#include <Eigen/Dense>

namespace framemult {

using cplx = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;
using Index = Eigen::Index;

/// Relative eigenvalue threshold separating frames from rank-deficient
/// systems: a system counts as a frame when A > kFrameTol * B. Scale
/// invariant and close to double precision.
inline constexpr double kFrameTol = 1e-12;

}  // namespace framemult
