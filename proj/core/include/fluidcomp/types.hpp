#pragma once

#include <complex>

#include <Eigen/Core>

namespace fluidcomp {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;
using CMatrix = Eigen::MatrixXcd;

/// Absolute slack allowed on power/energy constraint checks.
inline constexpr double kPowerSlack = 1e-9;

}  // namespace fluidcomp
