#include "fluidcomp/beamforming.hpp"

#include <limits>

#include <Eigen/Cholesky>

#include "fluidcomp/errors.hpp"

namespace fluidcomp {

CMatrix receive_covariance(const CVector& weights, const ChannelMatrix& channels,
                           const SystemConfig& config) {
  if (weights.size() != channels.n_users()) {
    throw ShapeError("receive_covariance: weights do not match the channels");
  }
  const double noise = config.noise_power;
  const double beta2 = config.distortion_level * config.distortion_level;

  // S = H diag(|w|^2) H^H
  const CMatrix scaled = channels.matrix() * weights.cwiseAbs().asDiagonal();
  CMatrix r = scaled * scaled.adjoint();
  const RVector signal_diag = r.diagonal().real();
  r.diagonal().array() += (1.0 + beta2) * noise + beta2 * signal_diag.array();
  return r;
}

CVector solve_beamformer(const CVector& weights, const ChannelMatrix& channels,
                         const SystemConfig& config) {
  const CMatrix r = receive_covariance(weights, channels, config);
  const CVector rhs = channels.matrix() * weights;
  const Eigen::LLT<CMatrix> llt(r);
  const double rcond_floor = std::numeric_limits<double>::epsilon() * static_cast<double>(r.rows());
  if (llt.info() != Eigen::Success || !(llt.rcond() > rcond_floor)) {
    throw SingularityError("solve_beamformer: receive covariance is not positive definite");
  }
  return llt.solve(rhs);
}

}  // namespace fluidcomp
