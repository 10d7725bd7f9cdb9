#pragma once

#include "fluidcomp/scenario.hpp"
#include "fluidcomp/types.hpp"

namespace fluidcomp {

/// Column k holds the channel h_k of user k (N x K).
class ChannelMatrix {
 public:
  ChannelMatrix() = default;
  explicit ChannelMatrix(CMatrix columns) : columns_(std::move(columns)) {}

  Eigen::Index n_antennas() const { return columns_.rows(); }
  Eigen::Index n_users() const { return columns_.cols(); }
  auto column(Eigen::Index k) const { return columns_.col(k); }
  const CMatrix& matrix() const { return columns_; }

 private:
  CMatrix columns_;
};

/// a(x, theta)[n] = exp(j * 2*pi/lambda * x_n * cos(theta)).
CVector steering_vector(const RVector& positions, double angle, double wavelength);

/// h_k = alpha_k * a(x, theta_k). `positions` need not be feasible, which
/// lets finite-difference probes step outside the region.
ChannelMatrix channel_matrix(const Scenario& scenario, const RVector& positions,
                             const SystemConfig& config);
inline ChannelMatrix channel_matrix(const Scenario& scenario, const Apv& positions,
                                    const SystemConfig& config) {
  return channel_matrix(scenario, positions.positions(), config);
}

}  // namespace fluidcomp
