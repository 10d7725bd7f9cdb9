#include "fluidcomp/objective.hpp"

#include <cmath>
#include <sstream>

#include "fluidcomp/errors.hpp"

namespace fluidcomp {

double mse(const CVector& weights, const CVector& beamformer, const ChannelMatrix& channels,
           const SystemConfig& config) {
  const Eigen::Index n = channels.n_antennas();
  const Eigen::Index k_users = channels.n_users();
  if (weights.size() != k_users || beamformer.size() != n) {
    throw ShapeError("mse: weights/beamformer do not match the channel matrix");
  }
  const double noise = config.noise_power;
  const double beta2 = config.distortion_level * config.distortion_level;

  double alignment = 0.0;
  for (Eigen::Index k = 0; k < k_users; ++k) {
    alignment += std::norm(beamformer.dot(channels.column(k)) * weights[k] - 1.0);
  }

  // diag(sum_k |w_k|^2 h_k h_k^H + sigma^2 I)
  const RVector received_power =
      channels.matrix().cwiseAbs2() * weights.cwiseAbs2() + RVector::Constant(n, noise);
  const RVector combiner_power = beamformer.cwiseAbs2();

  return alignment + noise * combiner_power.sum() + beta2 * combiner_power.dot(received_power);
}

double movement_energy(const RVector& positions, const RVector& initial, double move_cost) {
  if (positions.size() != initial.size()) {
    throw ShapeError("movement_energy: position vectors differ in length");
  }
  return move_cost * (positions - initial).cwiseAbs().sum();
}

double power_budget(const SystemConfig& config, const Apv& positions, const Apv& initial) {
  const double moved = movement_energy(positions, initial, config.move_cost);
  const double budget = config.total_power - moved;
  if (budget < -kPowerSlack) {
    std::ostringstream msg;
    msg << "movement energy " << moved << " exceeds total power " << config.total_power;
    throw BudgetError(msg.str());
  }
  return std::max(budget, 0.0);
}

void check_feasible(const TransceiverState& state, const Apv& initial, const SystemConfig& config) {
  if (state.weights.size() != config.n_users || state.beamformer.size() != config.n_antennas ||
      state.positions.size() != config.n_antennas) {
    throw ShapeError("state dimensions do not match the config");
  }
  if (auto why = Apv::violation(state.positions.positions(), config.region_length,
                                config.min_spacing);
      !why.empty()) {
    throw FeasibilityError("infeasible APV: " + why);
  }
  const RVector powers = state.weights.cwiseAbs2();
  for (Eigen::Index k = 0; k < powers.size(); ++k) {
    if (powers[k] > config.per_user_power + kPowerSlack) {
      std::ostringstream msg;
      msg << "user " << k << " power " << powers[k] << " exceeds cap " << config.per_user_power;
      throw BudgetError(msg.str());
    }
  }
  const double used = powers.sum() + movement_energy(state.positions, initial, config.move_cost);
  if (used > config.total_power + kPowerSlack) {
    std::ostringstream msg;
    msg << "transmit plus movement energy " << used << " exceeds total " << config.total_power;
    throw BudgetError(msg.str());
  }
}

}  // namespace fluidcomp
