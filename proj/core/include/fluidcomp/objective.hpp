#pragma once

#include "fluidcomp/channel.hpp"
#include "fluidcomp/scenario.hpp"
#include "fluidcomp/types.hpp"

namespace fluidcomp {

/// Decision variables (w, m, x) with the MSE they evaluate to.
struct TransceiverState {
  CVector weights;
  CVector beamformer;
  Apv positions;
  double mse = 0.0;
};

/// Aggregation MSE with receiver distortion:
///   sum_k |m^H h_k w_k - 1|^2 + sigma^2 |m|^2
///     + beta^2 m^H diag(sum_k |w_k|^2 |h_k|^2 + sigma^2) m.
double mse(const CVector& weights, const CVector& beamformer, const ChannelMatrix& channels,
           const SystemConfig& config);

/// sum_n xi * |x_n - x_init_n|.
double movement_energy(const RVector& positions, const RVector& initial, double move_cost);
inline double movement_energy(const Apv& positions, const Apv& initial, double move_cost) {
  return movement_energy(positions.positions(), initial.positions(), move_cost);
}

/// P_total minus movement energy. Throws BudgetError if movement alone
/// exceeds the total (beyond kPowerSlack); tiny negative values clamp to 0.
double power_budget(const SystemConfig& config, const Apv& positions, const Apv& initial);

/// Throws if the state violates per-user caps, the joint energy constraint
/// or the position invariants.
void check_feasible(const TransceiverState& state, const Apv& initial, const SystemConfig& config);

}  // namespace fluidcomp
