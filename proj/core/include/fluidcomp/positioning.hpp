#pragma once

#include <vector>

#include "fluidcomp/objective.hpp"
#include "fluidcomp/scenario.hpp"
#include "fluidcomp/types.hpp"

namespace fluidcomp {

/// Tunables of the projected gradient positioner. Lengths expressed in
/// wavelengths are scaled by SystemConfig::wavelength at run time.
struct PgdOptions {
  int max_iterations = 30;
  double initial_step_wavelengths = 0.7;
  double max_step_wavelengths = 0.7;
  double min_step = 1e-6;
  double armijo = 1e-3;
  double step_growth = 1.2;
  double fd_step_wavelengths = 1e-4;
};

struct PgdReport {
  Apv final_positions;
  int iterations = 0;
  int accepted_steps = 0;
  double final_step_size = 0.0;
  /// Objective before the first step, then one entry per iteration; a
  /// rejected step repeats the previous value.
  std::vector<double> mse_trace;
};

/// Forward difference g_n = [MSE(x + eps e_n) - MSE(x)] / eps, rebuilding
/// the channels at each perturbed position. eps = fd_step_wavelengths * lambda.
RVector finite_diff_gradient(const RVector& positions, const CVector& weights,
                             const CVector& beamformer, const Scenario& scenario,
                             const SystemConfig& config, double fd_step_wavelengths = 1e-4);

/// Sort, clamp to [0, L], then enforce x_i >= x_{i-1} + L0 left to right.
/// If that pushes x_N past L, pin x_N = L and sweep right to left with
/// x_{i-1} <= x_i - L0. Throws FeasibilityError if L < (N-1) L0.
Apv project_apv(RVector raw, const SystemConfig& config);

/// Projected gradient descent over the APV with w and m held fixed.
/// Movement is measured against scenario.initial_positions and must stay
/// within P_total - sum_k |w_k|^2.
PgdReport optimize_positions(const TransceiverState& state, const Scenario& scenario,
                             const SystemConfig& config, const PgdOptions& options = {});

}  // namespace fluidcomp
