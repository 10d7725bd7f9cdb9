#pragma once

#include "fluidcomp/solver.hpp"

namespace fluidcomp {

/// Fixed-position array: x pinned to the uniform grid, alternating power
/// and beamformer updates until convergence.
SolveResult solve_fpa(const Scenario& scenario, const SystemConfig& config,
                      const SolverOptions& options = {});

struct IgnoreHwiResult {
  TransceiverState state;
  ConvergenceTrace trace;
  /// Final MSE of the beta = 0 design evaluated at beta = 0.
  double ideal_mse = 0.0;
  /// The same design evaluated under the true distortion level.
  double mismatched_mse = 0.0;
};

/// Designs the transceiver and APV as if beta were zero.
IgnoreHwiResult solve_ignore_hwi(const Scenario& scenario, const SystemConfig& config,
                                 const SolverOptions& options = {});

/// `config` with the movement region halved.
SystemConfig half_range_config(const SystemConfig& config);

/// Full solver on half the movement region, with the initial grid
/// recomputed for L/2.
SolveResult solve_half_range(const Scenario& scenario, const SystemConfig& config,
                             const SolverOptions& options = {});

}  // namespace fluidcomp
