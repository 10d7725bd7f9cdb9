#pragma once

#include <functional>
#include <vector>

#include "fluidcomp/objective.hpp"
#include "fluidcomp/positioning.hpp"
#include "fluidcomp/scenario.hpp"

namespace fluidcomp {

struct SolverOptions {
  int max_rounds = 50;
  /// Stop once (MSE_prev - MSE) / MSE_prev falls below this.
  double tolerance = 1e-6;
  /// Record the MSE after every block update, not only after each round.
  bool record_blocks = false;
  /// Disabling the positioning block turns the solver into the
  /// fixed-position two-block alternation.
  bool optimize_positions = true;
  PgdOptions positioning;
  /// Called with the round index (0 = initial point) after every round.
  std::function<void(int, const TransceiverState&)> on_round;
};

struct ConvergenceTrace {
  /// Initial MSE followed by one entry per completed round.
  std::vector<double> mse_per_round;
  /// Initial MSE followed by one entry per block update; filled only when
  /// SolverOptions::record_blocks is set.
  std::vector<double> mse_per_block;
  int rounds = 0;
  bool converged = false;
};

struct SolveResult {
  TransceiverState state;
  ConvergenceTrace trace;
};

/// Block coordinate descent: transmit power, then receive beamformer, then
/// antenna positions, repeated until the relative decrease stalls.
/// Starts from x = scenario.initial_positions and m = 1/sqrt(N) * ones.
SolveResult bcd_solve(const Scenario& scenario, const SystemConfig& config,
                      const SolverOptions& options = {});

/// MSE of the state's (w, m, x) under `config`, which may differ from the
/// one the state was designed for.
double evaluate_state(const TransceiverState& state, const Scenario& scenario,
                      const SystemConfig& config);

}  // namespace fluidcomp
