#include "fluidcomp/solver.hpp"

#include <cmath>

#include "fluidcomp/beamforming.hpp"
#include "fluidcomp/channel.hpp"
#include "fluidcomp/errors.hpp"
#include "fluidcomp/power_alloc.hpp"

namespace fluidcomp {

SolveResult bcd_solve(const Scenario& scenario, const SystemConfig& config,
                      const SolverOptions& options) {
  config.validate();
  if (scenario.n_users() != config.n_users || scenario.angles.size() != config.n_users ||
      scenario.initial_positions.size() != config.n_antennas) {
    throw ShapeError("bcd_solve: scenario does not match the config dimensions");
  }
  const Apv& initial = scenario.initial_positions;
  const int n = config.n_antennas;

  SolveResult result;
  TransceiverState& s = result.state;
  ConvergenceTrace& trace = result.trace;

  s.positions = initial;
  s.beamformer = CVector::Constant(n, Complex(1.0 / std::sqrt(static_cast<double>(n)), 0.0));
  ChannelMatrix channels = channel_matrix(scenario, s.positions, config);
  s.weights = solve_power(s.beamformer, channels, config, power_budget(config, s.positions, initial))
                  .weights;
  s.mse = mse(s.weights, s.beamformer, channels, config);

  auto record_block = [&] {
    if (options.record_blocks) trace.mse_per_block.push_back(s.mse);
  };
  trace.mse_per_round.push_back(s.mse);
  record_block();
  if (options.on_round) options.on_round(0, s);

  for (int round = 1; round <= options.max_rounds; ++round) {
    const double previous = s.mse;

    s.weights =
        solve_power(s.beamformer, channels, config, power_budget(config, s.positions, initial))
            .weights;
    s.mse = mse(s.weights, s.beamformer, channels, config);
    record_block();

    s.beamformer = solve_beamformer(s.weights, channels, config);
    s.mse = mse(s.weights, s.beamformer, channels, config);
    record_block();

    if (options.optimize_positions) {
      PgdReport report = optimize_positions(s, scenario, config, options.positioning);
      s.positions = std::move(report.final_positions);
      channels = channel_matrix(scenario, s.positions, config);
      s.mse = mse(s.weights, s.beamformer, channels, config);
      record_block();
    }

    trace.rounds = round;
    trace.mse_per_round.push_back(s.mse);
    if (options.on_round) options.on_round(round, s);

    if (previous - s.mse <= options.tolerance * previous) {
      trace.converged = true;
      break;
    }
  }
  return result;
}

double evaluate_state(const TransceiverState& state, const Scenario& scenario,
                      const SystemConfig& config) {
  return mse(state.weights, state.beamformer, channel_matrix(scenario, state.positions, config),
             config);
}

}  // namespace fluidcomp
