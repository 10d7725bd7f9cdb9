#include "fluidcomp/baselines.hpp"

namespace fluidcomp {

SolveResult solve_fpa(const Scenario& scenario, const SystemConfig& config,
                      const SolverOptions& options) {
  Scenario fixed = scenario;
  fixed.initial_positions = uniform_apv(config);
  SolverOptions two_block = options;
  two_block.optimize_positions = false;
  return bcd_solve(fixed, config, two_block);
}

IgnoreHwiResult solve_ignore_hwi(const Scenario& scenario, const SystemConfig& config,
                                 const SolverOptions& options) {
  SystemConfig ideal = config;
  ideal.distortion_level = 0.0;
  SolveResult design = bcd_solve(scenario, ideal, options);

  IgnoreHwiResult out;
  out.ideal_mse = design.state.mse;
  out.mismatched_mse = evaluate_state(design.state, scenario, config);
  out.state = std::move(design.state);
  out.trace = std::move(design.trace);
  return out;
}

SystemConfig half_range_config(const SystemConfig& config) {
  SystemConfig half = config;
  half.region_length = 0.5 * config.region_length;
  return half;
}

SolveResult solve_half_range(const Scenario& scenario, const SystemConfig& config,
                             const SolverOptions& options) {
  const SystemConfig half = half_range_config(config);
  half.validate();
  Scenario shrunk = scenario;
  shrunk.initial_positions = uniform_apv(half);
  return bcd_solve(shrunk, half, options);
}

}  // namespace fluidcomp
