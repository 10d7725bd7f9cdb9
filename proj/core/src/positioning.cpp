#include "fluidcomp/positioning.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "fluidcomp/channel.hpp"
#include "fluidcomp/errors.hpp"

namespace fluidcomp {

namespace {

double mse_at(const RVector& positions, const CVector& weights, const CVector& beamformer,
              const Scenario& scenario, const SystemConfig& config) {
  return mse(weights, beamformer, channel_matrix(scenario, positions, config), config);
}

}  // namespace

RVector finite_diff_gradient(const RVector& positions, const CVector& weights,
                             const CVector& beamformer, const Scenario& scenario,
                             const SystemConfig& config, double fd_step_wavelengths) {
  const double eps = fd_step_wavelengths * config.wavelength;
  const double base = mse_at(positions, weights, beamformer, scenario, config);
  RVector grad(positions.size());
  RVector probe = positions;
  for (Eigen::Index n = 0; n < positions.size(); ++n) {
    probe[n] = positions[n] + eps;
    grad[n] = (mse_at(probe, weights, beamformer, scenario, config) - base) / eps;
    probe[n] = positions[n];
  }
  return grad;
}

Apv project_apv(RVector raw, const SystemConfig& config) {
  const double length = config.region_length;
  const double spacing = config.min_spacing;
  const Eigen::Index n = raw.size();
  if (n > 1 && length * (1.0 + 1e-12) < (n - 1) * spacing) {
    std::ostringstream msg;
    msg << "cannot place " << n << " antennas at spacing " << spacing << " in length " << length;
    throw FeasibilityError(msg.str());
  }

  std::sort(raw.begin(), raw.end());
  raw = raw.cwiseMax(0.0).cwiseMin(length);
  for (Eigen::Index i = 1; i < n; ++i) {
    raw[i] = std::max(raw[i], raw[i - 1] + spacing);
  }
  // The forward pass can overrun the right edge; pull the tail back in.
  if (n > 0 && raw[n - 1] > length) {
    raw[n - 1] = length;
    for (Eigen::Index i = n - 1; i > 0; --i) {
      raw[i - 1] = std::min(raw[i - 1], raw[i] - spacing);
    }
  }
  return Apv::make(std::move(raw), config);
}

PgdReport optimize_positions(const TransceiverState& state, const Scenario& scenario,
                             const SystemConfig& config, const PgdOptions& options) {
  const RVector& initial = scenario.initial_positions.positions();
  const CVector& w = state.weights;
  const CVector& m = state.beamformer;
  RVector x = state.positions.positions();

  if (auto why = Apv::violation(x, config.region_length, config.min_spacing); !why.empty()) {
    throw FeasibilityError("optimize_positions: infeasible start: " + why);
  }
  const double budget = config.total_power - w.squaredNorm();
  auto energy = [&](const RVector& p) { return movement_energy(p, initial, config.move_cost); };
  if (energy(x) > budget + kPowerSlack) {
    throw FeasibilityError("optimize_positions: start exceeds the movement budget");
  }

  const double max_step = options.max_step_wavelengths * config.wavelength;
  double step = options.initial_step_wavelengths * config.wavelength;

  double objective = mse_at(x, w, m, scenario, config);
  RVector grad = finite_diff_gradient(x, w, m, scenario, config, options.fd_step_wavelengths);

  PgdReport report;
  report.mse_trace.push_back(objective);
  for (int iter = 1;; ++iter) {
    RVector candidate = project_apv(x - step * grad, config).positions();
    while (energy(candidate) > budget) {
      step *= 0.5;
      candidate = project_apv(x - step * grad, config).positions();
      if (step < options.min_step) break;
    }

    bool accepted = false;
    if (energy(candidate) <= budget) {
      const double trial = mse_at(candidate, w, m, scenario, config);
      if (trial <= objective - options.armijo * step * grad.squaredNorm()) {
        x = std::move(candidate);
        objective = trial;
        grad = finite_diff_gradient(x, w, m, scenario, config, options.fd_step_wavelengths);
        step = std::min(options.step_growth * step, max_step);
        ++report.accepted_steps;
        accepted = true;
      }
    }
    if (!accepted) step *= 0.5;

    report.mse_trace.push_back(objective);
    report.iterations = iter;
    if (iter >= options.max_iterations || step < options.min_step) break;
  }

  report.final_positions = Apv::make(std::move(x), config);
  report.final_step_size = step;
  return report;
}

}  // namespace fluidcomp
