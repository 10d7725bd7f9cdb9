#include "fluidcomp/scenario.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "fluidcomp/errors.hpp"

namespace fluidcomp {

namespace {

// Relative slack on geometric checks so that projections computed in
// floating point still validate.
double geometry_slack(double region_length) { return 1e-12 * std::max(1.0, region_length); }

// 53-bit uniform double in [0, 1) from the raw generator output, so draws do
// not depend on the standard library's distribution implementations.
double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

SystemConfig SystemConfig::with_defaults(int n_antennas, int n_users, double wavelength) {
  SystemConfig config;
  config.n_antennas = n_antennas;
  config.n_users = n_users;
  config.wavelength = wavelength;
  config.region_length = n_antennas * wavelength;
  config.min_spacing = 0.5 * wavelength;
  config.total_power = n_users * config.per_user_power;
  return config;
}

void SystemConfig::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw ConfigError(what);
  };
  require(n_antennas > 0, "n_antennas must be positive");
  require(n_users > 0, "n_users must be positive");
  require(std::isfinite(wavelength) && wavelength > 0, "wavelength must be positive");
  require(std::isfinite(region_length) && region_length > 0, "region_length must be positive");
  require(std::isfinite(min_spacing) && min_spacing >= 0, "min_spacing must be nonnegative");
  require(std::isfinite(noise_power) && noise_power > 0, "noise_power must be positive");
  require(std::isfinite(distortion_level) && distortion_level >= 0,
          "distortion_level must be nonnegative");
  require(std::isfinite(move_cost) && move_cost >= 0, "move_cost must be nonnegative");
  require(std::isfinite(per_user_power) && per_user_power > 0, "per_user_power must be positive");
  require(std::isfinite(total_power) && total_power > 0, "total_power must be positive");

  if (region_length + geometry_slack(region_length) < (n_antennas - 1) * min_spacing) {
    std::ostringstream msg;
    msg << "region_length " << region_length << " cannot hold " << n_antennas
        << " antennas at spacing " << min_spacing;
    throw FeasibilityError(msg.str());
  }
}

std::string Apv::violation(const RVector& positions, double region_length, double min_spacing) {
  const double slack = geometry_slack(region_length);
  std::ostringstream msg;
  for (Eigen::Index n = 0; n < positions.size(); ++n) {
    if (!std::isfinite(positions[n])) {
      msg << "position " << n << " is not finite";
      return msg.str();
    }
  }
  if (positions.size() == 0) return {};
  if (positions[0] < -slack) {
    msg << "x_1 = " << positions[0] << " < 0";
    return msg.str();
  }
  if (positions[positions.size() - 1] > region_length + slack) {
    msg << "x_N = " << positions[positions.size() - 1] << " > L = " << region_length;
    return msg.str();
  }
  for (Eigen::Index n = 1; n < positions.size(); ++n) {
    if (positions[n] - positions[n - 1] < min_spacing - slack) {
      msg << "spacing x_" << n + 1 << " - x_" << n << " = " << positions[n] - positions[n - 1]
          << " < L0 = " << min_spacing;
      return msg.str();
    }
  }
  return {};
}

Apv Apv::make(RVector positions, double region_length, double min_spacing) {
  if (auto why = violation(positions, region_length, min_spacing); !why.empty()) {
    throw FeasibilityError("infeasible APV: " + why);
  }
  return Apv(std::move(positions));
}

Apv uniform_apv(const SystemConfig& config) {
  const int n = config.n_antennas;
  const double pitch = config.region_length / n;
  if (n > 1 && pitch < config.min_spacing * (1.0 - 1e-12)) {
    std::ostringstream msg;
    msg << "uniform grid pitch L/N = " << pitch << " is below L0 = " << config.min_spacing;
    throw FeasibilityError(msg.str());
  }
  RVector x(n);
  for (int i = 0; i < n; ++i) x[i] = config.region_length * i / n;
  return Apv::make(std::move(x), config);
}

Scenario generate_scenario(const SystemConfig& config, std::uint64_t seed) {
  config.validate();
  std::mt19937_64 rng(seed);
  Scenario scenario;
  scenario.gains.resize(config.n_users);
  scenario.angles.resize(config.n_users);
  for (int k = 0; k < config.n_users; ++k) {
    const double angle = std::numbers::pi * unit_uniform(rng);
    const double magnitude = std::pow(10.0, -1.0 + unit_uniform(rng));
    const double phase = 2.0 * std::numbers::pi * unit_uniform(rng);
    scenario.angles[k] = angle;
    scenario.gains[k] = std::polar(magnitude, phase);
  }
  scenario.initial_positions = uniform_apv(config);
  return scenario;
}

}  // namespace fluidcomp
