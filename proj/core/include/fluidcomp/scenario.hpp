#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "fluidcomp/types.hpp"

namespace fluidcomp {

/// Scalar parameters of the uplink system. Units: meters for lengths,
/// watts for powers, energy per meter for move_cost.
struct SystemConfig {
  int n_antennas = 10;
  int n_users = 10;
  double wavelength = 1.0;
  double region_length = 10.0;
  double min_spacing = 0.5;
  double noise_power = 0.01;
  double distortion_level = 0.8;
  double move_cost = 0.8;
  double per_user_power = 1.0;
  double total_power = 10.0;

  /// Defaults used throughout the simulations: L = N*lambda, L0 = lambda/2,
  /// P_total = K * P_0.
  static SystemConfig with_defaults(int n_antennas, int n_users, double wavelength = 1.0);

  /// Throws ConfigError for non-positive or negative fields and
  /// FeasibilityError when region_length < (n_antennas - 1) * min_spacing.
  void validate() const;
};

/// Ordered antenna position vector. Instances built through `make` always
/// satisfy 0 <= x_1, x_N <= L and x_n - x_{n-1} >= L0.
class Apv {
 public:
  Apv() = default;

  static Apv make(RVector positions, double region_length, double min_spacing);
  static Apv make(RVector positions, const SystemConfig& config) {
    return make(std::move(positions), config.region_length, config.min_spacing);
  }

  /// Checks the invariants without constructing; returns an empty string when
  /// feasible, otherwise a description of the first violation.
  static std::string violation(const RVector& positions, double region_length, double min_spacing);

  const RVector& positions() const { return positions_; }
  Eigen::Index size() const { return positions_.size(); }
  double operator[](Eigen::Index n) const { return positions_[n]; }

 private:
  explicit Apv(RVector positions) : positions_(std::move(positions)) {}
  RVector positions_;
};

/// Per-user LOS parameters plus the pre-movement array layout.
struct Scenario {
  CVector gains;
  RVector angles;
  Apv initial_positions;

  int n_users() const { return static_cast<int>(gains.size()); }
};

/// Returns [0, L/N, ..., (N-1)L/N]. Throws FeasibilityError when L/N < L0.
Apv uniform_apv(const SystemConfig& config);

/// Draws angles uniformly in [0, pi), gain magnitudes log-uniformly in
/// [0.1, 1] and phases uniformly in [0, 2*pi) from a std::mt19937_64 seeded
/// with `seed`. Users are drawn in order so that the first K' users of a
/// K-user scenario match a K'-user scenario with the same seed.
Scenario generate_scenario(const SystemConfig& config, std::uint64_t seed);

/// Config file contents: the system parameters plus the base seed.
struct LoadedConfig {
  SystemConfig config;
  std::uint64_t seed = 1;
};

/// Parses a flat `key = value` file. Blank lines and `#` comments are
/// ignored. Missing keys take their defaults; region_length, min_spacing and
/// total_power default relative to the parsed n_antennas, wavelength,
/// n_users and per_user_power. Unknown or repeated keys are a ConfigError.
/// The result is validated before returning.
LoadedConfig parse_config(std::string_view text);
LoadedConfig load_config(const std::filesystem::path& path);

}  // namespace fluidcomp
