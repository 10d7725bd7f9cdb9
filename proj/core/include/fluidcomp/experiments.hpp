#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fluidcomp/scenario.hpp"
#include "fluidcomp/solver.hpp"

namespace fluidcomp {

enum class SweepAxis { iterations, n_antennas, distortion_level };

enum class Scheme { proposed, fpa, ignore_hwi_ideal, ignore_hwi_mismatched, half_range };

std::string_view to_string(SweepAxis axis);
std::string_view to_string(Scheme scheme);
/// Throw ConfigError on unknown names.
SweepAxis parse_axis(std::string_view name);
Scheme parse_scheme(std::string_view name);

struct SweepSpec {
  SweepAxis axis = SweepAxis::n_antennas;
  /// Iteration indices, antenna counts or distortion levels; sorted ascending.
  std::vector<double> values;
  std::vector<Scheme> schemes;
  std::vector<std::uint64_t> seeds;
  SystemConfig base_config;
  SolverOptions solver;
  /// Worker threads for independent cells; output order does not depend on it.
  int threads = 1;

  /// Throws ConfigError for empty/unsorted values or empty seeds/schemes.
  void validate() const;
};

/// Config used for one axis value. Sweeping n_antennas keeps the ratio
/// region_length / n_antennas of the base config.
SystemConfig config_for_value(const SystemConfig& base, SweepAxis axis, double value);

struct SweepRow {
  SweepAxis axis = SweepAxis::n_antennas;
  double value = 0.0;
  Scheme scheme = Scheme::proposed;
  /// std::nullopt marks the per-(value, scheme) mean row.
  std::optional<std::uint64_t> seed;
  double mse = 0.0;
  double rounds = 0.0;
  double move_energy = 0.0;
  double tx_power = 0.0;
  /// 1/0 for seed rows, converged fraction for mean rows.
  double converged = 0.0;
  /// Set when the cell was infeasible; numeric fields are NaN.
  std::optional<std::string> error;
};

/// Per-seed rows in (value, scheme, seed) order, each (value, scheme) group
/// followed by its mean row. Scenarios are generated once per (value, seed)
/// and shared by all schemes. Infeasible cells become error rows.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

inline constexpr std::string_view kCsvHeader =
    "axis,value,scheme,seed,mse,rounds,move_energy,tx_power,converged";

/// 12 significant digits, '.' separator, LF line endings.
std::string format_number(double value);
void write_csv(std::ostream& out, std::span<const SweepRow> rows);
std::string to_csv(std::span<const SweepRow> rows);

/// Parses a CSV written by write_csv. Throws ConfigError on a header or
/// field mismatch.
std::vector<SweepRow> read_csv(std::istream& in);

/// Checks that a per-seed row respects the power constraints of `config`.
/// Returns an empty string when the row is consistent.
std::string row_violation(const SweepRow& row, const SystemConfig& config);

}  // namespace fluidcomp
