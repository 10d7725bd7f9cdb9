#include "fluidcomp/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <thread>

#include "fluidcomp/baselines.hpp"
#include "fluidcomp/errors.hpp"
#include "fluidcomp/objective.hpp"

namespace fluidcomp {

namespace {

constexpr std::pair<SweepAxis, std::string_view> kAxisNames[] = {
    {SweepAxis::iterations, "iterations"},
    {SweepAxis::n_antennas, "n_antennas"},
    {SweepAxis::distortion_level, "distortion_level"},
};

constexpr std::pair<Scheme, std::string_view> kSchemeNames[] = {
    {Scheme::proposed, "proposed"},
    {Scheme::fpa, "fpa"},
    {Scheme::ignore_hwi_ideal, "ignore_hwi_ideal"},
    {Scheme::ignore_hwi_mismatched, "ignore_hwi_mismatched"},
    {Scheme::half_range, "half_range"},
};

// Per-round record of one (scheme, scenario) solve.
struct Outcome {
  std::vector<double> mse;
  std::vector<double> move_energy;
  std::vector<double> tx_power;
  int rounds = 0;
  bool converged = false;
  std::optional<std::string> error;
};

Outcome run_scheme(Scheme scheme, const Scenario& scenario, const SystemConfig& config,
                   const SolverOptions& base_options) {
  Outcome out;
  SolverOptions options = base_options;

  // Movement is measured against the grid the scheme starts from.
  const Apv origin = scheme == Scheme::half_range ? uniform_apv(half_range_config(config))
                     : scheme == Scheme::fpa      ? uniform_apv(config)
                                                  : scenario.initial_positions;
  options.on_round = [&](int, const TransceiverState& state) {
    const double value = scheme == Scheme::ignore_hwi_mismatched
                             ? evaluate_state(state, scenario, config)
                             : state.mse;
    out.mse.push_back(value);
    out.move_energy.push_back(movement_energy(state.positions, origin, config.move_cost));
    out.tx_power.push_back(state.weights.squaredNorm());
  };

  ConvergenceTrace trace;
  switch (scheme) {
    case Scheme::proposed:
      trace = bcd_solve(scenario, config, options).trace;
      break;
    case Scheme::fpa:
      trace = solve_fpa(scenario, config, options).trace;
      break;
    case Scheme::ignore_hwi_ideal:
    case Scheme::ignore_hwi_mismatched:
      trace = solve_ignore_hwi(scenario, config, options).trace;
      break;
    case Scheme::half_range:
      trace = solve_half_range(scenario, config, options).trace;
      break;
  }
  out.rounds = trace.rounds;
  out.converged = trace.converged;
  return out;
}

SweepRow error_row(SweepAxis axis, double value, Scheme scheme, std::optional<std::uint64_t> seed,
                   std::string message) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  SweepRow row{axis, value, scheme, seed, nan, nan, nan, nan, nan, std::move(message)};
  return row;
}

template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
  const std::size_t workers =
      std::min<std::size_t>(count, static_cast<std::size_t>(std::max(1, threads)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    parts.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double parse_double(std::string_view text) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError("csv: invalid number '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::string_view to_string(SweepAxis axis) {
  for (const auto& [a, name] : kAxisNames) {
    if (a == axis) return name;
  }
  return "unknown";
}

std::string_view to_string(Scheme scheme) {
  for (const auto& [s, name] : kSchemeNames) {
    if (s == scheme) return name;
  }
  return "unknown";
}

SweepAxis parse_axis(std::string_view name) {
  for (const auto& [a, n] : kAxisNames) {
    if (n == name) return a;
  }
  throw ConfigError("unknown sweep axis '" + std::string(name) + "'");
}

Scheme parse_scheme(std::string_view name) {
  for (const auto& [s, n] : kSchemeNames) {
    if (n == name) return s;
  }
  throw ConfigError("unknown scheme '" + std::string(name) + "'");
}

void SweepSpec::validate() const {
  if (values.empty()) throw ConfigError("sweep values must not be empty");
  if (!std::is_sorted(values.begin(), values.end())) {
    throw ConfigError("sweep values must be sorted ascending");
  }
  if (schemes.empty()) throw ConfigError("sweep needs at least one scheme");
  if (seeds.empty()) throw ConfigError("sweep needs at least one seed");
  if (axis == SweepAxis::iterations) {
    for (double v : values) {
      if (v < 0 || v != std::floor(v)) {
        throw ConfigError("iteration indices must be nonnegative integers");
      }
    }
  }
}

SystemConfig config_for_value(const SystemConfig& base, SweepAxis axis, double value) {
  SystemConfig config = base;
  switch (axis) {
    case SweepAxis::iterations:
      break;
    case SweepAxis::n_antennas: {
      if (value < 1 || value != std::floor(value)) {
        throw ConfigError("n_antennas sweep values must be positive integers");
      }
      const double pitch = base.region_length / base.n_antennas;
      config.n_antennas = static_cast<int>(value);
      config.region_length = pitch * config.n_antennas;
      break;
    }
    case SweepAxis::distortion_level:
      config.distortion_level = value;
      break;
  }
  return config;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  spec.validate();

  const bool by_iteration = spec.axis == SweepAxis::iterations;
  const std::size_t n_configs = by_iteration ? 1 : spec.values.size();
  const std::size_t n_schemes = spec.schemes.size();
  const std::size_t n_seeds = spec.seeds.size();

  // outcomes[(config * n_schemes + scheme) * n_seeds + seed]
  std::vector<Outcome> outcomes(n_configs * n_schemes * n_seeds);
  parallel_for(n_configs * n_seeds, spec.threads, [&](std::size_t task) {
    const std::size_t ci = task / n_seeds;
    const std::size_t si = task % n_seeds;
    auto slot = [&](std::size_t scheme) -> Outcome& {
      return outcomes[(ci * n_schemes + scheme) * n_seeds + si];
    };
    SystemConfig config;
    Scenario scenario;
    try {
      config = config_for_value(spec.base_config, spec.axis, spec.values[ci]);
      scenario = generate_scenario(config, spec.seeds[si]);
    } catch (const Error& e) {
      for (std::size_t j = 0; j < n_schemes; ++j) slot(j).error = e.what();
      return;
    }
    for (std::size_t j = 0; j < n_schemes; ++j) {
      try {
        slot(j) = run_scheme(spec.schemes[j], scenario, config, spec.solver);
      } catch (const Error& e) {
        slot(j) = Outcome{};
        slot(j).error = e.what();
      }
    }
  });

  std::vector<SweepRow> rows;
  for (std::size_t vi = 0; vi < spec.values.size(); ++vi) {
    const double value = spec.values[vi];
    const std::size_t ci = by_iteration ? 0 : vi;
    for (std::size_t j = 0; j < n_schemes; ++j) {
      const Scheme scheme = spec.schemes[j];
      double sum_mse = 0, sum_rounds = 0, sum_move = 0, sum_tx = 0, sum_conv = 0;
      std::size_t ok = 0;
      for (std::size_t si = 0; si < n_seeds; ++si) {
        const Outcome& o = outcomes[(ci * n_schemes + j) * n_seeds + si];
        const std::uint64_t seed = spec.seeds[si];
        if (o.error) {
          rows.push_back(error_row(spec.axis, value, scheme, seed, *o.error));
          continue;
        }
        std::size_t idx = o.mse.size() - 1;
        double rounds = o.rounds;
        double converged = o.converged ? 1.0 : 0.0;
        if (by_iteration) {
          const auto iteration = static_cast<std::size_t>(value);
          idx = std::min(iteration, idx);
          rounds = static_cast<double>(std::min<std::size_t>(iteration, o.rounds));
          converged = (o.converged && iteration >= static_cast<std::size_t>(o.rounds)) ? 1.0 : 0.0;
        }
        SweepRow row{spec.axis, value,       scheme,          seed,     o.mse[idx],
                     rounds,    o.move_energy[idx], o.tx_power[idx], converged, std::nullopt};
        sum_mse += row.mse;
        sum_rounds += row.rounds;
        sum_move += row.move_energy;
        sum_tx += row.tx_power;
        sum_conv += row.converged;
        ++ok;
        rows.push_back(std::move(row));
      }
      if (ok == 0) {
        rows.push_back(error_row(spec.axis, value, scheme, std::nullopt, "no feasible seeds"));
      } else {
        const double d = static_cast<double>(ok);
        rows.push_back(SweepRow{spec.axis, value, scheme, std::nullopt, sum_mse / d,
                                sum_rounds / d, sum_move / d, sum_tx / d, sum_conv / d,
                                std::nullopt});
      }
    }
  }
  return rows;
}

std::string format_number(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

void write_csv(std::ostream& out, std::span<const SweepRow> rows) {
  out << kCsvHeader << '\n';
  for (const SweepRow& row : rows) {
    out << to_string(row.axis) << ',' << format_number(row.value) << ',' << to_string(row.scheme)
        << ',' << (row.seed ? std::to_string(*row.seed) : std::string("mean")) << ','
        << format_number(row.mse) << ',' << format_number(row.rounds) << ','
        << format_number(row.move_energy) << ',' << format_number(row.tx_power) << ',';
    if (row.error) {
      out << "error";
    } else {
      out << format_number(row.converged);
    }
    out << '\n';
  }
}

std::string to_csv(std::span<const SweepRow> rows) {
  std::ostringstream out;
  write_csv(out, rows);
  return out.str();
}

std::vector<SweepRow> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw ConfigError("csv: unexpected header");
  }
  std::vector<SweepRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split(line, ',');
    if (fields.size() != 9) throw ConfigError("csv: expected 9 fields in '" + line + "'");
    SweepRow row;
    row.axis = parse_axis(fields[0]);
    row.value = parse_double(fields[1]);
    row.scheme = parse_scheme(fields[2]);
    if (fields[3] != "mean") row.seed = static_cast<std::uint64_t>(parse_double(fields[3]));
    row.mse = parse_double(fields[4]);
    row.rounds = parse_double(fields[5]);
    row.move_energy = parse_double(fields[6]);
    row.tx_power = parse_double(fields[7]);
    if (fields[8] == "error") {
      row.error = "error";
      row.converged = std::numeric_limits<double>::quiet_NaN();
    } else {
      row.converged = parse_double(fields[8]);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string row_violation(const SweepRow& row, const SystemConfig& config) {
  if (row.error || !row.seed) return {};
  std::ostringstream msg;
  // Rows carry 12 significant digits, so allow for print rounding.
  const double slack = kPowerSlack + 1e-11 * config.total_power;
  if (!(std::isfinite(row.mse) && row.mse >= 0)) {
    msg << "mse " << row.mse << " is not a nonnegative number";
  } else if (row.move_energy < 0 || row.tx_power < 0) {
    msg << "negative energy or power";
  } else if (row.tx_power > config.n_users * config.per_user_power + slack) {
    msg << "tx_power " << row.tx_power << " exceeds K * P_0";
  } else if (row.tx_power + row.move_energy > config.total_power + slack) {
    msg << "tx_power + move_energy " << row.tx_power + row.move_energy << " exceeds P_total "
        << config.total_power;
  }
  return msg.str();
}

}  // namespace fluidcomp
