// fluidcomp: sweeps and convergence traces for the fluid-antenna AirComp solver.
//
//   fluidcomp run --config sys.cfg --sweep n_antennas --values 4,6,8,10 \
//                 --schemes proposed,fpa,ignore_hwi_ideal --seeds 20 --out vs_n.csv
//   fluidcomp trace --config sys.cfg --seed 3 --out trace.csv
//   fluidcomp validate --config sys.cfg
//
// Exit codes: 0 success, 1 configuration error, 2 infeasible geometry/budget.

#include <charconv>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fluidcomp/baselines.hpp"
#include "fluidcomp/errors.hpp"
#include "fluidcomp/experiments.hpp"
#include "fluidcomp/scenario.hpp"

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitInfeasible = 2;

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto pos = text.find(',', start);
    const std::string item = text.substr(start, pos - start);
    if (!item.empty()) items.push_back(item);
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return items;
}

double parse_value(const std::string& text) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw fluidcomp::ConfigError("invalid sweep value '" + text + "'");
  }
  return v;
}

int write_rows(const std::vector<fluidcomp::SweepRow>& rows, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open '" << path << "' for writing\n";
    return kExitConfig;
  }
  fluidcomp::write_csv(out, rows);
  int status = 0;
  for (const auto& row : rows) {
    if (row.error && row.seed) {
      std::cerr << "infeasible cell: " << fluidcomp::to_string(row.axis) << '='
                << fluidcomp::format_number(row.value) << " scheme="
                << fluidcomp::to_string(row.scheme) << " seed=" << *row.seed << ": " << *row.error
                << '\n';
      status = kExitInfeasible;
    }
  }
  return status;
}

void print_summary(const std::vector<fluidcomp::SweepRow>& rows) {
  for (const auto& row : rows) {
    if (row.seed || row.error) continue;
    std::cout << fluidcomp::to_string(row.axis) << '=' << fluidcomp::format_number(row.value)
              << "  " << fluidcomp::to_string(row.scheme)
              << "  mean_mse=" << fluidcomp::format_number(row.mse)
              << "  mean_rounds=" << fluidcomp::format_number(row.rounds) << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fluid-antenna over-the-air computation solver"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::string axis_name;
  std::string values_text;
  std::string schemes_text = "proposed,fpa";
  int n_seeds = 1;
  int threads = 1;
  int max_rounds = 50;
  std::uint64_t trace_seed = 1;
  bool has_trace_seed = false;

  auto* run = app.add_subcommand("run", "Seed-batched sweep over one axis, written as CSV");
  run->add_option("--config", config_path, "System config file")->required();
  run->add_option("--sweep", axis_name, "iterations | n_antennas | distortion_level")->required();
  run->add_option("--values", values_text, "Comma-separated ascending values")->required();
  run->add_option("--schemes", schemes_text,
                  "Comma-separated schemes: proposed, fpa, ignore_hwi_ideal, "
                  "ignore_hwi_mismatched, half_range");
  run->add_option("--seeds", n_seeds, "Number of seeds, counted up from the config seed")
      ->check(CLI::PositiveNumber);
  run->add_option("--out", out_path, "Output CSV path")->required();
  run->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  run->add_option("--max-rounds", max_rounds, "BCD round limit")->check(CLI::PositiveNumber);

  auto* trace = app.add_subcommand("trace", "Per-round MSE of proposed, FPA and half-range");
  trace->add_option("--config", config_path, "System config file")->required();
  trace->add_option("--seed", trace_seed, "Scenario seed (defaults to the config seed)")
      ->each([&](const std::string&) { has_trace_seed = true; });
  trace->add_option("--out", out_path, "Output CSV path")->required();
  trace->add_option("--max-rounds", max_rounds, "BCD round limit")->check(CLI::PositiveNumber);

  auto* validate = app.add_subcommand("validate", "Check a config file and print it");
  validate->add_option("--config", config_path, "System config file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    const fluidcomp::LoadedConfig loaded = fluidcomp::load_config(config_path);
    const fluidcomp::SystemConfig& cfg = loaded.config;

    if (*validate) {
      // Geometry of the uniform grid and the half-range variant.
      fluidcomp::uniform_apv(cfg);
      std::cout << "n_antennas = " << cfg.n_antennas << '\n'
                << "n_users = " << cfg.n_users << '\n'
                << "wavelength = " << fluidcomp::format_number(cfg.wavelength) << '\n'
                << "region_length = " << fluidcomp::format_number(cfg.region_length) << '\n'
                << "min_spacing = " << fluidcomp::format_number(cfg.min_spacing) << '\n'
                << "noise_power = " << fluidcomp::format_number(cfg.noise_power) << '\n'
                << "distortion_level = " << fluidcomp::format_number(cfg.distortion_level) << '\n'
                << "move_cost = " << fluidcomp::format_number(cfg.move_cost) << '\n'
                << "per_user_power = " << fluidcomp::format_number(cfg.per_user_power) << '\n'
                << "total_power = " << fluidcomp::format_number(cfg.total_power) << '\n'
                << "seed = " << loaded.seed << '\n';
      return 0;
    }

    fluidcomp::SweepSpec spec;
    spec.base_config = cfg;
    spec.solver.max_rounds = max_rounds;
    spec.threads = threads;

    if (*run) {
      spec.axis = fluidcomp::parse_axis(axis_name);
      for (const auto& v : split_list(values_text)) spec.values.push_back(parse_value(v));
      for (const auto& s : split_list(schemes_text)) {
        spec.schemes.push_back(fluidcomp::parse_scheme(s));
      }
      for (int i = 0; i < n_seeds; ++i) spec.seeds.push_back(loaded.seed + i);
    } else {
      spec.axis = fluidcomp::SweepAxis::iterations;
      for (int i = 0; i <= max_rounds; ++i) spec.values.push_back(i);
      spec.schemes = {fluidcomp::Scheme::proposed, fluidcomp::Scheme::fpa,
                      fluidcomp::Scheme::half_range};
      spec.seeds = {has_trace_seed ? trace_seed : loaded.seed};
    }

    const auto rows = fluidcomp::run_sweep(spec);
    const int status = write_rows(rows, out_path);
    if (*run) print_summary(rows);
    return status;
  } catch (const fluidcomp::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const fluidcomp::Error& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kExitInfeasible;
  }
}
