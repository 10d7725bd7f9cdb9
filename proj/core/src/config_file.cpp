#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "fluidcomp/errors.hpp"
#include "fluidcomp/scenario.hpp"

namespace fluidcomp {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
  T value{};
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError("invalid value for '" + std::string(key) + "': '" + std::string(text) + "'");
  }
  return value;
}

constexpr std::string_view kKeys[] = {
    "n_antennas",       "n_users",   "wavelength",     "region_length",
    "min_spacing",      "noise_power", "distortion_level", "move_cost",
    "per_user_power",   "total_power", "seed",
};

}  // namespace

LoadedConfig parse_config(std::string_view text) {
  std::map<std::string, std::string, std::less<>> entries;
  std::istringstream lines{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    std::string_view view = line;
    if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string_view key = trim(view.substr(0, eq));
    const std::string_view value = trim(view.substr(eq + 1));
    if (std::find(std::begin(kKeys), std::end(kKeys), key) == std::end(kKeys)) {
      throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + std::string(key) +
                        "'");
    }
    if (value.empty()) {
      throw ConfigError("line " + std::to_string(line_no) + ": missing value for '" +
                        std::string(key) + "'");
    }
    if (!entries.emplace(std::string(key), std::string(value)).second) {
      throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" +
                        std::string(key) + "'");
    }
  }

  auto get = [&](std::string_view key) -> std::optional<std::string_view> {
    auto it = entries.find(key);
    if (it == entries.end()) return std::nullopt;
    return std::string_view(it->second);
  };
  auto get_int = [&](std::string_view key, int fallback) {
    auto v = get(key);
    return v ? parse_number<int>(key, *v) : fallback;
  };
  auto get_double = [&](std::string_view key, double fallback) {
    auto v = get(key);
    return v ? parse_number<double>(key, *v) : fallback;
  };

  const SystemConfig base;
  LoadedConfig loaded;
  SystemConfig& c = loaded.config;
  c.n_antennas = get_int("n_antennas", base.n_antennas);
  c.n_users = get_int("n_users", base.n_users);
  c.wavelength = get_double("wavelength", base.wavelength);
  c.region_length = get_double("region_length", c.n_antennas * c.wavelength);
  c.min_spacing = get_double("min_spacing", 0.5 * c.wavelength);
  c.noise_power = get_double("noise_power", base.noise_power);
  c.distortion_level = get_double("distortion_level", base.distortion_level);
  c.move_cost = get_double("move_cost", base.move_cost);
  c.per_user_power = get_double("per_user_power", base.per_user_power);
  c.total_power = get_double("total_power", c.n_users * c.per_user_power);
  if (auto v = get("seed")) loaded.seed = parse_number<std::uint64_t>("seed", *v);

  c.validate();
  return loaded;
}

LoadedConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

}  // namespace fluidcomp
