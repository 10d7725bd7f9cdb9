#include <cmath>

#include <doctest.h>

#include "fluidcomp/baselines.hpp"
#include "fluidcomp/errors.hpp"

using namespace fluidcomp;

TEST_CASE("fpa") {
  const SystemConfig c = SystemConfig::with_defaults(5, 6);
  SUBCASE("no signal") {
    Scenario s = generate_scenario(c, 1);
    s.gains.setZero();
    CHECK(solve_fpa(s, c).state.mse == 6.0);
  }
  SUBCASE("trace, positions, energy") {
    const Scenario s = generate_scenario(c, 2);
    const SolveResult r = solve_fpa(s, c);
    for (std::size_t i = 1; i < r.trace.mse_per_round.size(); ++i) {
      CHECK(r.trace.mse_per_round[i] <= r.trace.mse_per_round[i - 1] * (1 + 1e-9));
    }
    CHECK(r.state.positions.positions() == uniform_apv(c).positions());
    CHECK(movement_energy(r.state.positions, uniform_apv(c), c.move_cost) == 0.0);
  }
  SUBCASE("free movement never loses to the fixed array") {
    SystemConfig free = c;
    free.move_cost = 0.0;
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      const Scenario s = generate_scenario(free, seed);
      CHECK(bcd_solve(s, free).state.mse <= solve_fpa(s, free).state.mse + 1e-9);
    }
  }
}

TEST_CASE("ignore hardware impairments") {
  SystemConfig c = SystemConfig::with_defaults(4, 5);
  const Scenario s = generate_scenario(c, 3);
  SUBCASE("true beta = 0 matches the proposed design") {
    c.distortion_level = 0.0;
    const IgnoreHwiResult ign = solve_ignore_hwi(s, c);
    const SolveResult full = bcd_solve(s, c);
    CHECK(ign.ideal_mse == full.state.mse);
    CHECK(ign.mismatched_mse == full.state.mse);
    CHECK(ign.state.positions.positions() == full.state.positions.positions());
  }
  SUBCASE("beta = 0.8") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const Scenario sc = generate_scenario(c, seed);
      const IgnoreHwiResult ign = solve_ignore_hwi(sc, c);
      CHECK(ign.mismatched_mse >= ign.ideal_mse);
      CHECK(ign.ideal_mse <= bcd_solve(sc, c).state.mse);
    }
  }
}

TEST_CASE("half range") {
  const SystemConfig c = SystemConfig::with_defaults(6, 6);
  SUBCASE("config") {
    CHECK(half_range_config(c).region_length == 3.0);
    CHECK(half_range_config(c).n_antennas == 6);
  }
  SUBCASE("no signal") {
    Scenario s = generate_scenario(c, 1);
    s.gains.setZero();
    CHECK(solve_half_range(s, c).state.mse == 6.0);
  }
  SUBCASE("state lives in the half region") {
    const Scenario s = generate_scenario(c, 2);
    const SolveResult r = solve_half_range(s, c);
    const SystemConfig half = half_range_config(c);
    CHECK_NOTHROW(check_feasible(r.state, uniform_apv(half), half));
    CHECK(r.state.positions[5] <= 3.0);
  }
  SUBCASE("single antenna, single user matches full range") {
    const SystemConfig one = SystemConfig::with_defaults(1, 1);
    const Scenario s = generate_scenario(one, 5);
    CHECK(std::abs(solve_half_range(s, one).state.mse - bcd_solve(s, one).state.mse) <= 1e-9);
  }
  SUBCASE("infeasible at L/2") {
    SystemConfig tight = c;
    tight.region_length = 3.0;  // half is 1.5 < 5 * 0.5
    const Scenario s = generate_scenario(tight, 1);
    CHECK_THROWS_AS(solve_half_range(s, tight), FeasibilityError);
  }
}
