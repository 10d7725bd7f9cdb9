#include <cmath>
#include <limits>
#include <random>

#include <doctest.h>

#include "fluidcomp/errors.hpp"
#include "fluidcomp/objective.hpp"
#include "fluidcomp/power_alloc.hpp"
#include "oracles.hpp"

using namespace fluidcomp;

namespace {

EffectiveCoeffs scalar_coeffs(Complex a, double c) {
  return {CVector::Constant(1, a), RVector::Constant(1, c)};
}

SystemConfig config_with(double beta, double cap) {
  SystemConfig c = SystemConfig::with_defaults(1, 1);
  c.distortion_level = beta;
  c.per_user_power = cap;
  return c;
}

// Smallest lambda >= 0 with 1 / (1 + lambda)^2 <= budget, by plain bisection
// on the scalar equation.
double scalar_root(double budget) {
  double lo = 0.0, hi = 1e6;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (1.0 / ((1.0 + mid) * (1.0 + mid)) > budget ? lo : hi) = mid;
  }
  return hi;
}

}  // namespace

TEST_CASE("effective coefficients") {
  std::mt19937_64 rng(1);
  const CMatrix h = oracle::random_complex(rng, 12).reshaped(3, 4);
  SUBCASE("first basis vector selects row 1") {
    const EffectiveCoeffs e = effective_coeffs(Eigen::Vector3cd(1, 0, 0), ChannelMatrix(h));
    for (int k = 0; k < 4; ++k) {
      CHECK(std::abs(e.a[k] - h(0, k)) < 1e-15);
      CHECK(e.c[k] == doctest::Approx(std::norm(h(0, k))));
    }
  }
  SUBCASE("zero combiner") {
    const EffectiveCoeffs e = effective_coeffs(CVector::Zero(3), ChannelMatrix(h));
    CHECK(e.a.isZero(0));
    CHECK(e.c.isZero(0));
  }
  SUBCASE("scalar") {
    const EffectiveCoeffs e =
        effective_coeffs(CVector::Constant(1, 1.0), ChannelMatrix(CMatrix::Constant(1, 1, 2.0)));
    CHECK(std::abs(e.a[0] - 2.0) == 0.0);
    CHECK(e.c[0] == 4.0);
  }
  SUBCASE("a_k = m^H h_k for complex m") {
    const CVector m = oracle::random_complex(rng, 3);
    const EffectiveCoeffs e = effective_coeffs(m, ChannelMatrix(h));
    for (int k = 0; k < 4; ++k) {
      Complex expected = 0.0;
      double c = 0.0;
      for (int n = 0; n < 3; ++n) {
        expected += std::conj(m[n]) * h(n, k);
        c += std::norm(m[n]) * std::norm(h(n, k));
      }
      CHECK(std::abs(e.a[k] - expected) < 1e-13);
      CHECK(e.c[k] == doctest::Approx(c));
    }
  }
  SUBCASE("length mismatch") {
    CHECK_THROWS_AS(effective_coeffs(CVector::Zero(2), ChannelMatrix(h)), ShapeError);
  }
}

TEST_CASE("solve_power examples") {
  SUBCASE("slack constraints") {
    const PowerSolution s = solve_power(scalar_coeffs(1.0, 0.0), config_with(0.8, 4.0), 4.0);
    CHECK(std::abs(s.weights[0] - 1.0) < 1e-15);
    CHECK(s.multiplier == 0.0);
  }
  SUBCASE("binding budget") {
    const double lambda = scalar_root(0.25);
    CHECK(lambda == doctest::Approx(1.0).epsilon(1e-12));
    const PowerSolution s = solve_power(scalar_coeffs(1.0, 0.0), config_with(0.0, 4.0), 0.25);
    CHECK(std::abs(s.weights[0] - 0.5) < 1e-12);
    CHECK(s.multiplier == doctest::Approx(lambda).epsilon(1e-12));
    CHECK(std::norm(s.weights[0]) <= 0.25);
  }
  SUBCASE("no signal") {
    const EffectiveCoeffs e{CVector::Zero(3), RVector::Constant(3, 0.4)};
    const PowerSolution s = solve_power(e, config_with(0.8, 1.0), 2.0);
    CHECK(s.weights.isZero(0));
    CHECK(s.multiplier == 0.0);
  }
  SUBCASE("negative budget") {
    CHECK_THROWS_AS(solve_power(scalar_coeffs(1.0, 0.0), config_with(0.0, 1.0), -1e-3),
                    BudgetError);
  }
  SUBCASE("zero budget forces w = 0") {
    const PowerSolution s = solve_power(scalar_coeffs(1.0, 0.0), config_with(0.0, 1.0), 0.0);
    CHECK(s.weights.isZero(0));
    CHECK(s.multiplier == std::numeric_limits<double>::infinity());
  }
  SUBCASE("per-user cap clips along conj(a)") {
    const Complex a = std::polar(0.2, 0.7);
    const PowerSolution s = solve_power(scalar_coeffs(a, 0.0), config_with(0.0, 1.0), 10.0);
    CHECK(std::abs(s.weights[0] - std::polar(1.0, -0.7)) < 1e-14);
    CHECK(s.multiplier == 0.0);
    CHECK(s.cap_multipliers[0] == doctest::Approx(0.2 / 1.0 - 0.04));
    CHECK(s.kkt_residual < 1e-14);
  }
}

TEST_CASE("bisection map is strictly decreasing in lambda") {
  std::mt19937_64 rng(7);
  const CVector a = oracle::random_complex(rng, 5);
  const RVector c = a.cwiseAbs2() * 1.3;
  for (double lambda = 0.0; lambda < 20.0; lambda += 0.25) {
    double here = 0.0, next = 0.0;
    for (int k = 0; k < 5; ++k) {
      here += std::norm(a[k]) / std::pow(std::norm(a[k]) + 0.64 * c[k] + lambda, 2);
      next += std::norm(a[k]) / std::pow(std::norm(a[k]) + 0.64 * c[k] + lambda + 0.25, 2);
    }
    CHECK(next < here);
  }
}

TEST_CASE("KKT conditions and optimality against projected gradient") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int budget_binding = 0;
  int cap_binding = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const int k_users = 1 + trial % 4;
    SystemConfig cfg = SystemConfig::with_defaults(1, k_users);
    cfg.distortion_level = 0.8 * u(rng);
    cfg.per_user_power = 0.05 + 1.0 * u(rng);
    const CVector a = oracle::random_complex(rng, k_users, 0.2 + 2.0 * u(rng));
    RVector c(k_users);
    for (int k = 0; k < k_users; ++k) c[k] = std::norm(a[k]) * (0.5 + 3.0 * u(rng));
    const double budget = 0.02 + 0.8 * k_users * u(rng);

    const PowerSolution sol = solve_power(EffectiveCoeffs{a, c}, cfg, budget);
    budget_binding += sol.multiplier > 0.0;
    cap_binding += sol.cap_multipliers.maxCoeff() > 0.0;
    const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
    CHECK(sol.kkt_residual <= 1e-6 * scale);
    CHECK(sol.multiplier >= 0.0);
    CHECK(sol.multiplier * (budget - sol.weights.squaredNorm()) <= 1e-6);
    CHECK(sol.weights.squaredNorm() <= budget + kPowerSlack);
    for (int k = 0; k < k_users; ++k) {
      CHECK(std::norm(sol.weights[k]) <= cfg.per_user_power + kPowerSlack);
    }

    const CVector ref =
        oracle::power_pgd(a, c, cfg.distortion_level, cfg.per_user_power, budget, 2000);
    const double ours = oracle::power_objective(sol.weights, a, c, cfg.distortion_level);
    const double theirs = oracle::power_objective(ref, a, c, cfg.distortion_level);
    CHECK(ours <= theirs + 1e-9);

    // Any feasible point does no better.
    for (int probe = 0; probe < 20; ++probe) {
      const CVector z = oracle::project_power_set(oracle::random_complex(rng, k_users),
                                                  cfg.per_user_power, budget);
      CHECK(ours <= oracle::power_objective(z, a, c, cfg.distortion_level) + 1e-12);
    }
  }
  CHECK(budget_binding > 5);
  CHECK(cap_binding > 5);
}
