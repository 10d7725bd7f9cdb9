#include "fluidcomp/power_alloc.hpp"

#include <cmath>
#include <limits>

#include "fluidcomp/errors.hpp"

namespace fluidcomp {

namespace {

constexpr int kBisectionIterations = 60;

// Per-user minimizer for a fixed total-budget multiplier: the stationary
// point of the Lagrangian, pulled back onto the per-user cap if it lies
// outside. The objective is radial along conj(a_k), so clipping along that
// phase is exact.
class MultiplierMap {
 public:
  MultiplierMap(const EffectiveCoeffs& coeffs, double beta2, double cap)
      : numer_(coeffs.a.conjugate()),
        den_(coeffs.a.cwiseAbs2() + beta2 * coeffs.c),
        cap_(cap) {}

  CVector weights(double multiplier) const {
    CVector w(numer_.size());
    for (Eigen::Index k = 0; k < w.size(); ++k) w[k] = weight(k, multiplier);
    return w;
  }

  double total_power(double multiplier) const {
    double sum = 0.0;
    for (Eigen::Index k = 0; k < numer_.size(); ++k) sum += std::norm(weight(k, multiplier));
    return sum;
  }

  bool any_signal() const { return numer_.cwiseAbs().maxCoeff() > 0.0; }

 private:
  Complex weight(Eigen::Index k, double multiplier) const {
    const double mag = std::abs(numer_[k]);
    if (mag == 0.0) return 0.0;
    const Complex w = numer_[k] / (den_[k] + multiplier);
    if (std::norm(w) > cap_) return std::sqrt(cap_) / mag * numer_[k];
    return w;
  }

  CVector numer_;
  RVector den_;
  double cap_;
};

}  // namespace

EffectiveCoeffs effective_coeffs(const CVector& beamformer, const ChannelMatrix& channels) {
  if (beamformer.size() != channels.n_antennas()) {
    throw ShapeError("effective_coeffs: beamformer length does not match the channels");
  }
  EffectiveCoeffs out;
  // a_k = m^H h_k
  out.a = channels.matrix().transpose() * beamformer.conjugate();
  out.c = channels.matrix().cwiseAbs2().transpose() * beamformer.cwiseAbs2();
  return out;
}

PowerSolution solve_power(const EffectiveCoeffs& coeffs, const SystemConfig& config,
                          double budget) {
  if (coeffs.a.size() != coeffs.c.size()) {
    throw ShapeError("solve_power: a and c differ in length");
  }
  if (!(budget >= 0.0)) throw BudgetError("solve_power: negative power budget");

  const double beta2 = config.distortion_level * config.distortion_level;
  const double cap = config.per_user_power;
  const MultiplierMap map(coeffs, beta2, cap);
  const Eigen::Index k_users = coeffs.a.size();

  PowerSolution sol;
  sol.cap_multipliers = RVector::Zero(k_users);

  if (k_users == 0 || !map.any_signal()) {
    sol.weights = CVector::Zero(k_users);
    return sol;
  }

  double multiplier = 0.0;
  if (map.total_power(0.0) > budget) {
    if (budget == 0.0) {
      sol.weights = CVector::Zero(k_users);
      sol.multiplier = std::numeric_limits<double>::infinity();
      return sol;
    }
    double lower = 0.0;
    double upper = 1.0;
    while (map.total_power(upper) > budget) {
      upper = 2.0 * upper + 1.0;
      if (!std::isfinite(upper)) throw BudgetError("solve_power: multiplier bracket diverged");
    }
    for (int iter = 0; iter < kBisectionIterations; ++iter) {
      const double mid = 0.5 * (lower + upper);
      if (map.total_power(mid) <= budget) {
        upper = mid;
      } else {
        lower = mid;
      }
    }
    multiplier = upper;
  }

  sol.weights = map.weights(multiplier);
  sol.multiplier = multiplier;

  // Stationarity with the cap multipliers implied by the clipped users.
  for (Eigen::Index k = 0; k < k_users; ++k) {
    const Complex a = coeffs.a[k];
    const Complex w = sol.weights[k];
    const double den = std::norm(a) + beta2 * coeffs.c[k];
    if (std::abs(w) > 0.0 && std::norm(w) >= cap * (1.0 - 1e-12)) {
      sol.cap_multipliers[k] = std::max(0.0, std::abs(a) / std::abs(w) - den - multiplier);
    }
    const Complex residual = std::conj(a) * (a * w - 1.0) +
                             (beta2 * coeffs.c[k] + multiplier + sol.cap_multipliers[k]) * w;
    sol.kkt_residual = std::max(sol.kkt_residual, std::abs(residual));
  }
  return sol;
}

}  // namespace fluidcomp
