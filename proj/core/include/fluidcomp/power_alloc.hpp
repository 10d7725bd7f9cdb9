#pragma once

#include "fluidcomp/channel.hpp"
#include "fluidcomp/scenario.hpp"
#include "fluidcomp/types.hpp"

namespace fluidcomp {

/// a_k = m^H h_k and c_k = m^H diag(h_k h_k^H) m.
struct EffectiveCoeffs {
  CVector a;
  RVector c;
};

EffectiveCoeffs effective_coeffs(const CVector& beamformer, const ChannelMatrix& channels);

struct PowerSolution {
  CVector weights;
  /// Multiplier of the total-budget constraint. +inf when the budget is zero
  /// and some a_k is nonzero (the only feasible point is w = 0).
  double multiplier = 0.0;
  /// Implied multipliers of the per-user caps (zero for users below the cap).
  RVector cap_multipliers;
  /// max_k |conj(a_k)(a_k w_k - 1) + (beta^2 c_k + lambda + mu_k) w_k|.
  double kkt_residual = 0.0;
};

/// Minimizes sum_k |a_k w_k - 1|^2 + beta^2 c_k |w_k|^2 subject to
/// |w_k|^2 <= P_k and sum_k |w_k|^2 <= budget.
///
/// Each candidate w_k(lambda) = conj(a_k) / (|a_k|^2 + beta^2 c_k + lambda)
/// is clipped to the per-user cap along the phase of conj(a_k); lambda is
/// found by doubling an upper bracket and then 60 bisection halvings, keeping
/// the feasible end of the bracket. Throws BudgetError for budget < 0.
PowerSolution solve_power(const EffectiveCoeffs& coeffs, const SystemConfig& config, double budget);

inline PowerSolution solve_power(const CVector& beamformer, const ChannelMatrix& channels,
                                 const SystemConfig& config, double budget) {
  return solve_power(effective_coeffs(beamformer, channels), config, budget);
}

}  // namespace fluidcomp
