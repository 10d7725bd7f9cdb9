#pragma once

#include "fluidcomp/channel.hpp"
#include "fluidcomp/scenario.hpp"
#include "fluidcomp/types.hpp"

namespace fluidcomp {

/// R = (1 + beta^2) sigma^2 I + beta^2 diag(S) + S, with
/// S = sum_k |w_k|^2 h_k h_k^H.
CMatrix receive_covariance(const CVector& weights, const ChannelMatrix& channels,
                           const SystemConfig& config);

/// Unconstrained MSE minimizer m* = R^{-1} sum_k w_k h_k, solved through a
/// Cholesky factorization of R. Throws SingularityError if R does not factor.
CVector solve_beamformer(const CVector& weights, const ChannelMatrix& channels,
                         const SystemConfig& config);

}  // namespace fluidcomp
