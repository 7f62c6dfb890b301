#pragma once

#include "bosechain/excitation.hpp"

namespace bosechain {

struct PropagationConfig {
  double target_time = 0.0;
  double error_tolerance = 1e-10;
  double tail_tolerance = 1e-12;
  Index initial_level_count = 64;
  double growth_factor = 2.0;
  Index max_level_count = 1 << 20;
};

struct EvolutionResult {
  ExcitationState final_state;
  Index level_count_used = 0;
  double unitarity_defect = 0.0;
  double tail_weight = 0.0;
};

/// Approximates exp(-i*t*E) psi0 with certified error <= tol in the 2-norm
/// (Chebyshev expansion, degree from the Gershgorin radius of the truncated
/// matrix).  Throws std::invalid_argument for a non-normalized input or
/// negative time, PropagationError if the certification checks fail.
ExcitationState evolve(const EffectiveHamiltonian& hamiltonian, const ExcitationState& psi0,
                       double t, double tol = 1e-10);

/// Propagates ||0>> to time t, growing the level count by cfg.growth_factor
/// until the tail weight in the top 10% of levels drops below
/// cfg.tail_tolerance.  Throws ResourceExhausted when the next level count
/// would exceed cfg.max_level_count.
EvolutionResult evolve_adaptive(double t, const PropagationConfig& cfg);

/// Sum_l (l+1)^order |psi_l|^2 for order 1 or 2.
double measured_moment(const ExcitationState& state, int order);

}  // namespace bosechain
