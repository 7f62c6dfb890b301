#include "bosechain/evolution.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "bosechain/chebyshev.hpp"
#include "bosechain/errors.hpp"

namespace bosechain {

ExcitationState evolve(const EffectiveHamiltonian& hamiltonian, const ExcitationState& psi0,
                       double t, double tol) {
  if (psi0.level_count() != hamiltonian.level_count()) {
    throw std::invalid_argument("evolve: state size does not match Hamiltonian");
  }
  if (std::abs(psi0.squared_norm() - 1.0) > 1e-8) {
    throw std::invalid_argument("evolve: input state is not normalized");
  }
  if (t < 0.0) throw std::invalid_argument("evolve: time must be >= 0");
  if (tol <= 0.0) throw std::invalid_argument("evolve: tolerance must be > 0");

  ExcitationState out;
  out.time_stamp = psi0.time_stamp + t;
  if (t == 0.0) {
    out.amplitudes = psi0.amplitudes;
    return out;
  }

  // Half the budget goes to the series truncation; the remainder absorbs
  // recurrence roundoff, which the norm check below certifies a posteriori.
  const cheb::Expansion e =
      cheb::plan(0.0, hamiltonian.gershgorin_radius(), t, 0.5 * tol);
  out.amplitudes = cheb::expv(
      e, [&hamiltonian](const Vector& in, Vector& w) { hamiltonian.apply_scaled(in, w, 1.0); },
      psi0.amplitudes);

  const double defect = std::abs(out.amplitudes.squaredNorm() - psi0.squared_norm());
  if (defect > tol) {
    std::ostringstream msg;
    msg << "evolve: unitarity defect " << defect << " exceeds tolerance " << tol
        << " (degree " << e.degree << ", levels " << hamiltonian.level_count() << ")";
    throw PropagationError(msg.str());
  }
  return out;
}

EvolutionResult evolve_adaptive(double t, const PropagationConfig& cfg) {
  if (t < 0.0) throw std::invalid_argument("evolve_adaptive: time must be >= 0");
  if (cfg.growth_factor <= 1.0) {
    throw std::invalid_argument("evolve_adaptive: growth_factor must be > 1");
  }
  if (cfg.initial_level_count < 2) {
    throw std::invalid_argument("evolve_adaptive: initial_level_count must be >= 2");
  }

  Index levels = cfg.initial_level_count;
  double last_tail = -1.0;
  while (true) {
    if (levels > cfg.max_level_count) {
      std::ostringstream msg;
      msg << "evolve_adaptive: level cap " << cfg.max_level_count << " exceeded at t = " << t;
      if (last_tail >= 0.0) msg << " (last tail weight " << last_tail << ")";
      throw ResourceExhausted(msg.str(), cfg.max_level_count, last_tail);
    }

    const EffectiveHamiltonian h(levels);
    ExcitationState state = evolve(h, ground_state(levels), t, cfg.error_tolerance);
    last_tail = state.tail_weight(0.1);
    if (last_tail <= cfg.tail_tolerance) {
      EvolutionResult result;
      result.unitarity_defect = std::abs(state.squared_norm() - 1.0);
      result.tail_weight = last_tail;
      result.level_count_used = levels;
      result.final_state = std::move(state);
      return result;
    }
    levels = static_cast<Index>(std::ceil(static_cast<double>(levels) * cfg.growth_factor));
  }
}

double measured_moment(const ExcitationState& state, int order) {
  if (order != 1 && order != 2) throw std::invalid_argument("measured_moment: order must be 1 or 2");
  double acc = 0.0;
  const Index L = state.level_count();
  for (Index l = 0; l < L; ++l) {
    const double v = static_cast<double>(l + 1);
    acc += (order == 1 ? v : v * v) * std::norm(state.amplitudes[l]);
  }
  return acc;
}

}  // namespace bosechain
