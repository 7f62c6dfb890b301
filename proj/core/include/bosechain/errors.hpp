#pragma once

#include <stdexcept>
#include <string>

namespace bosechain {

/// A propagator could not reach the requested accuracy within its budget.
class PropagationError : public std::runtime_error {
 public:
  explicit PropagationError(const std::string& what) : std::runtime_error(what) {}
};

/// A computation would exceed a configured size cap (level count, Hilbert
/// space dimension).  Carries the cap and the last observed diagnostics.
class ResourceExhausted : public std::runtime_error {
 public:
  ResourceExhausted(const std::string& what, long long cap, double last_tail_weight)
      : std::runtime_error(what), cap_(cap), last_tail_weight_(last_tail_weight) {}

  long long cap() const { return cap_; }
  double last_tail_weight() const { return last_tail_weight_; }

 private:
  long long cap_;
  double last_tail_weight_;
};

/// The moment LP has no feasible distribution on the given support.
class InfeasibleProblem : public std::runtime_error {
 public:
  explicit InfeasibleProblem(const std::string& what) : std::runtime_error(what) {}
};

/// A least-squares fit was degenerate (too few points, zero variance, or a
/// non-positive slope where a speed is expected).
class FitFailure : public std::runtime_error {
 public:
  explicit FitFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bosechain
