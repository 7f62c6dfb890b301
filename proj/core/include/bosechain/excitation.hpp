#pragma once

#include <complex>
#include <cstdint>

#include <Eigen/Core>

namespace bosechain {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

/// Tridiagonal excitation Hamiltonian on levels l = 0..L-1 with purely
/// imaginary couplings: E[l+1,l] = i(l+1), E[l,l+1] = -i(l+1).  Truncation is
/// a hard wall: there is no coupling out of the last level.  Entries are
/// Gaussian integers, so the matrix is exactly Hermitian in double precision.
class EffectiveHamiltonian {
 public:
  /// Requires level_count >= 2.
  explicit EffectiveHamiltonian(Index level_count);

  Index level_count() const { return levels_; }

  /// Magnitude of the coupling between levels l and l+1 (equals l+1).
  double coupling(Index l) const { return static_cast<double>(l + 1); }

  /// out = scale * (E * in).  No allocation; out must have the right size.
  void apply_scaled(const Vector& in, Vector& out, double scale) const;

  Vector apply(const Vector& in) const;

  /// Upper bound on the spectral radius from Gershgorin disks (2L-3 for
  /// L >= 2, within the a-priori bound 2(L-1)).
  double gershgorin_radius() const;

  Eigen::MatrixXcd dense() const;

 private:
  Index levels_;
};

/// State in the excitation-level basis.
struct ExcitationState {
  Vector amplitudes;
  double time_stamp = 0.0;

  Index level_count() const { return amplitudes.size(); }
  double squared_norm() const { return amplitudes.squaredNorm(); }

  /// Probability mass in the top `fraction` of levels, Sum_{l >= ceil((1-fraction)L)} |psi_l|^2.
  double tail_weight(double fraction = 0.1) const;
};

/// ||0>> on `level_count` levels.
ExcitationState ground_state(Index level_count);

/// Diagonal position operator X = diag(1, 2, ..., L).
class PositionOperator {
 public:
  explicit PositionOperator(Index level_count) : levels_(level_count) {}
  Index level_count() const { return levels_; }
  double value(Index l) const { return static_cast<double>(l + 1); }
  Eigen::MatrixXd dense() const;

 private:
  Index levels_;
};

/// Real symmetric tridiagonal operator with entries (l+1) at (l+1,l) and (l,l+1).
class MomentumOperator {
 public:
  explicit MomentumOperator(Index level_count) : levels_(level_count) {}
  Index level_count() const { return levels_; }
  Eigen::MatrixXd dense() const;

 private:
  Index levels_;
};

/// Projector onto levels l >= 2m-1 for a receiver cut at site m.
class HittingOperator {
 public:
  explicit HittingOperator(long site_m);
  long site() const { return m_; }
  Index cut_level() const { return 2 * static_cast<Index>(m_) - 1; }
  Index rank(Index level_count) const;
  /// Sum_{l >= 2m-1} |psi_l|^2.  Throws std::invalid_argument if the cut lies
  /// at or beyond the truncation (hitting mass would be silently lost).
  double weight(const ExcitationState& state) const;
  Eigen::MatrixXd dense(Index level_count) const;

 private:
  long m_;
};

/// (1 + cosh 2t) / 2.
double analytic_first_moment(double t);

/// cosh(t)^2 * cosh(2t).
double analytic_second_moment(double t);

/// Exact-integer check of the operator algebra on the truncated matrices:
/// max |entry| of  i[E,X] - P  and  i[E,P] - (4X - 2*Id), reported separately
/// over interior rows/columns (index < L-2) and over the full matrix.
struct AlgebraReport {
  std::int64_t max_interior_deviation = 0;
  std::int64_t max_full_deviation = 0;
};

/// Requires level_count >= 4.  Interior deviation is exactly zero; the
/// truncation defect is confined to the last rows/columns.
AlgebraReport verify_algebra(Index level_count);

}  // namespace bosechain
