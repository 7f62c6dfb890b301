#include "bosechain/excitation.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

namespace bosechain {

EffectiveHamiltonian::EffectiveHamiltonian(Index level_count) : levels_(level_count) {
  if (level_count < 2) {
    throw std::invalid_argument("EffectiveHamiltonian: level_count must be >= 2");
  }
}

void EffectiveHamiltonian::apply_scaled(const Vector& in, Vector& out, double scale) const {
  const Index L = levels_;
  // (E psi)_l = i*l*psi_{l-1} - i*(l+1)*psi_{l+1}
  out.resize(L);
  for (Index l = 0; l < L; ++l) {
    Complex acc(0.0, 0.0);
    if (l > 0) acc += Complex(0.0, static_cast<double>(l)) * in[l - 1];
    if (l + 1 < L) acc -= Complex(0.0, static_cast<double>(l + 1)) * in[l + 1];
    out[l] = scale * acc;
  }
}

Vector EffectiveHamiltonian::apply(const Vector& in) const {
  Vector out(levels_);
  apply_scaled(in, out, 1.0);
  return out;
}

double EffectiveHamiltonian::gershgorin_radius() const {
  // Row l has off-diagonal magnitudes l and l+1; the largest sum is at
  // l = L-2, giving 2L-3.
  return levels_ >= 2 ? static_cast<double>(2 * levels_ - 3) : 0.0;
}

Eigen::MatrixXcd EffectiveHamiltonian::dense() const {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(levels_, levels_);
  for (Index l = 0; l + 1 < levels_; ++l) {
    const double c = static_cast<double>(l + 1);
    m(l + 1, l) = Complex(0.0, c);
    m(l, l + 1) = Complex(0.0, -c);
  }
  return m;
}

double ExcitationState::tail_weight(double fraction) const {
  const Index L = amplitudes.size();
  const Index start = static_cast<Index>(std::ceil((1.0 - fraction) * static_cast<double>(L)));
  double w = 0.0;
  for (Index l = std::max<Index>(start, 0); l < L; ++l) w += std::norm(amplitudes[l]);
  return w;
}

ExcitationState ground_state(Index level_count) {
  ExcitationState s;
  s.amplitudes = Vector::Zero(level_count);
  s.amplitudes[0] = Complex(1.0, 0.0);
  s.time_stamp = 0.0;
  return s;
}

Eigen::MatrixXd PositionOperator::dense() const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(levels_, levels_);
  for (Index l = 0; l < levels_; ++l) m(l, l) = value(l);
  return m;
}

Eigen::MatrixXd MomentumOperator::dense() const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(levels_, levels_);
  for (Index l = 0; l + 1 < levels_; ++l) {
    const double c = static_cast<double>(l + 1);
    m(l + 1, l) = c;
    m(l, l + 1) = c;
  }
  return m;
}

HittingOperator::HittingOperator(long site_m) : m_(site_m) {
  if (site_m < 1) throw std::invalid_argument("HittingOperator: site must be >= 1");
}

Index HittingOperator::rank(Index level_count) const {
  const Index cut = cut_level();
  return cut < level_count ? level_count - cut : 0;
}

double HittingOperator::weight(const ExcitationState& state) const {
  const Index L = state.level_count();
  const Index cut = cut_level();
  if (cut >= L) {
    throw std::invalid_argument("HittingOperator: cut level beyond truncation");
  }
  double w = 0.0;
  for (Index l = cut; l < L; ++l) w += std::norm(state.amplitudes[l]);
  return w;
}

Eigen::MatrixXd HittingOperator::dense(Index level_count) const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(level_count, level_count);
  for (Index l = cut_level(); l < level_count; ++l) m(l, l) = 1.0;
  return m;
}

double analytic_first_moment(double t) { return 0.5 * (1.0 + std::cosh(2.0 * t)); }

double analytic_second_moment(double t) {
  const double c = std::cosh(t);
  return c * c * std::cosh(2.0 * t);
}

namespace {

// Square integer matrix stored by diagonals, enough for exact products of the
// banded operators E = iA, X, P.
class BandedInt {
 public:
  explicit BandedInt(Index n) : n_(n) {}

  static BandedInt identity(Index n) {
    BandedInt m(n);
    auto& d = m.diag(0);
    for (Index i = 0; i < n; ++i) d[i] = 1;
    return m;
  }

  Index size() const { return n_; }

  // Entry (r, c) with r = offset + c for offset >= 0, c = r - offset otherwise.
  std::vector<std::int64_t>& diag(int offset) {
    auto it = diags_.find(offset);
    if (it == diags_.end()) {
      it = diags_.emplace(offset, std::vector<std::int64_t>(static_cast<std::size_t>(n_ - std::abs(offset)), 0)).first;
    }
    return it->second;
  }

  std::int64_t at(Index r, Index c) const {
    const int off = static_cast<int>(r - c);
    auto it = diags_.find(off);
    if (it == diags_.end()) return 0;
    const Index k = std::min(r, c);
    return it->second[static_cast<std::size_t>(k)];
  }

  BandedInt mul(const BandedInt& rhs) const {
    BandedInt out(n_);
    for (const auto& [oa, da] : diags_) {
      for (const auto& [ob, db] : rhs.diags_) {
        const int oc = oa + ob;
        if (std::abs(oc) >= static_cast<int>(n_)) continue;
        auto& dc = out.diag(oc);
        // (this * rhs)[r, c] += this[r, k] * rhs[k, c] with k = r - oa = c + ob
        for (Index r = std::max<Index>({0, oc, oa}); r < n_; ++r) {
          const Index c = r - oc;
          const Index k = r - oa;
          if (c < 0 || c >= n_ || k < 0 || k >= n_) continue;
          if (k - c != ob) continue;
          const Index ia = std::min(r, k);
          const Index ib = std::min(k, c);
          const Index ic = std::min(r, c);
          if (ia >= static_cast<Index>(da.size()) || ib >= static_cast<Index>(db.size())) continue;
          dc[static_cast<std::size_t>(ic)] += da[static_cast<std::size_t>(ia)] * db[static_cast<std::size_t>(ib)];
        }
      }
    }
    return out;
  }

  BandedInt sub(const BandedInt& rhs) const {
    BandedInt out = *this;
    for (const auto& [o, d] : rhs.diags_) {
      auto& dst = out.diag(o);
      for (std::size_t i = 0; i < d.size(); ++i) dst[i] -= d[i];
    }
    return out;
  }

  BandedInt scaled(std::int64_t s) const {
    BandedInt out = *this;
    for (auto& [o, d] : out.diags_) {
      for (auto& v : d) v *= s;
    }
    return out;
  }

  std::int64_t max_abs(Index row_col_limit) const {
    std::int64_t best = 0;
    for (const auto& [o, d] : diags_) {
      for (std::size_t i = 0; i < d.size(); ++i) {
        const Index r = o >= 0 ? static_cast<Index>(i) + o : static_cast<Index>(i);
        const Index c = o >= 0 ? static_cast<Index>(i) : static_cast<Index>(i) - o;
        if (r >= row_col_limit || c >= row_col_limit) continue;
        best = std::max(best, std::abs(d[i]));
      }
    }
    return best;
  }

 private:
  Index n_;
  std::map<int, std::vector<std::int64_t>> diags_;
};

}  // namespace

AlgebraReport verify_algebra(Index level_count) {
  if (level_count < 4) throw std::invalid_argument("verify_algebra: level_count must be >= 4");
  const Index L = level_count;

  // E = i*A with A real antisymmetric, so i[E,M] = M*A - A*M for real M.
  BandedInt A(L), X(L), P(L);
  {
    auto& sub = A.diag(1);
    auto& sup = A.diag(-1);
    auto& psub = P.diag(1);
    auto& psup = P.diag(-1);
    for (Index l = 0; l + 1 < L; ++l) {
      sub[static_cast<std::size_t>(l)] = l + 1;
      sup[static_cast<std::size_t>(l)] = -(l + 1);
      psub[static_cast<std::size_t>(l)] = l + 1;
      psup[static_cast<std::size_t>(l)] = l + 1;
    }
    auto& xd = X.diag(0);
    for (Index l = 0; l < L; ++l) xd[static_cast<std::size_t>(l)] = l + 1;
  }

  const BandedInt d1 = X.mul(A).sub(A.mul(X)).sub(P);
  const BandedInt rhs = X.scaled(4).sub(BandedInt::identity(L).scaled(2));
  const BandedInt d2 = P.mul(A).sub(A.mul(P)).sub(rhs);

  AlgebraReport report;
  report.max_interior_deviation = std::max(d1.max_abs(L - 2), d2.max_abs(L - 2));
  report.max_full_deviation = std::max(d1.max_abs(L), d2.max_abs(L));
  return report;
}

}  // namespace bosechain
