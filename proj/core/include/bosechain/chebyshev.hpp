#pragma once

#include <vector>

#include "bosechain/excitation.hpp"

namespace bosechain::cheb {

/// Expansion of exp(-i*t*H) in Chebyshev polynomials of (H - center)/radius,
/// valid for Hermitian H with spectrum inside [center - radius, center + radius].
/// `coefficient_tail` is a rigorous bound on Sum_{k > degree} |c_k|, i.e. on
/// the truncation error in the vector 2-norm for any admissible H.
struct Expansion {
  double center = 0.0;
  double radius = 0.0;
  double time = 0.0;
  int degree = 0;
  double coefficient_tail = 0.0;
  std::vector<Complex> coefficients;
};

/// Rigorous bound on Sum_{k >= k0} 2|J_k(x)| from the Cauchy integral estimate
/// |J_k(x)| <= r^{-k} exp(x (r - 1/r) / 2) optimized over r > 1; requires k0 > x.
double bessel_tail_bound(double x, int k0);

/// Smallest degree K with bessel_tail_bound(x, K+1) <= eps.
int degree_for(double x, double eps);

/// J_0(x)..J_n(x) by Miller's downward recurrence.
std::vector<double> bessel_j_sequence(int n, double x);

/// Plan coefficients for exp(-i*t*H) on [center - radius, center + radius]
/// with truncation error at most eps.
Expansion plan(double center, double radius, double t, double eps);

/// y = Sum_k c_k T_k((H - center)/radius) v with out-of-place matvec
/// apply(in, out) computing out = H*in.
template <class Apply>
Vector expv(const Expansion& e, Apply&& apply, const Vector& v) {
  const double inv_r = e.radius > 0.0 ? 1.0 / e.radius : 0.0;
  const double shift = e.center * inv_r;

  Vector prev = v;
  Vector y = e.coefficients[0] * prev;
  if (e.degree == 0) return y;

  Vector curr(v.size());
  Vector tmp(v.size());
  // curr = ((H - c)/r) v
  apply(prev, curr);
  curr *= inv_r;
  if (shift != 0.0) curr -= shift * prev;
  y += e.coefficients[1] * curr;

  for (int k = 2; k <= e.degree; ++k) {
    apply(curr, tmp);
    tmp *= 2.0 * inv_r;
    if (shift != 0.0) tmp -= (2.0 * shift) * curr;
    tmp -= prev;
    prev.swap(curr);
    curr.swap(tmp);
    y += e.coefficients[k] * curr;
  }
  return y;
}

}  // namespace bosechain::cheb
