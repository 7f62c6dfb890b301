#include "bosechain/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace bosechain::cheb {

double bessel_tail_bound(double x, int k0) {
  if (x <= 0.0) return 0.0;
  const double k = static_cast<double>(k0);
  if (k <= x) return std::numeric_limits<double>::infinity();
  // Optimal circle radius for |J_k(x)| <= r^{-k} e^{x(r - 1/r)/2}.
  const double r = (k + std::sqrt(k * k - x * x)) / x;
  const double log_jk = 0.5 * x * (r - 1.0 / r) - k * std::log(r);
  // Terms beyond k0 shrink by at least 1/r each, so the geometric sum closes.
  return 2.0 * std::exp(log_jk) / (1.0 - 1.0 / r);
}

int degree_for(double x, double eps) {
  if (x <= 0.0) return 0;
  int lo = static_cast<int>(std::floor(x)) + 1;  // need K+1 > x
  int hi = lo + 8;
  while (bessel_tail_bound(x, hi + 1) > eps) {
    lo = hi;
    hi = 2 * hi + 16;
    if (hi > 200'000'000) throw std::invalid_argument("degree_for: tolerance unreachable");
  }
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    if (bessel_tail_bound(x, mid + 1) <= eps) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return hi;
}

std::vector<double> bessel_j_sequence(int n, double x) {
  std::vector<double> j(static_cast<std::size_t>(n) + 1, 0.0);
  if (x == 0.0) {
    j[0] = 1.0;
    return j;
  }
  const int pad = 32 + static_cast<int>(2.0 * std::sqrt(static_cast<double>(n) + x));
  const int start = n + pad;

  std::vector<double> b(static_cast<std::size_t>(start) + 2, 0.0);
  b[static_cast<std::size_t>(start) + 1] = 0.0;
  b[static_cast<std::size_t>(start)] = 1e-30;
  for (int k = start; k >= 1; --k) {
    b[static_cast<std::size_t>(k) - 1] =
        (2.0 * k / x) * b[static_cast<std::size_t>(k)] - b[static_cast<std::size_t>(k) + 1];
    if (std::abs(b[static_cast<std::size_t>(k) - 1]) > 1e250) {
      for (int i = k - 1; i <= start + 1; ++i) b[static_cast<std::size_t>(i)] *= 1e-250;
    }
  }
  // J_0 + 2 J_2 + 2 J_4 + ... = 1
  double norm = b[0];
  for (int k = 2; k <= start; k += 2) norm += 2.0 * b[static_cast<std::size_t>(k)];
  for (int k = 0; k <= n; ++k) j[static_cast<std::size_t>(k)] = b[static_cast<std::size_t>(k)] / norm;
  return j;
}

Expansion plan(double center, double radius, double t, double eps) {
  if (radius < 0.0 || eps <= 0.0) throw std::invalid_argument("cheb::plan: bad arguments");
  Expansion e;
  e.center = center;
  e.radius = radius;
  e.time = t;

  const double x = radius * std::abs(t);
  const Complex phase = std::exp(Complex(0.0, -t * center));
  if (x == 0.0) {
    e.degree = 0;
    e.coefficient_tail = 0.0;
    e.coefficients = {phase};
    return e;
  }

  e.degree = degree_for(x, eps);
  e.coefficient_tail = bessel_tail_bound(x, e.degree + 1);
  const std::vector<double> j = bessel_j_sequence(e.degree, x);

  // exp(-i t H) = e^{-i t c} Sum_k (2 - delta_k0) (-i)^k J_k(x) T_k((H-c)/r),
  // with sign(t) folded into the odd coefficients.
  const double s = t >= 0.0 ? 1.0 : -1.0;
  e.coefficients.resize(static_cast<std::size_t>(e.degree) + 1);
  Complex ik(1.0, 0.0);
  const Complex step(0.0, -s);
  for (int k = 0; k <= e.degree; ++k) {
    const double w = (k == 0) ? 1.0 : 2.0;
    e.coefficients[static_cast<std::size_t>(k)] = phase * ik * (w * j[static_cast<std::size_t>(k)]);
    ik *= step;
  }
  return e;
}

}  // namespace bosechain::cheb
