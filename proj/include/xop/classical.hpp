#pragma once

#include <cmath>
#include <complex>

#include "xop/polynomial.hpp"

namespace xop {

/// Explicit sum of (-1)^k binom(n+alpha, n-k) z^k / k!, coefficients built
/// downward from (-1)^n / n!.
template <class T>
T laguerre_value_explicit(double alpha, int n, T z) {
  if (n < 0) return T(0.0);
  double c = (n % 2 == 0) ? 1.0 : -1.0;
  for (int i = 2; i <= n; ++i) c /= static_cast<double>(i);
  T acc = T(c);
  for (int k = n; k >= 1; --k) {
    c *= -static_cast<double>(k) * (alpha + k) / static_cast<double>(n - k + 1);
    acc = acc * z + T(c);
  }
  return acc;
}

/// L_n^alpha(z) by the three-term recurrence in the degree, L_{-1} = 0. For
/// alpha < -1 with alpha + n < 1 the recurrence cancels badly and the
/// explicit sum is used.
template <class T>
T laguerre_value(double alpha, int n, T z) {
  if (n < 0) return T(0.0);
  if (alpha < -1.0 && alpha + n < 1.0) return laguerre_value_explicit(alpha, n, z);
  T prev = T(1.0);
  if (n == 0) return prev;
  T cur = T(alpha + 1.0) - z;
  for (int k = 1; k < n; ++k) {
    const double kd = static_cast<double>(k);
    T next = ((T(2.0 * kd + 1.0 + alpha) - z) * cur - T(kd + alpha) * prev) / T(kd + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Explicit hypergeometric sum for P_n^{(a,b)}, valid for every real a, b:
/// sum_k (n+a+b+1)_k (a+k+1)_{n-k} / (k! (n-k)!) ((z-1)/2)^k.
template <class T>
T jacobi_value_explicit(double a, double b, int n, T z) {
  if (n < 0) return T(0.0);
  const T u = (z - T(1.0)) / T(2.0);
  T acc = T(0.0);
  for (int k = n; k >= 0; --k) {
    double c = 1.0;
    for (int i = 0; i < k; ++i) c *= (static_cast<double>(n) + a + b + 1.0 + i) / static_cast<double>(i + 1);
    for (int i = 0; i < n - k; ++i) c *= (a + static_cast<double>(k) + 1.0 + i) / static_cast<double>(i + 1);
    acc = acc * u + T(c);
  }
  return acc;
}

/// True when a denominator of the three-term Jacobi recurrence up to
/// degree n is (numerically) zero.
bool jacobi_recurrence_singular(double a, double b, int n);

/// P_n^{(a,b)}(z) by the three-term recurrence, falling back to the explicit
/// sum when a recurrence denominator vanishes. P_{-1} = 0.
template <class T>
T jacobi_value(double a, double b, int n, T z) {
  if (n < 0) return T(0.0);
  if (n == 0) return T(1.0);
  if (jacobi_recurrence_singular(a, b, n)) return jacobi_value_explicit(a, b, n, z);
  T prev = T(1.0);
  T cur = T(a + 1.0) + T(a + b + 2.0) * (z - T(1.0)) / T(2.0);
  const double ab = a + b;
  for (int k = 2; k <= n; ++k) {
    const double kd = static_cast<double>(k);
    const double s = 2.0 * kd + ab;
    const double den = 2.0 * kd * (kd + ab) * (s - 2.0);
    T next = (T(s - 1.0) * (T(s * (s - 2.0)) * z + T(a * a - b * b)) * cur -
              T(2.0 * (kd + a - 1.0) * (kd + b - 1.0) * s) * prev) /
             T(den);
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Monomial coefficients of L_n^alpha. Prints a warning on stderr for
/// n > 60, where double coefficients lose accuracy.
Polynomial laguerre_coeffs(double alpha, int n);

struct JacobiExpansion {
  Polynomial poly;
  /// n+a+b+1 is one of 0, -1, ..., -(n-1), so the degree drops below n.
  bool degenerate = false;
};

/// Monomial coefficients of P_n^{(a,b)}, with the degeneracy flag.
JacobiExpansion jacobi_expansion(double a, double b, int n);
Polynomial jacobi_coeffs(double a, double b, int n);

/// n+a+b+1 in {0, -1, ..., -(n-1)} (to 1e-12).
bool jacobi_degenerate(double a, double b, int n);

}  // namespace xop
