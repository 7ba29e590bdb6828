#include "xop/classical.hpp"

#include <cmath>
#include <iostream>

#include "exact.hpp"

namespace xop {

bool jacobi_recurrence_singular(double a, double b, int n) {
  const double ab = a + b;
  for (int k = 2; k <= n; ++k) {
    const double kd = static_cast<double>(k);
    const double scale = 1.0 + std::abs(ab) + kd;
    if (std::abs(kd + ab) < 1e-12 * scale || std::abs(2.0 * kd + ab - 2.0) < 1e-12 * scale) return true;
  }
  return false;
}

bool jacobi_degenerate(double a, double b, int n) {
  const double s = static_cast<double>(n) + a + b + 1.0;
  for (int k = 0; k < n; ++k) {
    if (std::abs(s + static_cast<double>(k)) < 1e-12) return true;
  }
  return false;
}

Polynomial laguerre_coeffs(double alpha, int n) {
  if (n < 0) return {};
  if (n > 60) {
    std::cerr << "warning: laguerre_coeffs degree " << n << " exceeds 60, coefficients lose accuracy\n";
  }
  return detail::to_polynomial(detail::q_laguerre(mpq_class(alpha), n));
}

JacobiExpansion jacobi_expansion(double a, double b, int n) {
  if (n < 0) return {};
  return {detail::to_polynomial(detail::q_jacobi(mpq_class(a), mpq_class(b), n)), jacobi_degenerate(a, b, n)};
}

Polynomial jacobi_coeffs(double a, double b, int n) { return jacobi_expansion(a, b, n).poly; }

}  // namespace xop
