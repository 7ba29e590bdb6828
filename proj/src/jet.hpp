#pragma once

#include <cmath>
#include <vector>

#include "xop/classical.hpp"

namespace xop::detail {

// Value with first and second derivative, enough for second-order operators.
struct Jet {
  double v = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

inline Jet operator+(Jet a, Jet b) { return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2}; }
inline Jet operator-(Jet a, Jet b) { return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2}; }
inline Jet operator*(double s, Jet a) { return {s * a.v, s * a.d1, s * a.d2}; }
inline Jet operator*(Jet a, Jet b) { return {a.v * b.v, a.d1 * b.v + a.v * b.d1, a.d2 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d2}; }

inline Jet variable(double z) { return {z, 1.0, 0.0}; }

// L_n^a at z, using (L_n^a)' = -L_{n-1}^{a+1}.
inline Jet laguerre_jet(double a, int n, double z) {
  return {laguerre_value(a, n, z), -laguerre_value(a + 1.0, n - 1, z), laguerre_value(a + 2.0, n - 2, z)};
}

// L_n^a(-z) as a function of z.
inline Jet laguerre_reflected_jet(double a, int n, double z) {
  return {laguerre_value(a, n, -z), laguerre_value(a + 1.0, n - 1, -z), laguerre_value(a + 2.0, n - 2, -z)};
}

// P_n^{(a,b)} at z, using (P_n^{(a,b)})' = (n+a+b+1)/2 P_{n-1}^{(a+1,b+1)}.
inline Jet jacobi_jet(double a, double b, int n, double z) {
  const double c1 = 0.5 * (n + a + b + 1.0);
  const double c2 = c1 * 0.5 * (n + a + b + 2.0);
  return {jacobi_value(a, b, n, z), c1 * jacobi_value(a + 1.0, b + 1.0, n - 1, z),
          c2 * jacobi_value(a + 2.0, b + 2.0, n - 2, z)};
}

// max_i |sum_k t_ik| / max_{i,k} |t_ik|, over sample rows of identity terms.
inline double term_residual(const std::vector<std::vector<double>>& rows) {
  double num = 0.0;
  double den = 0.0;
  for (const auto& row : rows) {
    double s = 0.0;
    for (double t : row) {
      s += t;
      den = std::max(den, std::abs(t));
    }
    num = std::max(num, std::abs(s));
  }
  return den == 0.0 ? num : num / den;
}

// max_i |sum_k t_ik| / sum_k |t_ik|, normalized point by point.
inline double pointwise_term_residual(const std::vector<std::vector<double>>& rows) {
  double worst = 0.0;
  for (const auto& row : rows) {
    double s = 0.0;
    double a = 0.0;
    for (double t : row) {
      s += t;
      a += std::abs(t);
    }
    if (a > 0.0) worst = std::max(worst, std::abs(s) / a);
  }
  return worst;
}

}  // namespace xop::detail
