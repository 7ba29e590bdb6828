#pragma once

#include <complex>

#include "xop/classical.hpp"
#include "xop/polynomial.hpp"
#include "xop/quadrature.hpp"

namespace xop {

enum class LagType { I, II };

/// One exceptional Laguerre polynomial X_{m,n}^{alpha}, j = n - m.
/// Construction validates: n >= m >= 0; type I alpha >= 0; type II
/// alpha > m - 1.
struct LagParams {
  LagType type;
  double alpha;
  int m;
  int n;

  LagParams(LagType type, double alpha, int m, int n);
  int j() const { return n - m; }
};

/// xi_{alpha,m}(z) = L_m^alpha(-z); zero for m = -1.
Polynomial xi(double alpha, int m);
/// eta_{alpha,m}(z) = L_m^{-alpha}(z); zero for m = -1.
Polynomial eta(double alpha, int m);

/// Type I: xi_{alpha,m} L_j^alpha - xi_{alpha,m-1} L_{j-1}^alpha.
Polynomial xlag1(const LagParams& p);
/// Type II: -z L_{m-1}^{-alpha} L_j^{alpha+1} - (alpha+1+j) L_m^{-alpha-1} L_j^alpha.
Polynomial xlag2(const LagParams& p);
/// Type II dual form: z L_m^{-alpha-1} L_{j-1}^{alpha+2} + (m-alpha-1) L_m^{-alpha-2} L_j^{alpha+1}.
Polynomial xlag2_dual(const LagParams& p);
/// Dispatch on p.type.
Polynomial xlag(const LagParams& p);

/// Pointwise values through the classical recurrences, no coefficients.
template <class T>
T xlag1_value(double alpha, int m, int j, T z) {
  return laguerre_value(alpha, m, -z) * laguerre_value(alpha, j, z) -
         laguerre_value(alpha, m - 1, -z) * laguerre_value(alpha, j - 1, z);
}

template <class T>
T xlag2_value(double alpha, int m, int j, T z) {
  return -z * laguerre_value(-alpha, m - 1, z) * laguerre_value(alpha + 1.0, j, z) -
         T(alpha + 1.0 + j) * laguerre_value(-alpha - 1.0, m, z) * laguerre_value(alpha, j, z);
}

double xlag_value(const LagParams& p, double z);
std::complex<double> xlag_value(const LagParams& p, std::complex<double> z);

/// Base laguerre(alpha), denominator xi_{alpha-1,m} (type I) or
/// eta_{alpha+1,m} (type II), interval (0, inf). Throws InvalidParameter if
/// the denominator has a root in [0, inf).
WeightSpec xlag_weight(const LagParams& p);

/// Closed forms at z = 0.
double xlag1_at_zero(const LagParams& p);
double xlag2_at_zero(const LagParams& p);
/// Closed form of the type II leading coefficient.
double xlag2_leading(const LagParams& p);

/// Type I eigen-equation multiplied through by xi_{alpha-1,m}.
double xlag1_eigen_residual(const LagParams& p);
/// Type II eigen-equation multiplied through by eta_{alpha+1,m}.
double xlag2_eigen_residual(const LagParams& p);
/// X' - X = (alpha+1+j-m) L_m^{-alpha-1} L_j^{alpha+1}.
double xlag2_lowering_residual(const LagParams& p);

struct ShapeResiduals {
  double lower = 0.0;  // zero when the lowering check does not apply (j = 0)
  double raise = 0.0;
};

/// lower: X' eta_{alpha+2,m} - X eta'_{alpha+2,m} = -eta_{alpha+1,m} X^{alpha+1}_{m,n-1}.
/// raise: with Y = X^{alpha+1}_{m,n},
///   d/dz(e^{-z} z^{alpha+1} Y / eta_{alpha+1,m})
///     = (j+1) e^{-z} z^alpha eta_{alpha+2,m} X^alpha_{m,n+1} / eta_{alpha+1,m}^2
/// at 20 positive points.
ShapeResiduals xlag2_shape_residuals(const LagParams& p);

/// Type II constructor against its dual form.
double xlag2_dual_residual(const LagParams& p);
/// xi_{alpha,m} L_j^{alpha-1} + xi_{alpha-1,m} L_{j-1}^alpha against the type I constructor.
double xlag1_proof_chain_residual(const LagParams& p);
/// Remainder of (z X' + alpha X) / xi_{alpha-1,m}, relative to the dividend.
double xlag1_flag_residual(const LagParams& p);
/// Finite-difference log-derivative of the evaluated type II weight against
/// alpha/z - 1 - 2 eta'/eta at 10 interior points.
double xlag2_pearson_residual(const LagParams& p);

}  // namespace xop
