#pragma once

#include <complex>
#include <string>

#include "xop/polynomial.hpp"
#include "xop/quadrature.hpp"

namespace xop {

enum class AdmissibilityClass { A, B, inadmissible };
enum class InadmissibleReason { none, beta_zero, outside_classes, degenerate_integer };

struct Admissibility {
  AdmissibilityClass cls = AdmissibilityClass::inadmissible;
  InadmissibleReason reason = InadmissibleReason::none;

  bool ok() const { return cls != AdmissibilityClass::inadmissible; }
  std::string describe() const;
};

/// Class A: beta and alpha+1-m in (-1, 0). Class B: both positive. In
/// addition alpha+1-m-beta must avoid {0, ..., m-1} and beta != 0. For
/// m = 0 only alpha, beta > -1 is required (reported as class B).
Admissibility admissible(double alpha, double beta, int m);

/// One exceptional Jacobi polynomial, j = n - m. Inadmissible parameters
/// are accepted and flagged.
struct JacParams {
  double alpha;
  double beta;
  int m;
  int n;
  Admissibility admissibility;

  JacParams(double alpha, double beta, int m, int n);
  int j() const { return n - m; }
};

/// X^{(alpha,beta)}_{m,n} from the representation in P_j^{(alpha,beta)},
/// P_{j-1}^{(alpha,beta)}, P_{m-1}^{(-alpha,beta)}, P_m^{(-alpha-2,beta)},
/// P_m^{(-alpha-1,beta-1)}. When alpha+beta+2j vanishes the symmetric form
/// (alpha+1+j) P_j^{(alpha,beta)} P_m^{(-alpha-1,beta-1)}
///   - (z-1) P_j^{(alpha+1,beta-1)} (P_m^{(-alpha-1,beta-1)})'
/// is used instead. Throws InvalidParameter when alpha+1+j = 0.
Polynomial xjac(const JacParams& p);

/// The symmetric form above, times (-1)^m / (alpha+1+j), always.
Polynomial xjac_symmetric(const JacParams& p);

/// Pointwise value through the classical recurrences.
double xjac_value(double alpha, double beta, int m, int j, double z);
std::complex<double> xjac_value(double alpha, double beta, int m, int j, std::complex<double> z);

/// Base jacobi(alpha, beta), denominator P_m^{(-alpha-1,beta-1)}, interval
/// (-1, 1). Throws InvalidParameter for inadmissible parameters.
WeightSpec xjac_weight(const JacParams& p);

/// Closed forms at z = 1 and z = -1.
double xjac_at_plus_one(const JacParams& p);
double xjac_at_minus_one(const JacParams& p);

/// Eigen-equation multiplied through by P_m^{(-alpha-1,beta-1)}:
/// Pm ((1-z^2) X'' + (beta-alpha-(alpha+beta+2) z) X' + ((alpha-beta-m+1) m + j (1+alpha+beta+j)) X)
///   - 2 Pm' (beta (1-z) X + (1-z^2) X') = 0.
double xjac_eigen_residual(const JacParams& p);
/// (-1)^m (alpha+1+j) (beta X + (z+1) X')
///   = (alpha+1-m+j)(beta+m+j) P_m^{(-alpha-1,beta-1)} P_j^{(alpha+1,beta-1)}.
double xjac_b_identity_residual(const JacParams& p);

struct JacShapeResiduals {
  double lower = 0.0;  // zero when the lowering check does not apply (j = 0)
  double raise = 0.0;
};

/// lower: X' Pl - X Pl' = ((j+alpha+beta+1)/2) Pm X^{(alpha+1,beta+1)}_{m,n-1},
/// with Pl = P_m^{(-alpha-2,beta)}, Pm = P_m^{(-alpha-1,beta-1)}.
/// raise: with Y = X^{(alpha+1,beta+1)}_{m,n},
///   (1-z)^{-alpha}(1+z)^{-beta} d/dz((1-z)^{alpha+1}(1+z)^{beta+1} Y / Pm)
///     = -2 (j+1) Pl X^{(alpha,beta)}_{m,n+1} / Pm^2
/// weighted by (1-z)^alpha (1+z)^beta at 20 interior points.
JacShapeResiduals xjac_shape_residuals(const JacParams& p);

/// Normative constructor against the symmetric forms.
double xjac_symmetric_residual(const JacParams& p);
/// Remainder of ((1+z) X' + beta X) / P_m^{(-alpha-1,beta-1)}, relative to the dividend.
double xjac_flag_residual(const JacParams& p);
/// (z-1) (P_j^{(a,b)})' = -a P_j^{(a,b)} + (a+j) P_j^{(a-1,b+1)}.
double jacobi_helper_residual(double a, double b, int j);
/// binom(a+m, m) P_n^{(a,b)} = binom(a+n, n) P_m^{(a,b)} with b = -1-m-n-a.
double jacobi_degenerate_residual(double a, int m, int n);

}  // namespace xop
