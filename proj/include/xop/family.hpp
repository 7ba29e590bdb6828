#pragma once

#include <complex>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "xop/polynomial.hpp"
#include "xop/quadrature.hpp"
#include "xop/xjacobi.hpp"
#include "xop/xlaguerre.hpp"
#include "xop/zeros.hpp"

namespace xop {

struct LagFamily {
  LagType type = LagType::I;
  double alpha = 0.0;
  int m = 0;
};

struct JacFamily {
  double alpha = 0.0;
  double beta = 0.0;
  int m = 0;
};

struct ClassicalLaguerre {
  double alpha = 0.0;
};

struct ClassicalJacobi {
  double alpha = 0.0;
  double beta = 0.0;
};

/// A polynomial family with every parameter except the degree.
using Family = std::variant<LagFamily, JacFamily, ClassicalLaguerre, ClassicalJacobi>;

/// Number of missing degrees; zero for classical families.
int codimension(const Family& f);
/// Orthogonality interval, (0, inf) or (-1, 1).
std::pair<double, double> interval(const Family& f);
bool is_laguerre(const Family& f);
std::string describe(const Family& f);

/// Degree-n member from exact coefficients. Throws InvalidParameter for
/// n below the codimension or invalid parameters.
Polynomial polynomial(const Family& f, int n);
/// Degree-n member evaluated through the classical recurrences.
double value(const Family& f, int n, double z);
std::complex<double> value(const Family& f, int n, std::complex<double> z);

/// Classical polynomial whose roots attract the exceptional zeros:
/// xi_{alpha-1,m}, eta_{alpha+1,m} or P_m^{(-alpha-1,beta-1)}; 1 for
/// classical families.
Polynomial exceptional_limit(const Family& f);

WeightSpec weight(const Family& f);

/// Zeros of the degree-n member classified against the family interval.
ZeroSet family_zeros(const Family& f, int n);

struct TypeOnePattern {
  InterlacingReport regular;      // x_1 in (0, y_1), x_i in (w_{i-1}, y_i)
  InterlacingReport exceptional;  // u_i in (s_i, t_i), u_m in (s_m, 0)
  bool holds() const { return regular.interlaces && exceptional.interlaces; }
};

/// Zero pattern of the type I polynomial with j = n - m: y, w are the zeros
/// of L_j^alpha, L_{j-1}^alpha; s, t the zeros of xi_{alpha,m},
/// xi_{alpha,m-1}; x, u the regular and negative zeros of X.
TypeOnePattern type_one_pattern(double alpha, int m, int j);

/// Strict interlacing of the regular zeros of X_n and X_{n+1}.
InterlacingReport consecutive_interlacing(const Family& f, int n);

}  // namespace xop
