#pragma once

#include <vector>

namespace xop {

/// Rising factorial x (x+1) ... (x+n-1); 1 for n = 0.
double pochhammer(double x, int n);

/// Generalized binomial coefficient x (x-1) ... (x-k+1) / k! for integer
/// k >= 0 and real x; zero for k < 0.
double binomial(double x, int k);

/// Lanczos approximation. Reflection formula below 1/2; poles at
/// nonpositive integers return +/-infinity.
double gamma_function(double x);
/// log Gamma(x) for x > 0.
double log_gamma(double x);

/// Bessel function of the first kind J_alpha(z), alpha > -1, z >= 0.
/// Throws InvalidParameter for alpha <= -1 or z < 0.
double bessel_j(double alpha, double z);

/// (z/2)^{-alpha} J_alpha(z), continued to z = 0 by 1/Gamma(alpha+1).
double bessel_j_regular(double alpha, double z);

/// z^{-alpha/2} J_alpha(2 sqrt(z)), the hard-edge limit of scaled Laguerre
/// polynomials; equals 1/Gamma(alpha+1) at z = 0.
double bessel_hard_edge(double alpha, double z);

struct BesselZeroTable {
  double order = 0.0;
  std::vector<double> zeros;  // ascending, positive
};

/// First `count` positive zeros of J_alpha.
BesselZeroTable bessel_zeros(double alpha, int count);

}  // namespace xop
