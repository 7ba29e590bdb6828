#pragma once

#include <string>
#include <vector>

#include "xop/polynomial.hpp"

namespace xop {

struct BaseWeight {
  enum class Kind { laguerre, jacobi, legendre };
  Kind kind = Kind::legendre;
  double alpha = 0.0;
  double beta = 0.0;

  /// z^alpha e^{-z} on (0, inf)
  static BaseWeight laguerre(double alpha) { return {Kind::laguerre, alpha, 0.0}; }
  /// (1-z)^alpha (1+z)^beta on (-1, 1)
  static BaseWeight jacobi(double alpha, double beta) { return {Kind::jacobi, alpha, beta}; }
  static BaseWeight legendre() { return {Kind::legendre, 0.0, 0.0}; }

  double lo() const;
  double hi() const;
  /// Pointwise value of the base weight inside the interval.
  double operator()(double z) const;
  std::string describe() const;
};

/// W(z) = base(z) / denominator(z)^2 on (lo, hi). The denominator is
/// stored unsquared.
struct WeightSpec {
  BaseWeight base;
  Polynomial denominator;
  double lo = 0.0;
  double hi = 0.0;

  double operator()(double z) const;
};

struct QuadratureRule {
  std::vector<double> nodes;    // strictly increasing, inside (lo, hi)
  std::vector<double> weights;  // positive
  double lo = 0.0;
  double hi = 0.0;
  BaseWeight base;
  int order = 0;
};

/// Order-N Gauss rule for the base weight. Nodes are eigenvalues of the
/// Jacobi matrix polished by Newton on the three-term recurrence; weights
/// come from the Christoffel formula in log space. Laguerre nodes whose
/// weight underflows double range are dropped, so nodes.size() may be
/// smaller than `order` for large orders.
QuadratureRule gauss_rule(const BaseWeight& base, int order);

}  // namespace xop
