#pragma once

#include <gmpxx.h>

#include <vector>

#include "xop/polynomial.hpp"

// Exact rational polynomial arithmetic on the dyadic values of double
// parameters. Coefficient builders go through here so that each stored
// double coefficient is within one ulp of the exact value.
namespace xop::detail {

using QPoly = std::vector<mpq_class>;  // ascending

QPoly q_add(const QPoly& a, const QPoly& b);
QPoly q_sub(const QPoly& a, const QPoly& b);
QPoly q_mul(const QPoly& a, const QPoly& b);
QPoly q_scale(const QPoly& a, const mpq_class& s);
QPoly q_derivative(const QPoly& a);
/// z -> -z
QPoly q_reflect(const QPoly& a);
QPoly q_var();  // the polynomial z
QPoly q_const(const mpq_class& c);

/// L_n^alpha; zero polynomial for n < 0.
QPoly q_laguerre(const mpq_class& alpha, int n);
/// P_n^{(a,b)} by the explicit sum; zero polynomial for n < 0.
QPoly q_jacobi(const mpq_class& a, const mpq_class& b, int n);

struct QDivision {
  QPoly quotient;
  QPoly remainder;
};
/// Exact long division; throws InvalidParameter for a zero divisor.
QDivision q_divide(const QPoly& num, const QPoly& den);

Polynomial to_polynomial(const QPoly& p);

}  // namespace xop::detail
