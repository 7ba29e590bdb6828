#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "xop/classical.hpp"
#include "xop/errors.hpp"
#include "xop/polynomial.hpp"
#include "xop/quadrature.hpp"
#include "xop/special.hpp"

using namespace xop;
using doctest::Approx;

namespace {

double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const Polynomial p{2.0, -1.0};
  CHECK(p.degree() == 1);
  CHECK(p.derivative() == Polynomial{-1.0});
  CHECK(Polynomial{1.0, 1.0} * Polynomial{1.0, -1.0} == Polynomial{1.0, 0.0, -1.0});
  CHECK(Polynomial{0.0, 0.0}.is_zero());
  CHECK(Polynomial{1.0, 2.0, 0.0}.degree() == 1);
  CHECK((Polynomial{1.0, 2.0} - Polynomial{1.0, 2.0}).is_zero());
  CHECK(Polynomial{1.0, 2.0, 3.0}.reflected() == Polynomial{1.0, -2.0, 3.0});
  CHECK(Polynomial{1.0, 2.0, 3.0}(2.0) == 17.0);
  const std::complex<double> i(0.0, 1.0);
  CHECK(std::abs(Polynomial{1.0, 0.0, 1.0}(i)) == 0.0);
}

TEST_CASE("polynomial division") {
  const auto [q, r] = divide(Polynomial{-1.0, 0.0, 1.0}, Polynomial{-1.0, 1.0});
  CHECK(q == Polynomial{1.0, 1.0});
  CHECK(r.is_zero());
  const auto [q2, r2] = divide(Polynomial{1.0, 0.0, 1.0}, Polynomial{0.0, 1.0});
  CHECK(q2 == Polynomial{0.0, 1.0});
  CHECK(r2 == Polynomial{1.0});
  CHECK_THROWS_AS(divide(Polynomial{1.0}, Polynomial{}), InvalidParameter);
}

TEST_CASE("chebyshev points") {
  const auto pts = chebyshev_points(7, -1.0, 3.0);
  REQUIRE(pts.size() == 7);
  for (std::size_t k = 1; k < pts.size(); ++k) CHECK(pts[k] > pts[k - 1]);
  CHECK(pts.front() > -1.0);
  CHECK(pts.back() < 3.0);
  CHECK(pts[3] == Approx(1.0).epsilon(1e-15));
}

TEST_CASE("pochhammer and binomial") {
  CHECK(pochhammer(7.2, 0) == 1.0);
  CHECK(pochhammer(3.0, 2) == 12.0);
  CHECK(pochhammer(0.5, 3) == 1.875);
  CHECK(binomial(5.0, 2) == 10.0);
  CHECK(binomial(-0.5, 2) == Approx(0.375));
  CHECK(binomial(3.0, -1) == 0.0);
}

TEST_CASE("gamma function") {
  CHECK(rel_err(gamma_function(30.5), 4.8226969334909086011e31) < 1e-13);
  CHECK(rel_err(gamma_function(-2.5), -0.94530872048294188123) < 1e-13);
  CHECK(gamma_function(5.0) == Approx(24.0).epsilon(1e-14));
  CHECK(log_gamma(30.5) == Approx(std::log(4.8226969334909086011e31)).epsilon(1e-14));
}

TEST_CASE("bessel functions") {
  CHECK(bessel_j(0.0, 0.0) == 1.0);
  CHECK(bessel_j(2.5, 0.0) == 0.0);
  CHECK(std::abs(bessel_j(0.0, 2.404825557695773)) < 1e-10);
  CHECK(rel_err(bessel_j(5.5, 7.3), 0.35540263859150506841) < 1e-13);
  CHECK(rel_err(bessel_j(0.0, 10.0), -0.2459357644513483352) < 1e-13);
  CHECK(rel_err(bessel_j(14.01, 18.9), 0.0016571859420747529135) < 1e-12);
  CHECK(rel_err(bessel_j(0.5, 40.0), 0.094000962389533577555) < 1e-12);
  CHECK(bessel_hard_edge(2.0, 0.0) == Approx(0.5).epsilon(1e-15));
  CHECK(bessel_j_regular(3.0, 0.0) == Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK(rel_err(bessel_hard_edge(1.5, 4.0), std::pow(4.0, -0.75) * bessel_j(1.5, 4.0)) < 1e-14);
  CHECK_THROWS_AS(bessel_j(-1.0, 1.0), InvalidParameter);
  CHECK_THROWS_AS(bessel_j(1.0, -1.0), InvalidParameter);
}

TEST_CASE("bessel zeros") {
  CHECK(bessel_zeros(0.0, 1).zeros[0] == Approx(2.404825557695773).epsilon(1e-14));
  const auto three = bessel_zeros(0.0, 3).zeros;
  REQUIRE(three.size() == 3);
  CHECK(three[0] < three[1]);
  CHECK(three[1] < three[2]);
  const double z55 = bessel_zeros(5.5, 1).zeros[0];
  CHECK(z55 > 5.5);
  CHECK(z55 < 13.5);
  CHECK(rel_err(z55, 9.3558121110427461714) < 1e-14);
  CHECK(rel_err(bessel_zeros(14.01, 1).zeros[0], 18.910961976500305473) < 1e-14);
  CHECK(rel_err(bessel_zeros(3.5, 3).zeros[2], 13.698023153249249) < 1e-14);
}

TEST_CASE("laguerre values and coefficients") {
  CHECK(laguerre_value(0.0, 0, 7.3) == 1.0);
  CHECK(laguerre_value(0.0, 2, 0.0) == 1.0);
  CHECK(laguerre_value(1.0, 1, 2.0) == 0.0);
  CHECK(laguerre_value(1.0, -1, 2.0) == 0.0);
  CHECK(rel_err(laguerre_value(3.5, 10, 2.7), 10.458770141914073814) < 1e-13);
  CHECK(rel_err(laguerre_value(-15.01, 15, 0.3), -0.00094974480647043298224) < 1e-13);
  CHECK(rel_err(laguerre_value(5.5, 30, 12.25), 671.95655718002334007) < 1e-12);
  CHECK(laguerre_coeffs(1.0, 1) == Polynomial{2.0, -1.0});
  CHECK(laguerre_coeffs(0.0, 0) == Polynomial{1.0});
  CHECK(laguerre_coeffs(0.0, 2) == Polynomial{1.0, -2.0, 0.5});
  const Polynomial l = laguerre_coeffs(3.5, 10);
  CHECK(rel_err(l(2.7), 10.458770141914073814) < 1e-12);
}

TEST_CASE("jacobi values and coefficients") {
  CHECK(jacobi_value(2.0, 1.0, 0, 0.3) == 1.0);
  CHECK(jacobi_value(2.0, 1.0, 2, 1.0) == Approx(6.0).epsilon(1e-15));
  CHECK(jacobi_value(2.0, 1.0, 2, -1.0) == Approx(3.0).epsilon(1e-15));
  CHECK(rel_err(jacobi_value(2.5, -0.5, 7, 0.3), 1.0216355703124999747) < 1e-13);
  CHECK(rel_err(jacobi_value(-3.75, 0.5, 5, 0.2), 0.071245195312499994965) < 1e-12);
  CHECK(rel_err(jacobi_value(0.75, -0.5, 12, -0.9), 0.13825912899037957458) < 1e-12);
  CHECK(rel_err(jacobi_value_explicit(2.5, -0.5, 7, 0.3), 1.0216355703124999747) < 1e-13);
  const Polynomial p = jacobi_coeffs(2.5, -0.5, 7);
  CHECK(rel_err(p(0.3), 1.0216355703124999747) < 1e-12);
  CHECK(jacobi_coeffs(2.0, 1.0, 1) == Polynomial{0.5, 2.5});
}

TEST_CASE("jacobi degenerate parameters") {
  CHECK(jacobi_degenerate(0.5, -6.5, 4));
  CHECK_FALSE(jacobi_degenerate(2.0, 1.0, 4));
  CHECK(jacobi_recurrence_singular(-1.5, -0.5, 3));
  const double via_recurrence = jacobi_value(-1.5, -0.5, 3, 0.4);
  CHECK(via_recurrence == Approx(jacobi_value_explicit(-1.5, -0.5, 3, 0.4)).epsilon(1e-14));
}

TEST_CASE("gauss rules") {
  const QuadratureRule leg = gauss_rule(BaseWeight::legendre(), 1);
  REQUIRE(leg.nodes.size() == 1);
  CHECK(std::abs(leg.nodes[0]) < 1e-15);
  CHECK(leg.weights[0] == Approx(2.0).epsilon(1e-15));

  const QuadratureRule l2 = gauss_rule(BaseWeight::laguerre(0.0), 2);
  REQUIRE(l2.nodes.size() == 2);
  CHECK(l2.nodes[0] == Approx(2.0 - std::sqrt(2.0)).epsilon(1e-14));
  CHECK(l2.nodes[1] == Approx(2.0 + std::sqrt(2.0)).epsilon(1e-14));

  const QuadratureRule l10 = gauss_rule(BaseWeight::laguerre(0.0), 10);
  double factorial = 1.0;
  for (int k = 0; k <= 19; ++k) {
    if (k > 0) factorial *= k;
    double s = 0.0;
    for (std::size_t i = 0; i < l10.nodes.size(); ++i) s += l10.weights[i] * std::pow(l10.nodes[i], k);
    CHECK(rel_err(s, factorial) < 1e-10);
  }

  const QuadratureRule jac = gauss_rule(BaseWeight::jacobi(0.75, -0.5), 30);
  double sum = 0.0;
  for (double w : jac.weights) sum += w;
  const double mass = std::pow(2.0, 1.25) * gamma_function(1.75) * gamma_function(0.5) / gamma_function(2.25);
  CHECK(rel_err(sum, mass) < 1e-12);
  CHECK_THROWS_AS(gauss_rule(BaseWeight::laguerre(-1.5), 10), InvalidParameter);
}

TEST_CASE("weight spec") {
  WeightSpec w{BaseWeight::laguerre(1.0), Polynomial{1.0, 1.0}, 0.0, INFINITY};
  CHECK(w(1.0) == Approx(std::exp(-1.0) / 4.0).epsilon(1e-15));
}
