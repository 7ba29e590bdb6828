#include "xop/special.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "xop/errors.hpp"

namespace xop {

namespace {

// Lanczos coefficients, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_sum(double x) {
  double a = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) a += kLanczos[i] / (x + static_cast<double>(i));
  return a;
}

// Ascending series, exact up to cancellation; used where terms do not grow.
double bessel_series_regular(double alpha, double z) {
  const double q = 0.25 * z * z;
  double term = 1.0 / gamma_function(alpha + 1.0);
  double sum = term;
  for (int k = 1; k < 500; ++k) {
    term *= -q / (static_cast<double>(k) * (static_cast<double>(k) + alpha));
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum) && k > q) break;
  }
  return sum;
}

// Backward (Miller) recurrence over orders alpha + k, normalized with the
// Neumann series (z/2)^alpha = sum_k (alpha+2k) Gamma(alpha+k)/k! J_{alpha+2k}(z).
double bessel_miller(double alpha, double z) {
  const int top = 2 * (static_cast<int>(std::ceil(0.6 * z + 0.5 * std::abs(alpha))) + 30);
  double f_next = 0.0;  // f_{k+1}
  double f = 1e-30;     // f_k
  double norm = 0.0;    // sum over even k >= 2 of c_{k/2} f_k
  const double lg1 = log_gamma(alpha + 1.0);
  for (int k = top; k >= 1; --k) {
    if (k % 2 == 0) {
      // c_i = (alpha + 2i) (alpha+1)_{i-1} / i!
      const int i = k / 2;
      const double log_c = std::log(alpha + static_cast<double>(k)) +
                           (log_gamma(alpha + static_cast<double>(i)) - lg1) -
                           log_gamma(static_cast<double>(i) + 1.0);
      norm += std::exp(log_c) * f;
    }
    const double f_prev = 2.0 * (alpha + static_cast<double>(k)) / z * f - f_next;
    f_next = f;
    f = f_prev;
    if (std::abs(f) > 1e250) {
      f *= 1e-250;
      f_next *= 1e-250;
      norm *= 1e-250;
    }
  }
  norm += f;  // k = 0 term, ctilde_0 = 1
  const double log_pref = alpha * std::log(0.5 * z) - lg1;
  return f / norm * std::exp(log_pref);
}

bool series_is_safe(double alpha, double z) {
  const double q = 0.25 * z * z;
  return z <= 4.0 || q <= alpha + 1.0;
}

}  // namespace

double pochhammer(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x + static_cast<double>(i);
  return r;
}

double binomial(double x, int k) {
  if (k < 0) return 0.0;
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= (x - static_cast<double>(i)) / static_cast<double>(i + 1);
  return r;
}

double gamma_function(double x) {
  if (x == std::floor(x) && x <= 0.0) return std::numeric_limits<double>::infinity();
  if (x < 0.5) return std::numbers::pi / (std::sin(std::numbers::pi * x) * gamma_function(1.0 - x));
  const double xm = x - 1.0;
  const double t = xm + kLanczosG + 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, xm + 0.5) * std::exp(-t) * lanczos_sum(xm);
}

double log_gamma(double x) {
  if (x <= 0.0) throw InvalidParameter("log_gamma requires x > 0");
  if (x < 0.5) return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) - log_gamma(1.0 - x);
  const double xm = x - 1.0;
  const double t = xm + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (xm + 0.5) * std::log(t) - t + std::log(lanczos_sum(xm));
}

double bessel_j(double alpha, double z) {
  if (!(alpha > -1.0)) throw InvalidParameter("bessel_j requires alpha > -1, got " + std::to_string(alpha));
  if (!(z >= 0.0)) throw InvalidParameter("bessel_j requires z >= 0");
  if (z == 0.0) return alpha == 0.0 ? 1.0 : (alpha > 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
  if (series_is_safe(alpha, z)) return std::pow(0.5 * z, alpha) * bessel_series_regular(alpha, z);
  return bessel_miller(alpha, z);
}

double bessel_j_regular(double alpha, double z) {
  if (!(alpha > -1.0)) throw InvalidParameter("bessel_j_regular requires alpha > -1");
  if (!(z >= 0.0)) throw InvalidParameter("bessel_j_regular requires z >= 0");
  if (series_is_safe(alpha, z)) return bessel_series_regular(alpha, z);
  return bessel_miller(alpha, z) * std::pow(0.5 * z, -alpha);
}

double bessel_hard_edge(double alpha, double z) {
  if (!(z >= 0.0)) throw InvalidParameter("bessel_hard_edge requires z >= 0");
  return bessel_j_regular(alpha, 2.0 * std::sqrt(z));
}

BesselZeroTable bessel_zeros(double alpha, int count) {
  if (!(alpha > -1.0)) throw InvalidParameter("bessel_zeros requires alpha > -1");
  BesselZeroTable table{alpha, {}};
  if (count <= 0) return table;

  auto f = [alpha](double x) { return bessel_j(alpha, x); };
  auto df = [alpha](double x) { return alpha / x * bessel_j(alpha, x) - bessel_j(alpha + 1.0, x); };

  // j_{alpha,1} > alpha for alpha > 0, and J_alpha > 0 to the left of it.
  constexpr double step = 0.25;
  double a = std::max(alpha, 1e-3);
  double fa = f(a);
  while (static_cast<int>(table.zeros.size()) < count) {
    const double b = a + step;
    const double fb = f(b);
    if (fb == 0.0) {
      table.zeros.push_back(b);
    } else if ((fa < 0.0) != (fb < 0.0)) {
      double lo = a, hi = b, flo = fa;
      double x = 0.5 * (lo + hi);
      for (int it = 0; it < 100; ++it) {
        const double fx = f(x);
        if (std::abs(fx) < 1e-15) break;
        if ((fx < 0.0) == (flo < 0.0)) {
          lo = x;
          flo = fx;
        } else {
          hi = x;
        }
        double nx = x - fx / df(x);
        if (!(nx > lo && nx < hi)) nx = 0.5 * (lo + hi);
        if (std::abs(nx - x) <= 4e-16 * x) {
          x = nx;
          break;
        }
        x = nx;
      }
      if (std::abs(f(x)) >= 1e-12) throw NumericalFailure("bessel_zeros: Newton refinement did not converge");
      table.zeros.push_back(x);
    }
    a = b;
    fa = fb;
  }
  return table;
}

}  // namespace xop
