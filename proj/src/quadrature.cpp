#include "xop/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "xop/classical.hpp"
#include "xop/errors.hpp"
#include "xop/special.hpp"

namespace xop {

namespace {

struct ScaledPair {
  double cur = 0.0;   // L_N / 2^shift
  double prev = 0.0;  // L_{N-1} / 2^shift
  int shift = 0;
};

// L_N^alpha(x) and L_{N-1}^alpha(x) with a common binary exponent, so large
// nodes do not overflow.
ScaledPair laguerre_pair(double alpha, int n, double x) {
  ScaledPair r{1.0, 0.0, 0};
  if (n == 0) return r;
  r.prev = 1.0;
  r.cur = alpha + 1.0 - x;
  for (int k = 1; k < n; ++k) {
    const double kd = static_cast<double>(k);
    const double next = ((2.0 * kd + 1.0 + alpha - x) * r.cur - (kd + alpha) * r.prev) / (kd + 1.0);
    r.prev = r.cur;
    r.cur = next;
    const double mag = std::max(std::abs(r.cur), std::abs(r.prev));
    if (mag > 1e100 || (mag < 1e-100 && mag > 0.0)) {
      int e = 0;
      std::frexp(mag, &e);
      r.cur = std::ldexp(r.cur, -e);
      r.prev = std::ldexp(r.prev, -e);
      r.shift += e;
    }
  }
  return r;
}

std::vector<double> tridiagonal_eigenvalues(const std::vector<double>& diag, const std::vector<double>& off) {
  const auto n = static_cast<Eigen::Index>(diag.size());
  Eigen::VectorXd d(n);
  Eigen::VectorXd e(std::max<Eigen::Index>(n - 1, 0));
  for (Eigen::Index i = 0; i < n; ++i) d[i] = diag[static_cast<std::size_t>(i)];
  for (Eigen::Index i = 0; i + 1 < n; ++i) e[i] = off[static_cast<std::size_t>(i)];
  if (n == 1) return {diag[0]};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(d, e, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalFailure("gauss_rule: tridiagonal eigensolver failed");
  std::vector<double> v(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(v.begin(), v.end());
  return v;
}

QuadratureRule laguerre_rule(double alpha, int n) {
  std::vector<double> diag(static_cast<std::size_t>(n));
  std::vector<double> off(static_cast<std::size_t>(std::max(n - 1, 0)));
  for (int k = 0; k < n; ++k) diag[static_cast<std::size_t>(k)] = 2.0 * k + alpha + 1.0;
  for (int k = 1; k < n; ++k) off[static_cast<std::size_t>(k - 1)] = std::sqrt(k * (k + alpha));
  auto nodes = tridiagonal_eigenvalues(diag, off);

  QuadratureRule rule;
  rule.base = BaseWeight::laguerre(alpha);
  rule.lo = 0.0;
  rule.hi = std::numeric_limits<double>::infinity();
  rule.order = n;
  const double nd = static_cast<double>(n);
  const double log_const = log_gamma(nd + alpha + 1.0) - log_gamma(nd + 1.0) - 2.0 * std::log(nd + alpha);
  for (double x : nodes) {
    // Newton on L_N, with x L_N' = N L_N - (N+alpha) L_{N-1}
    for (int it = 0; it < 8; ++it) {
      const auto p = laguerre_pair(alpha, n, x);
      const double dn = nd * p.cur - (nd + alpha) * p.prev;
      if (dn == 0.0) break;
      const double step = x * p.cur / dn;
      x -= step;
      if (std::abs(step) <= 1e-16 * x) break;
    }
    const auto p = laguerre_pair(alpha, n, x);
    // w = Gamma(N+a+1) x / (N! (N+a)^2 L_{N-1}(x)^2)
    const double log_w = log_const + std::log(x) -
                         2.0 * (std::log(std::abs(p.prev)) + static_cast<double>(p.shift) * std::numbers::ln2);
    const double w = std::exp(log_w);
    if (w >= std::numeric_limits<double>::min()) {
      rule.nodes.push_back(x);
      rule.weights.push_back(w);
    }
  }
  return rule;
}

QuadratureRule jacobi_rule(double a, double b, int n, const BaseWeight& base) {
  const double ab = a + b;
  std::vector<double> diag(static_cast<std::size_t>(n));
  std::vector<double> off(static_cast<std::size_t>(std::max(n - 1, 0)));
  for (int k = 0; k < n; ++k) {
    const double s = 2.0 * k + ab;
    diag[static_cast<std::size_t>(k)] = (k == 0) ? (b - a) / (ab + 2.0) : (b * b - a * a) / (s * (s + 2.0));
  }
  for (int k = 1; k < n; ++k) {
    const double kd = static_cast<double>(k);
    const double s = 2.0 * kd + ab;
    double b2;
    if (k == 1) {
      b2 = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      b2 = 4.0 * kd * (kd + a) * (kd + b) * (kd + ab) / (s * s * (s + 1.0) * (s - 1.0));
    }
    off[static_cast<std::size_t>(k - 1)] = std::sqrt(b2);
  }
  auto nodes = tridiagonal_eigenvalues(diag, off);

  QuadratureRule rule;
  rule.base = base;
  rule.lo = -1.0;
  rule.hi = 1.0;
  rule.order = n;
  const double nd = static_cast<double>(n);
  const double half = 0.5 * (nd + ab + 1.0);
  const double log_const = log_gamma(nd + a + 1.0) + log_gamma(nd + b + 1.0) - log_gamma(nd + ab + 1.0) -
                           log_gamma(nd + 1.0) + (ab + 1.0) * std::numbers::ln2;
  for (double x : nodes) {
    for (int it = 0; it < 8; ++it) {
      const double f = jacobi_value(a, b, n, x);
      const double df = half * jacobi_value(a + 1.0, b + 1.0, n - 1, x);
      if (df == 0.0) break;
      const double step = f / df;
      x -= step;
      if (std::abs(step) <= 1e-16) break;
    }
    const double df = half * jacobi_value(a + 1.0, b + 1.0, n - 1, x);
    const double w = std::exp(log_const - std::log1p(-x * x) - 2.0 * std::log(std::abs(df)));
    rule.nodes.push_back(x);
    rule.weights.push_back(w);
  }
  return rule;
}

}  // namespace

double BaseWeight::lo() const { return kind == Kind::laguerre ? 0.0 : -1.0; }

double BaseWeight::hi() const { return kind == Kind::laguerre ? std::numeric_limits<double>::infinity() : 1.0; }

double BaseWeight::operator()(double z) const {
  switch (kind) {
    case Kind::laguerre:
      return std::pow(z, alpha) * std::exp(-z);
    case Kind::jacobi:
      return std::pow(1.0 - z, alpha) * std::pow(1.0 + z, beta);
    case Kind::legendre:
      return 1.0;
  }
  return 0.0;
}

std::string BaseWeight::describe() const {
  std::ostringstream os;
  os.precision(17);
  switch (kind) {
    case Kind::laguerre:
      os << "laguerre(" << alpha << ")";
      break;
    case Kind::jacobi:
      os << "jacobi(" << alpha << "," << beta << ")";
      break;
    case Kind::legendre:
      os << "legendre";
      break;
  }
  return os.str();
}

double WeightSpec::operator()(double z) const {
  const double d = denominator(z);
  return base(z) / (d * d);
}

QuadratureRule gauss_rule(const BaseWeight& base, int order) {
  if (order < 1) throw InvalidParameter("gauss_rule requires order >= 1");
  switch (base.kind) {
    case BaseWeight::Kind::laguerre:
      if (!(base.alpha > -1.0)) throw InvalidParameter("gauss-laguerre requires alpha > -1");
      return laguerre_rule(base.alpha, order);
    case BaseWeight::Kind::jacobi:
      if (!(base.alpha > -1.0 && base.beta > -1.0)) throw InvalidParameter("gauss-jacobi requires alpha, beta > -1");
      return jacobi_rule(base.alpha, base.beta, order, base);
    case BaseWeight::Kind::legendre:
      return jacobi_rule(0.0, 0.0, order, base);
  }
  throw InvalidParameter("gauss_rule: unknown base weight");
}

}  // namespace xop
