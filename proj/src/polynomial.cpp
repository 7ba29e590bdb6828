#include "xop/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "xop/errors.hpp"

namespace xop {

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<double> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::constant(double c) { return Polynomial{c}; }

Polynomial Polynomial::monomial(int k, double c) {
  std::vector<double> v(static_cast<std::size_t>(k) + 1, 0.0);
  v.back() = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double Polynomial::operator()(double z) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::complex<double> Polynomial::operator()(std::complex<double> z) const {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double Polynomial::abs_scale(double z) const {
  double acc = 0.0;
  const double r = std::abs(z);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * r + std::abs(*it);
  return acc;
}

double Polynomial::abs_scale(std::complex<double> z) const {
  double acc = 0.0;
  const double r = std::abs(z);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * r + std::abs(*it);
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<double> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return Polynomial(std::move(d));
}

Polynomial Polynomial::reflected() const {
  auto c = coeffs_;
  for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
  return Polynomial(std::move(c));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0.0);
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0.0);
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(double s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<double> r(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) r[i + k] += a.coeffs_[i] * b.coeffs_[k];
  return Polynomial(std::move(r));
}

DivisionResult divide(const Polynomial& p, const Polynomial& d) {
  if (d.is_zero()) throw InvalidParameter("polynomial division by the zero polynomial");
  const int dp = p.degree();
  const int dd = d.degree();
  if (dp < dd) return {Polynomial{}, p};

  std::vector<double> rem(p.coeffs().begin(), p.coeffs().end());
  std::vector<double> q(static_cast<std::size_t>(dp - dd) + 1, 0.0);
  const double lead = d.leading();
  for (int k = dp - dd; k >= 0; --k) {
    const double t = rem[static_cast<std::size_t>(k + dd)] / lead;
    q[static_cast<std::size_t>(k)] = t;
    for (int i = 0; i <= dd; ++i) rem[static_cast<std::size_t>(k + i)] -= t * d[static_cast<std::size_t>(i)];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Polynomial(std::move(q)), Polynomial(std::move(rem))};
}

std::vector<double> chebyshev_points(int count, double lo, double hi) {
  std::vector<double> x(static_cast<std::size_t>(std::max(count, 1)));
  const auto n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    // descending cosines give ascending points
    const double t = -std::cos(std::numbers::pi * (static_cast<double>(i) + 0.5) / n);
    x[i] = 0.5 * (lo + hi) + 0.5 * (hi - lo) * t;
  }
  return x;
}

double relative_residual(std::span<const double> lhs, std::span<const double> rhs) {
  double diff = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < lhs.size() && i < rhs.size(); ++i) {
    diff = std::max(diff, std::abs(lhs[i] - rhs[i]));
    scale = std::max({scale, std::abs(lhs[i]), std::abs(rhs[i])});
  }
  if (scale == 0.0) return diff;
  return diff / scale;
}

}  // namespace xop
