#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace xop {

/// Dense univariate polynomial with real coefficients, stored in ascending
/// order: coeffs()[k] multiplies z^k. The zero polynomial has no
/// coefficients; otherwise the highest stored coefficient is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coeffs);
  Polynomial(std::initializer_list<double> coeffs);

  static Polynomial constant(double c);
  /// c * z^k
  static Polynomial monomial(int k, double c = 1.0);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const double> coeffs() const { return coeffs_; }
  /// Coefficient of z^k; zero beyond the degree.
  double operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : 0.0; }
  double leading() const { return coeffs_.empty() ? 0.0 : coeffs_.back(); }

  double operator()(double z) const;
  std::complex<double> operator()(std::complex<double> z) const;

  /// Sum of |c_k| |z|^k, the natural scale for rounding error in p(z).
  double abs_scale(double z) const;
  double abs_scale(std::complex<double> z) const;

  Polynomial derivative() const;
  /// z -> p(-z)
  Polynomial reflected() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(double s);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial p, double s) { return p *= s; }
  friend Polynomial operator*(double s, Polynomial p) { return p *= s; }
  friend Polynomial operator-(Polynomial p) { return p *= -1.0; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<double> coeffs_;
};

struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};

/// Euclidean division p = q d + r with deg r < deg d. Throws
/// InvalidParameter when d is the zero polynomial.
DivisionResult divide(const Polynomial& p, const Polynomial& d);

/// `count` Chebyshev points of the first kind mapped to [lo, hi], ascending.
std::vector<double> chebyshev_points(int count, double lo, double hi);

/// max |lhs - rhs| / max(max |lhs|, max |rhs|). Returns 0 when both sides
/// vanish identically.
double relative_residual(std::span<const double> lhs, std::span<const double> rhs);

}  // namespace xop
