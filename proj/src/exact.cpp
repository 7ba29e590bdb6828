#include "exact.hpp"

#include <algorithm>

#include "xop/errors.hpp"

namespace xop::detail {

namespace {

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace

QPoly q_add(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < a.size(); ++k) r[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) r[k] += b[k];
  trim(r);
  return r;
}

QPoly q_sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < a.size(); ++k) r[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) r[k] -= b[k];
  trim(r);
  return r;
}

QPoly q_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) r[i + k] += a[i] * b[k];
  trim(r);
  return r;
}

QPoly q_scale(const QPoly& a, const mpq_class& s) {
  QPoly r(a);
  for (auto& c : r) c *= s;
  trim(r);
  return r;
}

QPoly q_derivative(const QPoly& a) {
  QPoly r;
  for (std::size_t k = 1; k < a.size(); ++k) r.push_back(a[k] * static_cast<unsigned long>(k));
  trim(r);
  return r;
}

QPoly q_reflect(const QPoly& a) {
  QPoly r(a);
  for (std::size_t k = 1; k < r.size(); k += 2) r[k] = -r[k];
  return r;
}

QPoly q_var() { return {mpq_class(0), mpq_class(1)}; }

QPoly q_const(const mpq_class& c) {
  QPoly r{c};
  trim(r);
  return r;
}

QPoly q_laguerre(const mpq_class& alpha, int n) {
  if (n < 0) return {};
  QPoly c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    // (-1)^k binom(n+alpha, n-k) / k!
    mpq_class v = 1;
    for (int i = 0; i < n - k; ++i) v *= (alpha + (k + 1 + i)) / mpq_class(i + 1);
    for (int i = 1; i <= k; ++i) v /= i;
    c[static_cast<std::size_t>(k)] = (k % 2 == 0) ? v : mpq_class(-v);
  }
  trim(c);
  return c;
}

QPoly q_jacobi(const mpq_class& a, const mpq_class& b, int n) {
  if (n < 0) return {};
  const QPoly u{mpq_class(-1, 2), mpq_class(1, 2)};
  QPoly acc;
  for (int k = n; k >= 0; --k) {
    mpq_class c = 1;
    for (int i = 0; i < k; ++i) c *= (a + b + (n + 1 + i)) / mpq_class(i + 1);
    for (int i = 0; i < n - k; ++i) c *= (a + (k + 1 + i)) / mpq_class(i + 1);
    acc = q_add(q_mul(acc, u), q_const(c));
  }
  return acc;
}

QDivision q_divide(const QPoly& num, const QPoly& den) {
  QPoly d = den;
  trim(d);
  if (d.empty()) throw InvalidParameter("division by the zero polynomial");
  QPoly r = num;
  trim(r);
  if (r.size() < d.size()) return {{}, r};
  QPoly q(r.size() - d.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    const mpq_class c = r[k + d.size() - 1] / d.back();
    q[k] = c;
    for (std::size_t i = 0; i < d.size(); ++i) r[k + i] -= c * d[i];
  }
  r.resize(d.size() - 1);
  trim(r);
  trim(q);
  return {q, r};
}

Polynomial to_polynomial(const QPoly& p) {
  std::vector<double> c(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) c[k] = p[k].get_d();
  return Polynomial(std::move(c));
}

}  // namespace xop::detail
