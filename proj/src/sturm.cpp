#include "xop/sturm.hpp"

#include <gmpxx.h>

#include <cmath>
#include <limits>
#include <vector>

#include "xop/errors.hpp"

namespace xop {

namespace {

using IntPoly = std::vector<mpz_class>;  // ascending, no trailing zeros

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

// Scale double coefficients by a common power of two to integers.
IntPoly to_integer(const Polynomial& p) {
  const auto c = p.coeffs();
  int emin = std::numeric_limits<int>::max();
  for (double v : c) {
    if (v == 0.0) continue;
    int e = 0;
    std::frexp(v, &e);
    emin = std::min(emin, e - 53);
  }
  IntPoly out(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0.0) continue;
    int e = 0;
    const double f = std::frexp(c[k], &e);
    mpz_class m(std::ldexp(f, 53));  // exact 53-bit integer
    const int shift = e - 53 - emin;
    mpz_mul_2exp(m.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    out[k] = m;
  }
  trim(out);
  return out;
}

void make_primitive(IntPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

IntPoly derivative(const IntPoly& p) {
  IntPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<unsigned long>(k));
  trim(d);
  return d;
}

// Negated remainder of a by b, up to a positive factor,
// which preserves the sign pattern needed by the Sturm sequence.
IntPoly negated_remainder(IntPoly a, const IntPoly& b) {
  const int db = degree(b);
  const mpz_class& lc = b.back();
  mpz_class lc_abs = abs(lc);
  while (degree(a) >= db && !a.empty()) {
    // a <- |lc| a - sgn(lc) a_top x^{da-db} b, multiplier |lc| > 0
    const int shift = degree(a) - db;
    const mpz_class top = a.back();
    for (auto& c : a) c *= lc_abs;
    const mpz_class f = sgn(lc) > 0 ? top : mpz_class(-top);
    for (int i = 0; i <= db; ++i) a[static_cast<std::size_t>(i + shift)] -= f * b[static_cast<std::size_t>(i)];
    a.pop_back();
    trim(a);
    make_primitive(a);
  }
  for (auto& c : a) c = -c;
  return a;
}

struct Dyadic {
  mpz_class mant;
  long shift = 0;  // value = mant / 2^shift, shift >= 0
};

Dyadic to_dyadic(double x) {
  int e = 0;
  const double f = std::frexp(x, &e);
  Dyadic d;
  d.mant = mpz_class(std::ldexp(f, 53));
  long s = 53 - e;
  if (s < 0) {
    mpz_mul_2exp(d.mant.get_mpz_t(), d.mant.get_mpz_t(), static_cast<mp_bitcnt_t>(-s));
    s = 0;
  }
  d.shift = s;
  return d;
}

// Sign of p(M / 2^s) via Horner on p(x) 2^{s d}.
int exact_sign(const IntPoly& p, const Dyadic& x) {
  if (p.empty()) return 0;
  const int d = degree(p);
  mpz_class acc = p.back();
  mpz_class term;
  for (int k = d - 1; k >= 0; --k) {
    acc *= x.mant;
    mpz_mul_2exp(term.get_mpz_t(), p[static_cast<std::size_t>(k)].get_mpz_t(),
                 static_cast<mp_bitcnt_t>(x.shift * (d - k)));
    acc += term;
  }
  return sgn(acc);
}

}  // namespace

struct SturmSequence::Impl {
  std::vector<IntPoly> seq;

  int sign_at_inf(const IntPoly& p, bool positive) const {
    const int s = sgn(p.back());
    return (positive || degree(p) % 2 == 0) ? s : -s;
  }

  int variations(double x) const {
    int v = 0;
    int last = 0;
    const bool inf = std::isinf(x);
    const Dyadic dx = inf ? Dyadic{} : to_dyadic(x);
    for (const auto& p : seq) {
      const int s = inf ? sign_at_inf(p, x > 0) : exact_sign(p, dx);
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  }
};

SturmSequence::SturmSequence(const Polynomial& p) : impl_(std::make_unique<Impl>()) {
  if (p.is_zero()) throw InvalidParameter("Sturm sequence of the zero polynomial");
  IntPoly p0 = to_integer(p);
  make_primitive(p0);
  impl_->seq.push_back(p0);
  if (degree(p0) == 0) return;
  IntPoly p1 = derivative(p0);
  make_primitive(p1);
  impl_->seq.push_back(p1);
  while (degree(impl_->seq.back()) > 0) {
    const auto& a = impl_->seq[impl_->seq.size() - 2];
    const auto& b = impl_->seq.back();
    IntPoly r = negated_remainder(a, b);
    if (r.empty()) break;
    impl_->seq.push_back(std::move(r));
  }
}

SturmSequence::~SturmSequence() = default;
SturmSequence::SturmSequence(SturmSequence&&) noexcept = default;
SturmSequence& SturmSequence::operator=(SturmSequence&&) noexcept = default;

int SturmSequence::count(double lo, double hi) const {
  if (!(lo < hi)) return 0;
  return impl_->variations(lo) - impl_->variations(hi);
}

int SturmSequence::count_all() const {
  return count(-std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity());
}

int SturmSequence::sign_at(double x) const { return exact_sign(impl_->seq.front(), to_dyadic(x)); }

int count_real_roots(const Polynomial& p, double lo, double hi) {
  const SturmSequence s(p);
  int c = s.count(lo, hi);
  if (std::isfinite(hi) && lo < hi && s.sign_at(hi) == 0) --c;
  return c;
}

}  // namespace xop
