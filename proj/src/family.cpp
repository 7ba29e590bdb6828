#include "xop/family.hpp"

#include <limits>
#include <sstream>

#include "xop/classical.hpp"
#include "xop/errors.hpp"

namespace xop {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

template <class T>
T value_impl(const Family& f, int n, T z) {
  return std::visit(
      overloaded{
          [&](const LagFamily& g) {
            const LagParams p(g.type, g.alpha, g.m, n);
            return g.type == LagType::I ? xlag1_value(g.alpha, g.m, p.j(), z) : xlag2_value(g.alpha, g.m, p.j(), z);
          },
          [&](const JacFamily& g) {
            const JacParams p(g.alpha, g.beta, g.m, n);
            return T(xjac_value(g.alpha, g.beta, g.m, p.j(), z));
          },
          [&](const ClassicalLaguerre& g) { return laguerre_value(g.alpha, n, z); },
          [&](const ClassicalJacobi& g) { return jacobi_value(g.alpha, g.beta, n, z); },
      },
      f);
}

}  // namespace

int codimension(const Family& f) {
  return std::visit(overloaded{
                        [](const LagFamily& g) { return g.m; },
                        [](const JacFamily& g) { return g.m; },
                        [](const auto&) { return 0; },
                    },
                    f);
}

bool is_laguerre(const Family& f) {
  return std::holds_alternative<LagFamily>(f) || std::holds_alternative<ClassicalLaguerre>(f);
}

std::pair<double, double> interval(const Family& f) {
  if (is_laguerre(f)) return {0.0, std::numeric_limits<double>::infinity()};
  return {-1.0, 1.0};
}

std::string describe(const Family& f) {
  std::ostringstream os;
  os.precision(17);
  std::visit(overloaded{
                 [&](const LagFamily& g) {
                   os << (g.type == LagType::I ? "lag1" : "lag2") << " alpha=" << g.alpha << " m=" << g.m;
                 },
                 [&](const JacFamily& g) { os << "jacobi alpha=" << g.alpha << " beta=" << g.beta << " m=" << g.m; },
                 [&](const ClassicalLaguerre& g) { os << "classical-laguerre alpha=" << g.alpha; },
                 [&](const ClassicalJacobi& g) { os << "classical-jacobi alpha=" << g.alpha << " beta=" << g.beta; },
             },
             f);
  return os.str();
}

Polynomial polynomial(const Family& f, int n) {
  if (n < 0) throw InvalidParameter("degree must be nonnegative");
  return std::visit(overloaded{
                        [&](const LagFamily& g) { return xlag(LagParams(g.type, g.alpha, g.m, n)); },
                        [&](const JacFamily& g) { return xjac(JacParams(g.alpha, g.beta, g.m, n)); },
                        [&](const ClassicalLaguerre& g) { return laguerre_coeffs(g.alpha, n); },
                        [&](const ClassicalJacobi& g) { return jacobi_coeffs(g.alpha, g.beta, n); },
                    },
                    f);
}

double value(const Family& f, int n, double z) { return value_impl(f, n, z); }

std::complex<double> value(const Family& f, int n, std::complex<double> z) { return value_impl(f, n, z); }

Polynomial exceptional_limit(const Family& f) {
  return std::visit(overloaded{
                        [](const LagFamily& g) {
                          return g.type == LagType::I ? xi(g.alpha - 1.0, g.m) : eta(g.alpha + 1.0, g.m);
                        },
                        [](const JacFamily& g) { return jacobi_coeffs(-g.alpha - 1.0, g.beta - 1.0, g.m); },
                        [](const auto&) { return Polynomial::constant(1.0); },
                    },
                    f);
}

WeightSpec weight(const Family& f) {
  return std::visit(
      overloaded{
          [](const LagFamily& g) { return xlag_weight(LagParams(g.type, g.alpha, g.m, g.m)); },
          [](const JacFamily& g) { return xjac_weight(JacParams(g.alpha, g.beta, g.m, g.m)); },
          [](const ClassicalLaguerre& g) {
            if (!(g.alpha > -1.0)) throw InvalidParameter("classical Laguerre weight requires alpha > -1");
            return WeightSpec{BaseWeight::laguerre(g.alpha), Polynomial::constant(1.0), 0.0,
                              std::numeric_limits<double>::infinity()};
          },
          [](const ClassicalJacobi& g) {
            if (!(g.alpha > -1.0 && g.beta > -1.0))
              throw InvalidParameter("classical Jacobi weight requires alpha, beta > -1");
            return WeightSpec{BaseWeight::jacobi(g.alpha, g.beta), Polynomial::constant(1.0), -1.0, 1.0};
          },
      },
      f);
}

ZeroSet family_zeros(const Family& f, int n) {
  const auto [lo, hi] = interval(f);
  const Polynomial p = polynomial(f, n);
  if (p.degree() < 1) return classify({}, lo, hi);
  return zero_set(p, lo, hi);
}

TypeOnePattern type_one_pattern(double alpha, int m, int j) {
  const LagParams p(LagType::I, alpha, m, m + j);
  const double inf = std::numeric_limits<double>::infinity();
  const ZeroSet z = zero_set(xlag1(p), 0.0, inf);
  TypeOnePattern out;

  const std::vector<double> y = j >= 1 ? real_roots(laguerre_coeffs(alpha, j), 0.0, inf) : std::vector<double>{};
  const std::vector<double> w = j >= 2 ? real_roots(laguerre_coeffs(alpha, j - 1), 0.0, inf) : std::vector<double>{};
  std::vector<double> left{0.0};
  left.insert(left.end(), w.begin(), w.end());
  left.resize(y.size());
  out.regular = bracket_report(z.regular, left, y);

  std::vector<double> u = z.exceptional_real;
  if (!z.exceptional_complex.empty()) {
    out.exceptional.interlaces = false;
    out.exceptional.violations.push_back("type I polynomial has non-real zeros");
    return out;
  }
  const std::vector<double> s = m >= 1 ? real_roots(xi(alpha, m), -inf, 0.0) : std::vector<double>{};
  std::vector<double> t = m >= 2 ? real_roots(xi(alpha, m - 1), -inf, 0.0) : std::vector<double>{};
  t.push_back(0.0);
  t.resize(s.size());
  out.exceptional = bracket_report(u, s, t);
  return out;
}

InterlacingReport consecutive_interlacing(const Family& f, int n) {
  return interlacing_report(family_zeros(f, n).regular, family_zeros(f, n + 1).regular);
}

}  // namespace xop
