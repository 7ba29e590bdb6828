#include "xop/xlaguerre.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "exact.hpp"
#include "jet.hpp"
#include "xop/errors.hpp"
#include "xop/special.hpp"
#include "xop/sturm.hpp"

namespace xop {

using detail::Jet;
using detail::laguerre_jet;
using detail::laguerre_reflected_jet;

namespace {

std::vector<double> sample_grid(const LagParams& p) {
  const int count = 2 * p.n + p.m + 3;
  return chebyshev_points(count, 0.0, 4.0 * std::max(p.n, 1));
}

Jet xlag1_jet(double a, int m, int j, double z) {
  return laguerre_reflected_jet(a, m, z) * laguerre_jet(a, j, z) -
         laguerre_reflected_jet(a, m - 1, z) * laguerre_jet(a, j - 1, z);
}

Jet xlag2_jet(double a, int m, int j, double z) {
  return -1.0 * (detail::variable(z) * laguerre_jet(-a, m - 1, z) * laguerre_jet(a + 1.0, j, z)) -
         (a + 1.0 + j) * (laguerre_jet(-a - 1.0, m, z) * laguerre_jet(a, j, z));
}

detail::QPoly q_xi(const mpq_class& a, int m) { return detail::q_reflect(detail::q_laguerre(a, m)); }

detail::QPoly q_xlag1(const LagParams& p) {
  const mpq_class a(p.alpha);
  const int j = p.j();
  return detail::q_sub(detail::q_mul(q_xi(a, p.m), detail::q_laguerre(a, j)),
                       detail::q_mul(q_xi(a, p.m - 1), detail::q_laguerre(a, j - 1)));
}

std::string describe(const LagParams& p) {
  std::ostringstream os;
  os.precision(17);
  os << (p.type == LagType::I ? "type I" : "type II") << " (alpha=" << p.alpha << ", m=" << p.m << ", n=" << p.n
     << ")";
  return os.str();
}

}  // namespace

LagParams::LagParams(LagType type_, double alpha_, int m_, int n_) : type(type_), alpha(alpha_), m(m_), n(n_) {
  if (!std::isfinite(alpha)) throw InvalidParameter("alpha must be finite");
  if (m < 0) throw InvalidParameter("codimension m must be nonnegative");
  if (n < m) throw InvalidParameter("degree n must satisfy n >= m, got " + describe(*this));
  if (type == LagType::I && !(alpha >= 0.0)) throw InvalidParameter("type I requires alpha >= 0, got " + describe(*this));
  if (type == LagType::II && !(alpha > m - 1.0))
    throw InvalidParameter("type II requires alpha > m - 1, got " + describe(*this));
}

Polynomial xi(double alpha, int m) { return detail::to_polynomial(q_xi(mpq_class(alpha), m)); }

Polynomial eta(double alpha, int m) { return detail::to_polynomial(detail::q_laguerre(mpq_class(-alpha), m)); }

Polynomial xlag1(const LagParams& p) { return detail::to_polynomial(q_xlag1(p)); }

Polynomial xlag2(const LagParams& p) {
  using namespace detail;
  const mpq_class a(p.alpha);
  const int j = p.j();
  const auto t1 = q_mul(q_mul(q_var(), q_laguerre(-a, p.m - 1)), q_laguerre(a + 1, j));
  const auto t2 = q_scale(q_mul(q_laguerre(-a - 1, p.m), q_laguerre(a, j)), a + 1 + j);
  return to_polynomial(q_scale(q_add(t1, t2), -1));
}

Polynomial xlag2_dual(const LagParams& p) {
  using namespace detail;
  const mpq_class a(p.alpha);
  const int j = p.j();
  const auto t1 = q_mul(q_mul(q_var(), q_laguerre(-a - 1, p.m)), q_laguerre(a + 2, j - 1));
  const auto t2 = q_scale(q_mul(q_laguerre(-a - 2, p.m), q_laguerre(a + 1, j)), mpq_class(p.m) - a - 1);
  return to_polynomial(q_add(t1, t2));
}

Polynomial xlag(const LagParams& p) { return p.type == LagType::I ? xlag1(p) : xlag2(p); }

double xlag_value(const LagParams& p, double z) {
  return p.type == LagType::I ? xlag1_value(p.alpha, p.m, p.j(), z) : xlag2_value(p.alpha, p.m, p.j(), z);
}

std::complex<double> xlag_value(const LagParams& p, std::complex<double> z) {
  return p.type == LagType::I ? xlag1_value(p.alpha, p.m, p.j(), z) : xlag2_value(p.alpha, p.m, p.j(), z);
}

WeightSpec xlag_weight(const LagParams& p) {
  WeightSpec w;
  w.base = BaseWeight::laguerre(p.alpha);
  w.denominator = p.type == LagType::I ? xi(p.alpha - 1.0, p.m) : eta(p.alpha + 1.0, p.m);
  w.lo = 0.0;
  w.hi = std::numeric_limits<double>::infinity();
  if (w.denominator.is_zero()) throw InvalidParameter("weight denominator vanishes identically for " + describe(p));
  if (w.denominator.degree() >= 1) {
    const SturmSequence s(w.denominator);
    if (s.sign_at(0.0) == 0 || s.count(0.0, w.hi) != 0)
      throw InvalidParameter("weight denominator has a root in [0, inf) for " + describe(p));
  }
  return w;
}

double xlag1_at_zero(const LagParams& p) {
  const double a = p.alpha;
  const int m = p.m;
  const int j = p.j();
  if (m == 0) return pochhammer(a + 1.0, j) / std::tgamma(j + 1.0);
  return (a + j + m) * pochhammer(a + 1.0, m - 1) / std::tgamma(m + 1.0) * pochhammer(a, j) / std::tgamma(j + 1.0);
}

double xlag2_at_zero(const LagParams& p) {
  const double a = p.alpha;
  const int m = p.m;
  const int j = p.j();
  return (m + 1.0) * binomial(a + j + 1.0, j) * binomial(m - a - 1.0, m + 1);
}

double xlag2_leading(const LagParams& p) {
  const int m = p.m;
  const int j = p.j();
  const double sign = ((m + j) % 2 == 0) ? 1.0 : -1.0;
  return sign * (m - 1.0 - j - p.alpha) / (std::tgamma(m + 1.0) * std::tgamma(j + 1.0));
}

double xlag1_eigen_residual(const LagParams& p) {
  const double a = p.alpha;
  const int m = p.m;
  const int j = p.j();
  std::vector<std::vector<double>> rows;
  for (double z : sample_grid(p)) {
    const Jet x = xlag1_jet(a, m, j, z);
    const Jet q = laguerre_reflected_jet(a - 1.0, m, z);
    rows.push_back({q.v * z * x.d2, q.v * (a + 1.0 - z) * x.d1, q.v * (m + j) * x.v, -2.0 * q.d1 * z * x.d1,
                    -2.0 * q.d1 * a * x.v});
  }
  return detail::term_residual(rows);
}

double xlag2_eigen_residual(const LagParams& p) {
  const double a = p.alpha;
  const int m = p.m;
  const int j = p.j();
  std::vector<std::vector<double>> rows;
  for (double z : sample_grid(p)) {
    const Jet x = xlag2_jet(a, m, j, z);
    const Jet e = laguerre_jet(-a - 1.0, m, z);
    rows.push_back({e.v * z * x.d2, e.v * (a + 1.0 - z) * x.d1, e.v * (j - m) * x.v, 2.0 * z * e.d1 * x.v,
                    -2.0 * z * e.d1 * x.d1});
  }
  return detail::term_residual(rows);
}

double xlag2_lowering_residual(const LagParams& p) {
  const double a = p.alpha;
  const int m = p.m;
  const int j = p.j();
  const double c = a + 1.0 + j - m;
  std::vector<std::vector<double>> rows;
  for (double z : sample_grid(p)) {
    const Jet x = xlag2_jet(a, m, j, z);
    rows.push_back({x.d1, -x.v, -c * laguerre_value(-a - 1.0, m, z) * laguerre_value(a + 1.0, j, z)});
  }
  return detail::term_residual(rows);
}

ShapeResiduals xlag2_shape_residuals(const LagParams& p) {
  const double a = p.alpha;
  const int m = p.m;
  const int j = p.j();
  ShapeResiduals r;
  if (j >= 1) {
    std::vector<std::vector<double>> rows;
    for (double z : sample_grid(p)) {
      const Jet x = xlag2_jet(a, m, j, z);
      const Jet e2 = laguerre_jet(-a - 2.0, m, z);
      const double e1 = laguerre_value(-a - 1.0, m, z);
      rows.push_back({x.d1 * e2.v, -x.v * e2.d1, e1 * xlag2_value(a + 1.0, m, j - 1, z)});
    }
    r.lower = detail::term_residual(rows);
  }
  std::vector<std::vector<double>> rows;
  const double hi = 4.0 * std::max(p.n, 1);
  for (int i = 1; i <= 20; ++i) {
    const double z = hi * i / 21.0;
    const Jet y = xlag2_jet(a + 1.0, m, j, z);
    const Jet e1 = laguerre_jet(-a - 1.0, m, z);
    const double e2 = laguerre_value(-a - 2.0, m, z);
    const double w = std::exp(-z) * std::pow(z, a);
    const double rhs = (j + 1.0) * w * e2 * xlag2_value(a, m, j + 1, z) / (e1.v * e1.v);
    rows.push_back({w * (a + 1.0 - z) * y.v / e1.v, w * z * y.d1 / e1.v, -w * z * y.v * e1.d1 / (e1.v * e1.v), -rhs});
  }
  r.raise = detail::pointwise_term_residual(rows);
  return r;
}

double xlag2_dual_residual(const LagParams& p) {
  const double a = p.alpha;
  const int m = p.m;
  const int j = p.j();
  std::vector<std::vector<double>> rows;
  for (double z : sample_grid(p)) {
    const double d = z * laguerre_value(-a - 1.0, m, z) * laguerre_value(a + 2.0, j - 1, z);
    const double e = (m - a - 1.0) * laguerre_value(-a - 2.0, m, z) * laguerre_value(a + 1.0, j, z);
    const double f = -z * laguerre_value(-a, m - 1, z) * laguerre_value(a + 1.0, j, z);
    const double g = -(a + 1.0 + j) * laguerre_value(-a - 1.0, m, z) * laguerre_value(a, j, z);
    rows.push_back({f, g, -d, -e});
  }
  return detail::term_residual(rows);
}

double xlag1_proof_chain_residual(const LagParams& p) {
  const double a = p.alpha;
  const int m = p.m;
  const int j = p.j();
  std::vector<std::vector<double>> rows;
  for (double z : sample_grid(p)) {
    const double u = laguerre_value(a, m, -z) * laguerre_value(a - 1.0, j, z);
    const double v = laguerre_value(a - 1.0, m, -z) * laguerre_value(a, j - 1, z);
    const double x1 = laguerre_value(a, m, -z) * laguerre_value(a, j, z);
    const double x2 = -laguerre_value(a, m - 1, -z) * laguerre_value(a, j - 1, z);
    rows.push_back({u, v, -x1, -x2});
  }
  return detail::term_residual(rows);
}

double xlag1_flag_residual(const LagParams& p) {
  using namespace detail;
  const QPoly x = q_xlag1(p);
  const QPoly qnum = q_add(q_mul(q_var(), q_derivative(x)), q_scale(x, mpq_class(p.alpha)));
  const Polynomial r = to_polynomial(q_divide(qnum, q_xi(mpq_class(p.alpha) - 1, p.m)).remainder);
  const Polynomial num = to_polynomial(qnum);
  double rmax = 0.0;
  double nmax = 0.0;
  for (double z : sample_grid(p)) {
    rmax = std::max(rmax, std::abs(r(z)));
    nmax = std::max(nmax, std::abs(num(z)));
  }
  return nmax == 0.0 ? rmax : rmax / nmax;
}

double xlag2_pearson_residual(const LagParams& p) {
  const WeightSpec w = xlag_weight(LagParams(LagType::II, p.alpha, p.m, p.m));
  const Polynomial e = eta(p.alpha + 1.0, p.m);
  const Polynomial de = e.derivative();
  double worst = 0.0;
  const double hi = 2.0 * p.n + 10.0;
  for (int i = 1; i <= 10; ++i) {
    const double z = hi * i / 11.0;
    const double h = 1e-5 * z;
    const double fd = (std::log(w(z + h)) - std::log(w(z - h))) / (2.0 * h);
    // (hq - p') / p with p = z, hq = (1 + alpha - z) - 2 z eta'/eta
    const double log_term = 2.0 * z * de(z) / e(z);
    const double hq = (1.0 + p.alpha - z) - log_term;
    const double analytic = (hq - 1.0) / z;
    const double scale = (std::abs(p.alpha) + z + std::abs(log_term)) / z;
    worst = std::max(worst, std::abs(fd - analytic) / scale);
  }
  return worst;
}

}  // namespace xop
