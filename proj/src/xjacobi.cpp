#include "xop/xjacobi.hpp"

#include <cmath>
#include <sstream>

#include "exact.hpp"
#include "jet.hpp"
#include "xop/classical.hpp"
#include "xop/errors.hpp"
#include "xop/special.hpp"
#include "xop/sturm.hpp"

namespace xop {

using detail::Jet;

namespace {

bool near_zero(double x, double scale) { return std::abs(x) <= 1e-12 * (1.0 + std::abs(scale)); }

bool use_symmetric_route(double a, double b, int j) {
  return j > 0 && near_zero(a + b + 2.0 * j, std::abs(a) + std::abs(b) + 2.0 * j);
}

void check_denominators(double a, double b, int j) {
  if (near_zero(a + 1.0 + j, std::abs(a) + j)) {
    std::ostringstream os;
    os.precision(17);
    os << "degenerate denominator: alpha+1+j = 0 (alpha=" << a << ", beta=" << b << ", j=" << j << ")";
    throw InvalidParameter(os.str());
  }
}

// Shared form of the constructor, generic in the value type V (double,
// complex, Jet). P(a, b, n) evaluates P_n^{(a,b)}; zm1 is z - 1.
template <class V, class PF>
V combine(double a, double b, int m, int j, const PF& P, const V& zm1) {
  check_denominators(a, b, j);
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  const double d = 1.0 + a + j;
  if (use_symmetric_route(a, b, j)) {
    const double c = 0.5 * (m - a - 1.0 + b - 1.0 + 1.0);
    const V dpm = c * P(-a, b, m - 1);  // (P_m^{(-a-1,b-1)})'
    const V s = P(a, b, j) * P(-a - 1.0, b - 1.0, m) - (1.0 / d) * (zm1 * P(a + 1.0, b - 1.0, j) * dpm);
    return sign * s;
  }
  V s = ((1.0 + a - m) / d) * (P(-2.0 - a, b, m) * P(a, b, j)) + (j / d) * (P(-a - 1.0, b - 1.0, m) * P(a, b, j));
  if (j > 0) {
    const double e = a + b + 2.0 * j;
    const V inner = (j / e) * P(a, b, j) - ((a + j) / e) * P(a, b, j - 1);
    s = s + ((a - b - m + 1.0) / d) * (P(-a, b, m - 1) * inner);
  }
  return sign * s;
}

Jet xjac_jet(double a, double b, int m, int j, double z) {
  auto P = [z](double aa, double bb, int n) { return detail::jacobi_jet(aa, bb, n, z); };
  return combine(a, b, m, j, P, Jet{z - 1.0, 1.0, 0.0});
}

std::vector<double> sample_grid(const JacParams& p) { return chebyshev_points(2 * (p.m + p.n) + 3, -1.0, 1.0); }

detail::QPoly q_jac(const mpq_class& a, const mpq_class& b, int n) { return detail::q_jacobi(a, b, n); }

detail::QPoly q_symmetric(double a, double b, int m, int j) {
  using namespace detail;
  const mpq_class qa(a);
  const mpq_class qb(b);
  const mpq_class d = qa + 1 + j;
  const QPoly pm = q_jac(-qa - 1, qb - 1, m);
  const QPoly zm1{mpq_class(-1), mpq_class(1)};
  QPoly s = q_sub(q_mul(q_jac(qa, qb, j), pm), q_scale(q_mul(q_mul(zm1, q_jac(qa + 1, qb - 1, j)), q_derivative(pm)), 1 / d));
  return (m % 2 == 0) ? s : q_scale(s, -1);
}

detail::QPoly q_xjac(const JacParams& p) {
  using namespace detail;
  const double a = p.alpha;
  const double b = p.beta;
  const int m = p.m;
  const int j = p.j();
  check_denominators(a, b, j);
  if (use_symmetric_route(a, b, j)) return q_symmetric(a, b, m, j);
  const mpq_class qa(a);
  const mpq_class qb(b);
  const mpq_class d = qa + 1 + j;
  const QPoly pj = q_jac(qa, qb, j);
  QPoly s = q_mul(q_add(q_scale(q_jac(-2 - qa, qb, m), (1 + qa - m) / d), q_scale(q_jac(-qa - 1, qb - 1, m), mpq_class(j) / d)), pj);
  if (j > 0) {
    const mpq_class e = qa + qb + 2 * j;
    const QPoly inner = q_sub(q_scale(pj, mpq_class(j) / e), q_scale(q_jac(qa, qb, j - 1), (qa + j) / e));
    s = q_add(s, q_scale(q_mul(q_jac(-qa, qb, m - 1), inner), (qa - qb - m + 1) / d));
  }
  if (m % 2 != 0) s = q_scale(s, -1);
  return s;
}

std::string describe(const JacParams& p) {
  std::ostringstream os;
  os.precision(17);
  os << "(alpha=" << p.alpha << ", beta=" << p.beta << ", m=" << p.m << ", n=" << p.n << ")";
  return os.str();
}

}  // namespace

std::string Admissibility::describe() const {
  switch (cls) {
    case AdmissibilityClass::A:
      return "class A";
    case AdmissibilityClass::B:
      return "class B";
    case AdmissibilityClass::inadmissible:
      break;
  }
  switch (reason) {
    case InadmissibleReason::beta_zero:
      return "inadmissible: beta = 0 is excluded";
    case InadmissibleReason::outside_classes:
      return "inadmissible: (beta, alpha+1-m) outside classes A and B";
    case InadmissibleReason::degenerate_integer:
      return "inadmissible: alpha+1-m-beta in {0, ..., m-1} (degenerate)";
    case InadmissibleReason::none:
      break;
  }
  return "inadmissible";
}

Admissibility admissible(double alpha, double beta, int m) {
  Admissibility r;
  if (m == 0) {
    if (alpha > -1.0 && beta > -1.0) {
      r.cls = AdmissibilityClass::B;
    } else {
      r.reason = InadmissibleReason::outside_classes;
    }
    return r;
  }
  if (beta == 0.0) {
    r.reason = InadmissibleReason::beta_zero;
    return r;
  }
  const double s = alpha + 1.0 - m;
  AdmissibilityClass cls = AdmissibilityClass::inadmissible;
  if (beta > -1.0 && beta < 0.0 && s > -1.0 && s < 0.0) cls = AdmissibilityClass::A;
  if (beta > 0.0 && s > 0.0) cls = AdmissibilityClass::B;
  if (cls == AdmissibilityClass::inadmissible) {
    r.reason = InadmissibleReason::outside_classes;
    return r;
  }
  const double d = s - beta;
  const double k = std::round(d);
  if (std::abs(d - k) <= 1e-12 * (1.0 + std::abs(d)) && k >= 0.0 && k <= m - 1.0) {
    r.reason = InadmissibleReason::degenerate_integer;
    return r;
  }
  r.cls = cls;
  return r;
}

JacParams::JacParams(double alpha_, double beta_, int m_, int n_)
    : alpha(alpha_), beta(beta_), m(m_), n(n_), admissibility(admissible(alpha_, beta_, m_)) {
  if (!std::isfinite(alpha) || !std::isfinite(beta)) throw InvalidParameter("alpha and beta must be finite");
  if (m < 0) throw InvalidParameter("codimension m must be nonnegative");
  if (n < m) throw InvalidParameter("degree n must satisfy n >= m, got " + describe(*this));
}

Polynomial xjac(const JacParams& p) { return detail::to_polynomial(q_xjac(p)); }

Polynomial xjac_symmetric(const JacParams& p) {
  check_denominators(p.alpha, p.beta, p.j());
  return detail::to_polynomial(q_symmetric(p.alpha, p.beta, p.m, p.j()));
}

double xjac_value(double alpha, double beta, int m, int j, double z) {
  auto P = [z](double aa, double bb, int n) { return jacobi_value(aa, bb, n, z); };
  return combine(alpha, beta, m, j, P, z - 1.0);
}

std::complex<double> xjac_value(double alpha, double beta, int m, int j, std::complex<double> z) {
  auto P = [z](double aa, double bb, int n) { return jacobi_value(aa, bb, n, z); };
  return combine(alpha, beta, m, j, P, z - 1.0);
}

WeightSpec xjac_weight(const JacParams& p) {
  if (!p.admissibility.ok())
    throw InvalidParameter("exceptional Jacobi weight " + describe(p) + ": " + p.admissibility.describe());
  WeightSpec w;
  w.base = BaseWeight::jacobi(p.alpha, p.beta);
  w.denominator = jacobi_coeffs(-p.alpha - 1.0, p.beta - 1.0, p.m);
  w.lo = -1.0;
  w.hi = 1.0;
  if (w.denominator.is_zero()) throw InvalidParameter("weight denominator vanishes identically for " + describe(p));
  if (w.denominator.degree() >= 1) {
    const SturmSequence s(w.denominator);
    if (s.sign_at(-1.0) == 0 || s.sign_at(1.0) == 0 || s.count(-1.0, 1.0) != 0)
      throw NumericalFailure("weight denominator has a root in [-1, 1] for admissible " + describe(p));
  }
  return w;
}

double xjac_at_plus_one(const JacParams& p) {
  const int m = p.m;
  const int j = p.j();
  return pochhammer(p.alpha + 1.0 - m, m + j) / (std::tgamma(m + 1.0) * std::tgamma(j + 1.0));
}

double xjac_at_minus_one(const JacParams& p) {
  const double a = p.alpha;
  const double b = p.beta;
  const int m = p.m;
  const int j = p.j();
  const double sign = (j % 2 == 0) ? 1.0 : -1.0;
  if (m == 0) return sign * pochhammer(b + 1.0, j) / std::tgamma(j + 1.0);
  return sign * (b + j + m) * (1.0 + a - m + j) / (1.0 + a + j) * pochhammer(b + 1.0, m - 1) * pochhammer(b, j) /
         (std::tgamma(m + 1.0) * std::tgamma(j + 1.0));
}

double xjac_eigen_residual(const JacParams& p) {
  const double a = p.alpha;
  const double b = p.beta;
  const int m = p.m;
  const int j = p.j();
  const double lambda = (a - b - m + 1.0) * m + j * (1.0 + a + b + j);
  std::vector<std::vector<double>> rows;
  for (double z : sample_grid(p)) {
    const Jet x = xjac_jet(a, b, m, j, z);
    const Jet pm = detail::jacobi_jet(-a - 1.0, b - 1.0, m, z);
    rows.push_back({pm.v * (1.0 - z * z) * x.d2, pm.v * (b - a - (a + b + 2.0) * z) * x.d1, pm.v * lambda * x.v,
                    -2.0 * pm.d1 * b * (1.0 - z) * x.v, -2.0 * pm.d1 * (1.0 - z * z) * x.d1});
  }
  return detail::term_residual(rows);
}

double xjac_b_identity_residual(const JacParams& p) {
  const double a = p.alpha;
  const double b = p.beta;
  const int m = p.m;
  const int j = p.j();
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  const double c = (a + 1.0 - m + j) * (b + m + j);
  std::vector<std::vector<double>> rows;
  for (double z : sample_grid(p)) {
    const Jet x = xjac_jet(a, b, m, j, z);
    rows.push_back({sign * (a + 1.0 + j) * b * x.v, sign * (a + 1.0 + j) * (z + 1.0) * x.d1,
                    -c * jacobi_value(-a - 1.0, b - 1.0, m, z) * jacobi_value(a + 1.0, b - 1.0, j, z)});
  }
  return detail::term_residual(rows);
}

JacShapeResiduals xjac_shape_residuals(const JacParams& p) {
  const double a = p.alpha;
  const double b = p.beta;
  const int m = p.m;
  const int j = p.j();
  JacShapeResiduals r;
  if (j >= 1) {
    const double c = 0.5 * (j + a + b + 1.0);
    std::vector<std::vector<double>> rows;
    for (double z : sample_grid(p)) {
      const Jet x = xjac_jet(a, b, m, j, z);
      const Jet pl = detail::jacobi_jet(-a - 2.0, b, m, z);
      const double pm = jacobi_value(-a - 1.0, b - 1.0, m, z);
      rows.push_back({x.d1 * pl.v, -x.v * pl.d1, -c * pm * xjac_value(a + 1.0, b + 1.0, m, j - 1, z)});
    }
    r.lower = detail::term_residual(rows);
  }
  std::vector<std::vector<double>> rows;
  for (int i = 1; i <= 20; ++i) {
    const double z = -1.0 + 2.0 * i / 21.0;
    const Jet y = xjac_jet(a + 1.0, b + 1.0, m, j, z);
    const Jet pm = detail::jacobi_jet(-a - 1.0, b - 1.0, m, z);
    const double pl = jacobi_value(-a - 2.0, b, m, z);
    const double w = std::pow(1.0 - z, a) * std::pow(1.0 + z, b);
    const double pm2 = pm.v * pm.v;
    rows.push_back({w * (1.0 - z * z) * y.d1 / pm.v, -w * (1.0 - z * z) * y.v * pm.d1 / pm2,
                    w * (-(a + 1.0) * (1.0 + z) + (b + 1.0) * (1.0 - z)) * y.v / pm.v,
                    2.0 * (j + 1.0) * w * pl * xjac_value(a, b, m, j + 1, z) / pm2});
  }
  r.raise = detail::pointwise_term_residual(rows);
  return r;
}

double xjac_symmetric_residual(const JacParams& p) {
  const double a = p.alpha;
  const double b = p.beta;
  const int m = p.m;
  const int j = p.j();
  check_denominators(a, b, j);
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  const double d = a + 1.0 + j;
  const double cm = 0.5 * (m - a - 1.0 + b - 1.0 + 1.0);
  const double cj = 0.5 * (j + a + 1.0 + b - 1.0 + 1.0);
  double worst = 0.0;
  std::vector<std::vector<double>> rows1;
  std::vector<std::vector<double>> rows2;
  for (double z : sample_grid(p)) {
    const double x = sign * d * xjac_value(a, b, m, j, z);
    const double pm = jacobi_value(-a - 1.0, b - 1.0, m, z);
    const double pj1 = jacobi_value(a + 1.0, b - 1.0, j, z);
    // first form: (alpha+1-m) P_m^{(-alpha-2,beta)} P_j^{(alpha+1,beta-1)} + (z-1) Pm (P_j^{(alpha+1,beta-1)})'
    rows1.push_back({(a + 1.0 - m) * jacobi_value(-a - 2.0, b, m, z) * pj1,
                     (z - 1.0) * pm * cj * jacobi_value(a + 2.0, b, j - 1, z), -x});
    // second form: (alpha+1+j) P_j Pm - (z-1) P_j^{(alpha+1,beta-1)} Pm'
    rows2.push_back({d * jacobi_value(a, b, j, z) * pm, -(z - 1.0) * pj1 * cm * jacobi_value(-a, b, m - 1, z), -x});
  }
  worst = std::max(detail::term_residual(rows1), detail::term_residual(rows2));
  return worst;
}

double xjac_flag_residual(const JacParams& p) {
  using namespace detail;
  const QPoly x = q_xjac(p);
  const QPoly qnum = q_add(q_mul(QPoly{mpq_class(1), mpq_class(1)}, q_derivative(x)), q_scale(x, mpq_class(p.beta)));
  const Polynomial r = to_polynomial(q_divide(qnum, q_jac(-mpq_class(p.alpha) - 1, mpq_class(p.beta) - 1, p.m)).remainder);
  const Polynomial num = to_polynomial(qnum);
  double rmax = 0.0;
  double nmax = 0.0;
  for (double z : sample_grid(p)) {
    rmax = std::max(rmax, std::abs(r(z)));
    nmax = std::max(nmax, std::abs(num(z)));
  }
  return nmax == 0.0 ? rmax : rmax / nmax;
}

double jacobi_helper_residual(double a, double b, int j) {
  const double c = 0.5 * (j + a + b + 1.0);
  std::vector<std::vector<double>> rows;
  for (double z : chebyshev_points(2 * j + 3, -1.0, 1.0)) {
    rows.push_back({(z - 1.0) * c * jacobi_value(a + 1.0, b + 1.0, j - 1, z), a * jacobi_value(a, b, j, z),
                    -(a + j) * jacobi_value(a - 1.0, b + 1.0, j, z)});
  }
  return detail::term_residual(rows);
}

double jacobi_degenerate_residual(double a, int m, int n) {
  const double b = -1.0 - m - n - a;
  std::vector<std::vector<double>> rows;
  for (double z : chebyshev_points(2 * n + 3, -1.0, 1.0)) {
    rows.push_back(
        {binomial(a + m, m) * jacobi_value_explicit(a, b, n, z), -binomial(a + n, n) * jacobi_value_explicit(a, b, m, z)});
  }
  return detail::term_residual(rows);
}

}  // namespace xop
