#include "xop/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>

#include "xop/classical.hpp"
#include "xop/errors.hpp"
#include "xop/special.hpp"

namespace xop {

namespace {

struct Shape {
  bool laguerre = true;
  bool type2 = false;
  bool type1 = false;
  double alpha = 0.0;
  int m = 0;
};

Shape shape(const Family& f) {
  Shape s;
  s.laguerre = is_laguerre(f);
  s.m = codimension(f);
  if (const auto* g = std::get_if<LagFamily>(&f)) {
    s.alpha = g->alpha;
    s.type1 = g->type == LagType::I;
    s.type2 = g->type == LagType::II;
  } else if (const auto* g = std::get_if<JacFamily>(&f)) {
    s.alpha = g->alpha;
  } else if (const auto* g = std::get_if<ClassicalLaguerre>(&f)) {
    s.alpha = g->alpha;
  } else if (const auto* g = std::get_if<ClassicalJacobi>(&f)) {
    s.alpha = g->alpha;
  }
  return s;
}

void check_indices(const std::vector<int>& idx, int min_value, const char* what) {
  if (idx.empty()) throw InvalidParameter(std::string(what) + " list is empty");
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] < min_value)
      throw InvalidParameter(std::string(what) + " must be >= " + std::to_string(min_value) + ", got " +
                             std::to_string(idx[k]));
    if (k > 0 && idx[k] <= idx[k - 1]) throw InvalidParameter(std::string(what) + " list must be strictly increasing");
  }
}

double interval_distance(const Family& f, std::complex<double> z) {
  const double x = z.real();
  const double y = std::abs(z.imag());
  if (is_laguerre(f)) return x >= 0.0 ? y : std::abs(z);
  const double dx = x < -1.0 ? -1.0 - x : (x > 1.0 ? x - 1.0 : 0.0);
  return std::hypot(dx, y);
}

}  // namespace

bool strictly_decreasing(const ConvergenceTrack& t, std::size_t from) {
  for (std::size_t k = from + 1; k < t.points.size(); ++k)
    if (!(t.points[k].error < t.points[k - 1].error)) return false;
  return true;
}

double end_ratio(const ConvergenceTrack& t) {
  if (t.points.size() < 2) throw InvalidParameter("end_ratio needs at least two points");
  return t.points.back().error / t.points.front().error;
}

double loglog_slope(const ConvergenceTrack& t) {
  if (t.points.size() < 2) throw InvalidParameter("loglog_slope needs at least two points");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double k = static_cast<double>(t.points.size());
  for (const auto& p : t.points) {
    const double x = std::log(static_cast<double>(p.index));
    const double y = std::log(p.error);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

int sweep_threads() {
  if (const char* env = std::getenv("XOPKIT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min<long>(v, 1024));
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(int count, const std::function<void(int)>& fn) {
  const int workers = std::min(count, sweep_threads());
  if (workers <= 1) {
    for (int k = 0; k < count; ++k) fn(k);
    return;
  }
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int k = w; k < count; k += workers) {
        try {
          fn(k);
        } catch (...) {
          errors[static_cast<std::size_t>(k)] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

double default_zmax(const Family& f) { return is_laguerre(f) ? 40.0 : 20.0; }

double heine_mehler_limit(const Family& f, double z) {
  const Shape s = shape(f);
  if (s.laguerre) {
    double c = 1.0;
    if (s.type1) c = binomial(s.alpha + s.m - 1.0, s.m);
    if (s.type2) c = -binomial(s.m - 1.0 - s.alpha, s.m);
    return c * bessel_hard_edge(s.alpha, z);
  }
  const double sign = (s.m % 2 == 0) ? 1.0 : -1.0;
  return sign * binomial(s.m - 1.0 - s.alpha, s.m) * bessel_j_regular(s.alpha, z);
}

double heine_mehler_scaled(const Family& f, int n, double z) {
  const Shape s = shape(f);
  const double nn = static_cast<double>(n);
  if (s.laguerre) return std::pow(nn, -s.alpha - (s.type2 ? 1.0 : 0.0)) * value(f, n, z / nn);
  return std::pow(nn, -s.alpha) * value(f, n, std::cos(z / nn));
}

ConvergenceTrack heine_mehler_sweep(const Family& f, const std::vector<int>& n_list, double z_max, int count) {
  const Shape s = shape(f);
  if (!(s.alpha > -1.0)) throw InvalidParameter("Heine-Mehler sweep requires alpha > -1");
  check_indices(n_list, std::max(1, s.m), "n");
  if (count < 2) throw InvalidParameter("z grid needs at least two points");
  if (z_max <= 0.0) z_max = default_zmax(f);
  if (!std::isfinite(z_max)) throw InvalidParameter("z_max must be finite");
  for (int n : n_list) (void)value(f, n, 0.5);

  std::vector<double> grid(static_cast<std::size_t>(count));
  std::vector<double> limit(grid.size());
  for (int k = 0; k < count; ++k) {
    grid[k] = z_max * k / (count - 1);
    limit[k] = heine_mehler_limit(f, grid[k]);
  }
  ConvergenceTrack t;
  t.label = "heine-mehler " + describe(f);
  t.limit_description = s.laguerre ? "c z^{-alpha/2} J_alpha(2 sqrt z)" : "c (z/2)^{-alpha} J_alpha(z)";
  t.points.resize(n_list.size());
  parallel_for(static_cast<int>(n_list.size()), [&](int k) {
    const int n = n_list[k];
    double sup = 0.0;
    for (std::size_t g = 0; g < grid.size(); ++g)
      sup = std::max(sup, std::abs(heine_mehler_scaled(f, n, grid[g]) - limit[g]));
    if (!std::isfinite(sup)) throw NumericalFailure("non-finite Heine-Mehler error at n=" + std::to_string(n));
    t.points[k] = {n, sup};
  });
  return t;
}

double hard_edge_zero(const Family& f, int n, int i) {
  const Shape s = shape(f);
  if (i < 1) throw InvalidParameter("zero index must be >= 1");
  if (n - s.m < i) throw InvalidParameter("zero index exceeds the number of regular zeros");
  const BesselZeroTable bz = bessel_zeros(s.alpha, i + 1);
  const double regular_count = std::max(1.0, static_cast<double>(n - s.m));
  double reach = s.laguerre ? bz.zeros[i] * bz.zeros[i] / (4.0 * regular_count) : 1.5 * bz.zeros[i] / n;
  const double cap = s.laguerre ? 1e6 : M_PI;
  for (int attempt = 0; attempt < 40; ++attempt) {
    reach = std::min(reach, cap);
    const int samples = std::min(1 << 22, 400 * (i + 1) * (1 << std::min(attempt, 10)));
    std::vector<double> roots;
    if (s.laguerre) {
      roots = real_roots_scan([&](double z) { return value(f, n, z); }, 0.0, reach, samples);
    } else {
      roots = real_roots_scan([&](double th) { return value(f, n, std::cos(th)); }, 0.0, reach, samples);
    }
    if (static_cast<int>(roots.size()) >= i) {
      const double r = roots[static_cast<std::size_t>(i - 1)];
      return s.laguerre ? r : std::cos(r);
    }
    if (reach >= cap) break;
    reach *= 2.0;
  }
  throw NumericalFailure("hard-edge zero " + std::to_string(i) + " of degree " + std::to_string(n) + " not found");
}

ConvergenceTrack scaled_zero_track(const Family& f, int i, const std::vector<int>& j_list) {
  const Shape s = shape(f);
  if (!(s.alpha > -1.0)) throw InvalidParameter("scaled zero track requires alpha > -1");
  check_indices(j_list, 1, "j");
  if (i < 1 || i > j_list.front()) throw InvalidParameter("zero index must satisfy 1 <= i <= min(j)");
  const double zt = bessel_zeros(s.alpha, i).zeros[static_cast<std::size_t>(i - 1)];
  ConvergenceTrack t;
  t.label = "scaled-zero i=" + std::to_string(i) + " " + describe(f);
  t.limit_description = s.laguerre ? "zt_i^2/4, zt_i the i-th zero of J_alpha" : "zt_i, the i-th zero of J_alpha";
  t.points.resize(j_list.size());
  parallel_for(static_cast<int>(j_list.size()), [&](int k) {
    const int j = j_list[k];
    const int n = s.m + j;
    const double x = hard_edge_zero(f, n, i);
    double err = 0.0;
    if (s.laguerre) {
      const double scale = s.type1 ? static_cast<double>(j) : static_cast<double>(n);
      err = std::abs(scale * x - zt * zt / 4.0);
    } else {
      err = std::abs(n * std::acos(x) - zt);
    }
    t.points[k] = {j, err};
  });
  return t;
}

ConvergenceTrack exceptional_zero_track(const Family& f, const std::vector<int>& j_list) {
  const int m = codimension(f);
  check_indices(j_list, 0, "j");
  const Polynomial lim = exceptional_limit(f);
  const std::vector<std::complex<double>> lim_roots =
      lim.degree() >= 1 ? all_roots(lim) : std::vector<std::complex<double>>{};
  ConvergenceTrack t;
  t.label = "exceptional-zeros " + describe(f);
  t.limit_description = "roots of the exceptional limit polynomial";
  t.points.resize(j_list.size());
  parallel_for(static_cast<int>(j_list.size()), [&](int k) {
    const int j = j_list[k];
    const std::vector<std::complex<double>> ex = family_zeros(f, m + j).exceptional();
    double d = 0.0;
    if (ex.size() != lim_roots.size())
      throw NumericalFailure("exceptional zero count " + std::to_string(ex.size()) + " differs from codimension " +
                             std::to_string(lim_roots.size()) + " at j=" + std::to_string(j));
    if (!ex.empty()) d = hausdorff_distance(ex, lim_roots);
    t.points[k] = {j, d};
  });
  return t;
}

double outer_ratio_check(const Family& f, int j, const std::vector<std::complex<double>>& samples) {
  using C = std::complex<double>;
  if (j < 0) throw InvalidParameter("j must be nonnegative");
  for (const C& z : samples)
    if (!(interval_distance(f, z) >= 0.5))
      throw InvalidParameter("sample point too close to the orthogonality interval");
  const Shape s = shape(f);
  const int n = s.m + j;
  const Polynomial lim = exceptional_limit(f);
  double worst = 0.0;
  for (const C& z : samples) {
    const C x = value(f, n, z);
    C ratio;
    C target = lim(z);
    if (const auto* g = std::get_if<LagFamily>(&f)) {
      const C lj = laguerre_value(g->alpha, j, z);
      ratio = g->type == LagType::I ? x / lj : -x / ((g->alpha + 1.0 + j) * lj);
    } else if (const auto* g = std::get_if<JacFamily>(&f)) {
      ratio = x / jacobi_value(g->alpha, g->beta, j, z);
      if (g->m % 2 != 0) target = -target;
    } else {
      ratio = x / x;
    }
    worst = std::max(worst, std::abs(ratio - target));
  }
  return worst;
}

GramReport gram_matrix(const Family& f, int n_max, int quad_order) {
  const int m = codimension(f);
  const WeightSpec w = weight(f);
  if (n_max < m) throw InvalidParameter("n_max must be >= m");
  if (quad_order < 2 * (n_max + m) + 20)
    throw NumericalFailure("quadrature order " + std::to_string(quad_order) + " below 2 (n_max + m) + 20 = " +
                           std::to_string(2 * (n_max + m) + 20));
  const QuadratureRule rule = gauss_rule(w.base, quad_order);
  const int size = n_max - m + 1;
  const std::size_t nodes = rule.nodes.size();

  std::vector<double> factor(nodes);
  for (std::size_t k = 0; k < nodes; ++k) {
    const double den = w.denominator(rule.nodes[k]);
    factor[k] = rule.weights[k] / (den * den);
  }
  std::vector<std::vector<double>> vals(static_cast<std::size_t>(size), std::vector<double>(nodes));
  parallel_for(size, [&](int a) {
    for (std::size_t k = 0; k < nodes; ++k) vals[a][k] = value(f, m + a, rule.nodes[k]);
  });

  GramReport r;
  r.size = size;
  r.quad_order = quad_order;
  r.entries.assign(static_cast<std::size_t>(size), std::vector<double>(static_cast<std::size_t>(size)));
  for (int a = 0; a < size; ++a) {
    r.degrees.push_back(m + a);
    for (int b = a; b < size; ++b) {
      long double acc = 0.0L;
      for (std::size_t k = 0; k < nodes; ++k)
        acc += static_cast<long double>(factor[k]) * vals[a][k] * vals[b][k];
      r.entries[a][b] = r.entries[b][a] = static_cast<double>(acc);
    }
  }
  for (int a = 0; a < size; ++a) {
    const double d = r.entries[a][a];
    if (!(d > 0.0) || !std::isfinite(d))
      throw NumericalFailure("Gram diagonal entry for degree " + std::to_string(m + a) + " is not positive");
    r.diag.push_back(d);
  }
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b)
      if (a != b)
        r.max_offdiag_ratio =
            std::max(r.max_offdiag_ratio, std::abs(r.entries[a][b]) / std::sqrt(r.diag[a] * r.diag[b]));
  return r;
}

double gram_doubling_deviation(const Family& f, int n_max, int quad_order) {
  const GramReport g1 = gram_matrix(f, n_max, quad_order);
  const GramReport g2 = gram_matrix(f, n_max, 2 * quad_order);
  double worst = 0.0;
  for (int a = 0; a < g1.size; ++a)
    for (int b = 0; b < g1.size; ++b)
      worst = std::max(worst, std::abs(g2.entries[a][b] - g1.entries[a][b]) / std::sqrt(g1.diag[a] * g1.diag[b]));
  return worst;
}

}  // namespace xop
