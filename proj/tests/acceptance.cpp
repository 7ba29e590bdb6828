#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "xop/asymptotics.hpp"
#include "xop/classical.hpp"
#include "xop/errors.hpp"
#include "xop/family.hpp"
#include "xop/xjacobi.hpp"
#include "xop/xlaguerre.hpp"
#include "xop/zeros.hpp"

using namespace xop;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Worst {
  double value = 0.0;
  std::string where;
  void note(double v, const std::string& w) {
    if (!(v <= value)) {
      value = v;
      where = w;
    }
  }
};

const std::vector<double> kTypeOneAlphas{0.5, 1.0, 3.5, 5.5};
const std::vector<int> kTypeOneMs{1, 2, 3, 6};
const std::vector<int> kTypeTwoMs{1, 2, 3, 15};

std::vector<LagFamily> type_one_grid() {
  std::vector<LagFamily> out;
  for (double a : kTypeOneAlphas)
    for (int m : kTypeOneMs) out.push_back({LagType::I, a, m});
  return out;
}

std::vector<LagFamily> type_two_grid() {
  std::vector<LagFamily> out;
  for (int m : kTypeTwoMs)
    for (double a : {m - 0.5, m + 1.0, m + 13.01}) out.push_back({LagType::II, a, m});
  return out;
}

std::vector<JacFamily> jacobi_grid() {
  return {{3.5, 1.0, 2}, {5.5, 2.0, 3}, {0.75, -0.5, 2}, {0.5, -0.01, 2}, {1.75, -0.5, 3}};
}

double rel(double want, double got) { return want == 0.0 ? std::abs(got) : std::abs(got - want) / std::abs(want); }

std::string fmt_worst(const Worst& w) { return fmt::format("worst {:.3g} at {}", w.value, w.where); }

Outcome identities() {
  Worst worst;
  bool ok = true;
  const auto record = [&](double r, double contract, const std::string& where) {
    worst.note(r, where);
    if (!(r < contract)) ok = false;
  };
  for (const LagFamily& f : type_one_grid())
    for (int n = f.m; n <= 25; ++n) {
      const LagParams p(f.type, f.alpha, f.m, n);
      const std::string w = fmt::format("{} n={}", describe(f), n);
      record(xlag1_eigen_residual(p), 1e-8, w + " eigen");
      record(xlag1_flag_residual(p), 1e-8, w + " flag");
      record(xlag1_proof_chain_residual(p), 1e-8, w + " representation");
    }
  for (const LagFamily& f : type_two_grid())
    for (int n = f.m; n <= std::max(25, f.m + 10); ++n) {
      const LagParams p(f.type, f.alpha, f.m, n);
      const std::string w = fmt::format("{} n={}", describe(f), n);
      const ShapeResiduals s = xlag2_shape_residuals(p);
      record(xlag2_eigen_residual(p), 1e-8, w + " eigen");
      record(xlag2_lowering_residual(p), 1e-8, w + " lowering");
      record(s.lower, 1e-8, w + " shape-lower");
      record(s.raise, 1e-8, w + " shape-raise");
      record(xlag2_dual_residual(p), 1e-8, w + " dual");
    }
  for (const JacFamily& f : jacobi_grid())
    for (int n = f.m; n <= 25; ++n) {
      const JacParams p(f.alpha, f.beta, f.m, n);
      const std::string w = fmt::format("{} n={}", describe(f), n);
      const JacShapeResiduals s = xjac_shape_residuals(p);
      record(xjac_eigen_residual(p), 1e-8, w + " eigen");
      record(xjac_b_identity_residual(p), 1e-8, w + " b-identity");
      record(s.lower, 1e-8, w + " shape-lower");
      record(s.raise, 1e-8, w + " shape-raise");
      record(xjac_symmetric_residual(p), 1e-8, w + " symmetric");
      record(xjac_flag_residual(p), 1e-8, w + " flag");
    }
  return {ok, fmt_worst(worst)};
}

Outcome reductions() {
  Worst worst;
  for (double a : {0.0, 0.5, 3.5, 5.5, 12.0}) {
    for (int n : {0, 1, 5, 12, 25}) {
      const std::vector<double> zs = chebyshev_points(50, 0.0, 4.0 * std::max(n, 1));
      const std::string w = fmt::format("alpha={} n={}", a, n);
      double scale = 0.0;
      for (double z : zs) scale = std::max(scale, std::abs(laguerre_value(a, n, z)));
      for (double z : zs) {
        const double c = laguerre_value(a, n, z);
        worst.note(std::abs(xlag_value(LagParams(LagType::I, a, 0, n), z) - c) / scale, "lag1 " + w);
        const double ii = -(1.0 + a + n) * c;
        worst.note(std::abs(xlag_value(LagParams(LagType::II, a, 0, n), z) - ii) / (scale * (1.0 + a + n)),
                   "lag2 " + w);
      }
      const Polynomial one = xlag(LagParams(LagType::I, a, 0, n));
      const Polynomial two = xlag(LagParams(LagType::II, a, 0, n));
      const Polynomial c = laguerre_coeffs(a, n);
      for (int k = 0; k <= n; ++k) {
        worst.note(rel(c[k], one[k]), "lag1 coefficients " + w);
        worst.note(rel(-(1.0 + a + n) * c[k], two[k]), "lag2 coefficients " + w);
      }
    }
  }
  for (auto [a, b] : {std::pair{2.0, 0.5}, {0.75, -0.5}, {3.5, 1.0}}) {
    for (int n : {0, 1, 5, 12, 25}) {
      double scale = 0.0;
      const std::vector<double> zs = chebyshev_points(50, -1.0, 1.0);
      for (double z : zs) scale = std::max(scale, std::abs(jacobi_value(a, b, n, z)));
      for (double z : zs) {
        const double c = jacobi_value(a, b, n, z);
        worst.note(std::abs(xjac_value(a, b, 0, n, z) - c) / scale, fmt::format("jacobi {} {} n={}", a, b, n));
      }
      const Polynomial x = xjac(JacParams(a, b, 0, n));
      const Polynomial c = jacobi_coeffs(a, b, n);
      for (int k = 0; k <= n; ++k)
        if (c[k] != 0.0 || x[k] != 0.0)
          worst.note(rel(c[k], x[k]), fmt::format("jacobi coefficients {} {} n={}", a, b, n));
    }
  }
  return {worst.value <= 1e-12, fmt_worst(worst)};
}

Outcome endpoints() {
  Worst worst;
  for (const LagFamily& f : type_one_grid())
    for (int n = f.m; n <= 20; ++n) {
      const LagParams p(f.type, f.alpha, f.m, n);
      worst.note(rel(xlag1_at_zero(p), xlag_value(p, 0.0)), fmt::format("{} n={}", describe(f), n));
    }
  for (const LagFamily& f : type_two_grid())
    for (int n = f.m; n <= std::max(20, f.m + 5); ++n) {
      const LagParams p(f.type, f.alpha, f.m, n);
      worst.note(rel(xlag2_at_zero(p), xlag_value(p, 0.0)), fmt::format("{} n={}", describe(f), n));
    }
  for (const JacFamily& f : jacobi_grid())
    for (int n = f.m; n <= 20; ++n) {
      const JacParams p(f.alpha, f.beta, f.m, n);
      const std::string w = fmt::format("{} n={}", describe(f), n);
      worst.note(rel(xjac_at_plus_one(p), xjac_value(f.alpha, f.beta, f.m, n - f.m, 1.0)), w + " at +1");
      worst.note(rel(xjac_at_minus_one(p), xjac_value(f.alpha, f.beta, f.m, n - f.m, -1.0)), w + " at -1");
    }
  return {worst.value <= 1e-10, fmt_worst(worst)};
}

Outcome zero_laws() {
  std::vector<std::string> failures;
  std::vector<std::string> findings;
  int checked = 0;
  const auto fail = [&](const std::string& s) {
    if (failures.size() < 5) failures.push_back(s);
  };
  const auto simple = [&](const Family& f, int n) {
    const Polynomial p = polynomial(f, n);
    if (p.degree() < 2) return;
    if (!(min_relative_separation(all_roots(p)) > 1e-6)) fail(fmt::format("{} n={} not simple", describe(f), n));
  };
  for (const LagFamily& g : type_one_grid()) {
    const Family f = g;
    const int jmax = (g.m == 6 && g.alpha == 3.5) ? 22 : 20;
    for (int j = 0; j <= jmax; ++j) {
      const int n = g.m + j;
      const ZeroSet z = family_zeros(f, n);
      ++checked;
      if (static_cast<int>(z.regular.size()) != j || static_cast<int>(z.exceptional_real.size()) != g.m ||
          !z.exceptional_complex.empty())
        fail(fmt::format("{} n={} counts", describe(f), n));
      for (double x : z.exceptional_real)
        if (!(x < 0.0)) fail(fmt::format("{} n={} exceptional zero {} not negative", describe(f), n, x));
      simple(f, n);
      if (j >= 1) {
        const TypeOnePattern pat = type_one_pattern(g.alpha, g.m, j);
        if (!pat.holds()) fail(fmt::format("{} j={} interlacing pattern", describe(f), j));
      }
      if (j >= 1 && !consecutive_interlacing(f, n).interlaces)
        findings.push_back(fmt::format("{} n={}", describe(f), n));
    }
  }
  for (const LagFamily& g : type_two_grid()) {
    const Family f = g;
    const int jmax = (g.m == 15 && std::abs(g.alpha - 14.01) < 1e-12) ? 22 : 20;
    for (int j = 0; j <= jmax; ++j) {
      const int n = g.m + j;
      const ZeroSet z = family_zeros(f, n);
      ++checked;
      if (static_cast<int>(z.regular.size()) != j) fail(fmt::format("{} n={} regular count", describe(f), n));
      int negative = 0;
      for (double x : z.exceptional_real) negative += x < 0.0;
      if (negative != g.m % 2) fail(fmt::format("{} n={} negative zeros {}", describe(f), n, negative));
      if (value(f, n, 0.0) == 0.0) fail(fmt::format("{} n={} vanishes at 0", describe(f), n));
      simple(f, n);
      if (j >= 1 && !consecutive_interlacing(f, n).interlaces)
        findings.push_back(fmt::format("{} n={}", describe(f), n));
    }
  }
  {
    const Family f = LagFamily{LagType::II, 14.01, 15};
    for (int j = 0; j <= 22; ++j) {
      const ZeroSet z = family_zeros(f, 15 + j);
      ++checked;
      int negative = 0;
      for (double x : z.exceptional_real) negative += x < 0.0;
      if (static_cast<int>(z.regular.size()) != j || negative != 1)
        fail(fmt::format("{} n={} counts", describe(f), 15 + j));
      simple(f, 15 + j);
    }
  }
  for (const JacFamily& g : jacobi_grid()) {
    const Family f = g;
    for (int j = 0; j <= 20; ++j) {
      const int n = g.m + j;
      const ZeroSet z = family_zeros(f, n);
      ++checked;
      if (static_cast<int>(z.regular.size()) != j || static_cast<int>(z.exceptional().size()) != g.m)
        fail(fmt::format("{} n={} counts", describe(f), n));
      simple(f, n);
      if (j >= 1 && !consecutive_interlacing(f, n).interlaces)
        findings.push_back(fmt::format("{} n={}", describe(f), n));
    }
  }
  for (const std::string& s : findings) std::cout << "INFO consecutive interlacing fails: " << s << "\n";
  std::string detail = fmt::format("{} polynomials checked, {} consecutive-interlacing findings", checked,
                                   findings.size());
  for (const std::string& s : failures) detail += "; " + s;
  return {failures.empty(), detail};
}

std::string track_text(const ConvergenceTrack& t) {
  return fmt::format("{} first {:.3g} last {:.3g} ratio {:.3f} slope {:.3f}", t.label, t.points.front().error,
                     t.points.back().error, end_ratio(t), loglog_slope(t));
}

Outcome heine_mehler() {
  const std::vector<int> ns{20, 40, 60, 80, 100};
  Outcome o;
  for (const Family& f :
       {Family{LagFamily{LagType::I, 5.5, 3}}, Family{LagFamily{LagType::II, 3.0, 2}}, Family{JacFamily{3.5, 1.0, 2}}}) {
    const ConvergenceTrack t = heine_mehler_sweep(f, ns);
    const double s = loglog_slope(t);
    const bool ok = strictly_decreasing(t) && end_ratio(t) <= 1.0 / 3.0 && s >= -1.4 && s <= -0.6;
    o.pass = o.pass && ok;
    o.detail += (o.detail.empty() ? "" : "; ") + track_text(t) + (ok ? "" : " FAILED");
  }
  return o;
}

Outcome scaled_zeros() {
  Outcome o;
  for (const Family& f : {Family{LagFamily{LagType::I, 5.5, 3}}, Family{ClassicalLaguerre{5.5}}}) {
    const ConvergenceTrack t = scaled_zero_track(f, 1, {10, 100});
    const bool ok = t.points[1].error * 2.0 <= t.points[0].error;
    o.pass = o.pass && ok;
    o.detail += fmt::format("{}{} err(10) {:.3g} err(100) {:.3g}{}", o.detail.empty() ? "" : "; ", t.label,
                            t.points[0].error, t.points[1].error, ok ? "" : " FAILED");
  }
  return o;
}

Outcome exceptional_tracks() {
  Outcome o;
  for (const Family& f : {Family{LagFamily{LagType::I, 3.5, 6}}, Family{LagFamily{LagType::II, 14.01, 15}},
                          Family{JacFamily{3.5, 1.0, 2}}}) {
    const ConvergenceTrack t = exceptional_zero_track(f, {1, 22});
    const bool ok = end_ratio(t) <= 1.0 / 3.0;
    o.pass = o.pass && ok;
    o.detail += fmt::format("{}{} d(1) {:.4g} d(22) {:.4g} ratio {:.3f}{}", o.detail.empty() ? "" : "; ", t.label,
                            t.points[0].error, t.points[1].error, end_ratio(t), ok ? "" : " FAILED");
  }
  return o;
}

Outcome orthogonality() {
  Worst lag;
  Worst jac;
  Worst doubling;
  constexpr int kLagOrder = 480;
  std::vector<LagFamily> fams = type_one_grid();
  for (const LagFamily& f : type_two_grid()) fams.push_back(f);
  for (const LagFamily& f : fams) {
    lag.note(gram_matrix(f, 15, kLagOrder).max_offdiag_ratio, describe(f));
    doubling.note(gram_doubling_deviation(f, 15, kLagOrder), describe(f));
  }
  for (const JacFamily& f : {JacFamily{0.75, -0.5, 2}, JacFamily{0.5, -0.01, 2}}) {
    jac.note(gram_matrix(f, 12, 120).max_offdiag_ratio, describe(f));
    doubling.note(gram_doubling_deviation(f, 12, 120), describe(f));
  }
  const bool ok = lag.value < 1e-8 && jac.value < 1e-7 && doubling.value < 1e-9;
  return {ok, fmt::format("laguerre {}; jacobi class A {}; doubling {}", fmt_worst(lag), fmt_worst(jac),
                          fmt_worst(doubling))};
}

std::string capture(const std::string& cmd, int& status) {
  FILE* p = popen(cmd.c_str(), "r");
  if (p == nullptr) {
    status = -1;
    return {};
  }
  std::string out;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
  status = pclose(p);
  return out;
}

Outcome determinism() {
  const std::string exe = XOPKIT_PATH;
  const std::vector<std::string> commands{
      "heine-mehler --family lag1 --alpha 5.5 --m 3 --n 20:100:20",
      "track-exceptional --family lag2 --alpha 14.01 --m 15 --j 1:22",
      "zeros --family jacobi --alpha 3.5 --beta 1 --m 2 --n 2:12",
      "gram --family lag1 --alpha 5.5 --m 3 --nmax 15",
      "verify --family lag1 --alpha 3.5 --m 6 --n 6:25",
  };
  Outcome o;
  for (const std::string& c : commands) {
    int s1 = 0;
    int s2 = 0;
    int s3 = 0;
    const std::string a = capture("XOPKIT_THREADS=1 " + exe + " " + c, s1);
    const std::string b = capture("XOPKIT_THREADS=1 " + exe + " " + c, s2);
    const std::string d = capture("XOPKIT_THREADS=8 " + exe + " " + c, s3);
    const bool ok = s1 == 0 && s2 == 0 && s3 == 0 && !a.empty() && a == b && a == d;
    if (!ok) {
      o.pass = false;
      o.detail += "mismatch or failure: " + c + "; ";
    }
  }
  if (o.pass) o.detail = fmt::format("{} commands byte-identical across repeats and thread counts", commands.size());
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"identity residuals", identities},          {"m=0 reductions", reductions},
      {"endpoint formulas", endpoints},            {"zero laws", zero_laws},
      {"heine-mehler convergence", heine_mehler},  {"scaled-zero bessel limit", scaled_zeros},
      {"exceptional-zero convergence", exceptional_tracks}, {"orthogonality", orthogonality},
      {"cli determinism", determinism},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.pass;
    std::cout << fmt::format("{} criterion {}: {} ({}) [{:.1f}s]", o.pass ? "PASS" : "FAIL", index, name, o.detail,
                             secs)
              << std::endl;
  }
  std::cout << fmt::format("{} of {} criteria passed", index - failed, index) << std::endl;
  return failed == 0 ? 0 : 1;
}
