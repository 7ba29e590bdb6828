#include "xop/zeros.hpp"

#include <algorithm>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "xop/errors.hpp"
#include "xop/sturm.hpp"

namespace xop {

namespace {

using cplx = std::complex<double>;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// p'(z)/p(z), evaluated on the reversed polynomial outside the unit disc so
// that large |z| does not overflow.
cplx log_derivative(std::span<const double> a, cplx z) {
  const int d = static_cast<int>(a.size()) - 1;
  if (std::abs(z) <= 1.0) {
    cplx p = a[static_cast<std::size_t>(d)];
    cplx dp = 0.0;
    for (int k = d - 1; k >= 0; --k) {
      dp = dp * z + p;
      p = p * z + a[static_cast<std::size_t>(k)];
    }
    return dp / p;
  }
  const cplx w = 1.0 / z;
  cplx q = a[0];
  cplx dq = 0.0;
  for (int k = 1; k <= d; ++k) {
    dq = dq * w + q;
    q = q * w + a[static_cast<std::size_t>(k)];
  }
  return w * (static_cast<double>(d) - w * dq / q);
}

std::vector<cplx> initial_guesses(std::span<const double> a) {
  const int d = static_cast<int>(a.size()) - 1;
  const double lead = std::abs(a.back());
  double radius = 0.0;
  for (int k = 0; k < d; ++k) {
    const double r = std::pow(std::abs(a[static_cast<std::size_t>(k)]) / lead, 1.0 / (d - k));
    radius = std::max(radius, r);
  }
  const double center = -a[static_cast<std::size_t>(d - 1)] / (static_cast<double>(d) * a.back());
  radius = std::max(radius, 1e-3);
  std::vector<cplx> z(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / d + 0.4;
    z[static_cast<std::size_t>(k)] = center + std::polar(radius, theta);
  }
  return z;
}

std::vector<cplx> aberth(const Polynomial& p) {
  const auto a = p.coeffs();
  const int d = p.degree();
  if (d == 1) return {cplx(-a[0] / a[1], 0.0)};
  auto z = initial_guesses(a);
  std::vector<bool> done(z.size(), false);
  for (int it = 0; it < 2000; ++it) {
    bool all_done = true;
    for (std::size_t k = 0; k < z.size(); ++k) {
      if (done[k]) continue;
      const cplx ld = log_derivative(a, z[k]);
      if (!std::isfinite(ld.real()) || !std::isfinite(ld.imag())) {
        done[k] = true;  // landed on a root
        continue;
      }
      cplx s = 0.0;
      for (std::size_t i = 0; i < z.size(); ++i)
        if (i != k) s += 1.0 / (z[k] - z[i]);
      const cplx w = 1.0 / (ld - s);
      z[k] -= w;
      if (std::abs(w) <= 4.0 * kEps * std::abs(z[k]) ||
          std::abs(p(z[k])) <= 8.0 * d * kEps * p.abs_scale(z[k])) {
        done[k] = true;
      } else {
        all_done = false;
      }
    }
    if (all_done) return z;
  }
  throw NumericalFailure("all_roots: Aberth iteration did not converge for degree " + std::to_string(d));
}

// Damped Newton, accepting a step only when it does not increase |p|.
cplx polish(const Polynomial& p, cplx z) {
  const auto a = p.coeffs();
  double fz = std::abs(p(z));
  for (int it = 0; it < 50 && fz > 0.0; ++it) {
    const cplx ld = log_derivative(a, z);
    if (!std::isfinite(ld.real()) || !std::isfinite(ld.imag()) || ld == 0.0) break;
    cplx step = 1.0 / ld;
    bool improved = false;
    for (int h = 0; h < 6; ++h) {
      const cplx cand = z - step;
      const double fc = std::abs(p(cand));
      if (fc < fz) {
        z = cand;
        fz = fc;
        improved = true;
        break;
      }
      step *= 0.5;
    }
    if (!improved || std::abs(step) <= 2.0 * kEps * std::abs(z)) break;
  }
  return z;
}

double real_polish(const Polynomial& p, double x) {
  const Polynomial dp = p.derivative();
  double fx = std::abs(p(x));
  for (int it = 0; it < 50 && fx > 0.0; ++it) {
    const double d = dp(x);
    if (d == 0.0) break;
    double step = p(x) / d;
    bool improved = false;
    for (int h = 0; h < 6; ++h) {
      const double cand = x - step;
      const double fc = std::abs(p(cand));
      if (fc < fx) {
        x = cand;
        fx = fc;
        improved = true;
        break;
      }
      step *= 0.5;
    }
    if (!improved || std::abs(step) <= 2.0 * kEps * std::abs(x)) break;
  }
  return x;
}

// Exact-sign bisection of a bracket [a, b] with sign change.
double refine_bracket(const SturmSequence& s, double a, double b) {
  int sa = s.sign_at(a);
  for (int it = 0; it < 200; ++it) {
    const double m = 0.5 * (a + b);
    if (m <= a || m >= b) break;
    const int sm = s.sign_at(m);
    if (sm == 0) return m;
    if (sm == sa) {
      a = m;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

double cauchy_bound(const Polynomial& p) {
  const auto a = p.coeffs();
  double m = 0.0;
  for (std::size_t k = 0; k + 1 < a.size(); ++k) m = std::max(m, std::abs(a[k] / a.back()));
  return std::exp2(std::ceil(std::log2(1.0 + m)));
}

// Real roots by Sturm bisection on (-B, B].
std::vector<double> isolate_real(const Polynomial& p, const SturmSequence& s) {
  struct Box {
    double lo, hi;
    int count;
  };
  const double b = cauchy_bound(p);
  std::vector<double> out;
  std::vector<Box> stack{{-b, b, s.count(-b, b)}};
  while (!stack.empty()) {
    const Box box = stack.back();
    stack.pop_back();
    if (box.count == 0) continue;
    if (s.sign_at(box.hi) == 0) {
      out.push_back(box.hi);
      const double below = std::nextafter(box.hi, -std::numeric_limits<double>::infinity());
      stack.push_back({box.lo, below, box.count - 1});
      continue;
    }
    if (box.count == 1 && s.sign_at(box.lo) != 0) {
      out.push_back(refine_bracket(s, box.lo, box.hi));
      continue;
    }
    const double mid = 0.5 * (box.lo + box.hi);
    if (mid <= box.lo || mid >= box.hi)
      throw NumericalFailure("real root isolation exhausted double resolution (clustered roots)");
    const int left = s.count(box.lo, mid);
    stack.push_back({mid, box.hi, box.count - left});
    stack.push_back({box.lo, mid, left});
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Checks that every candidate real root sits in its own exact sign-change
// bracket.
bool certify_real(const SturmSequence& s, std::vector<double>& xs) {
  std::sort(xs.begin(), xs.end());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double x = xs[i];
    double gap = std::numeric_limits<double>::infinity();
    if (i > 0) gap = std::min(gap, x - xs[i - 1]);
    if (i + 1 < xs.size()) gap = std::min(gap, xs[i + 1] - x);
    if (!(gap > 0.0)) return false;
    const double half = std::isinf(gap) ? std::max(1.0, std::abs(x)) : 0.5 * gap;
    if (s.sign_at(x) == 0) continue;
    double delta = std::max(4.0 * kEps * std::abs(x), std::numeric_limits<double>::min());
    delta = std::min(delta, 0.5 * half);
    bool ok = false;
    while (delta < half) {
      const int sl = s.sign_at(x - delta);
      const int sr = s.sign_at(x + delta);
      if (sl != 0 && sr != 0 && sl != sr) {
        xs[i] = refine_bracket(s, x - delta, x + delta);
        ok = true;
        break;
      }
      if (sl == 0 || sr == 0) {
        xs[i] = sl == 0 ? x - delta : x + delta;
        ok = true;
        break;
      }
      delta *= 16.0;
    }
    if (!ok) return false;
  }
  return true;
}

}  // namespace

std::vector<cplx> all_roots(const Polynomial& p) {
  const int d = p.degree();
  if (d < 1) throw InvalidParameter("all_roots requires degree >= 1");
  if (d > kMaxRootDegree)
    throw InvalidParameter("all_roots: degree " + std::to_string(d) + " exceeds the coefficient root-finding cap " +
                           std::to_string(kMaxRootDegree));

  // Exact roots at the origin.
  const auto c = p.coeffs();
  std::size_t zeros_at_origin = 0;
  while (c[zeros_at_origin] == 0.0) ++zeros_at_origin;
  const Polynomial q(std::vector<double>(c.begin() + static_cast<std::ptrdiff_t>(zeros_at_origin), c.end()));

  std::vector<cplx> roots;
  if (q.degree() >= 1) {
    roots = aberth(q);
    for (auto& z : roots) z = polish(q, z);
  }

  // Split into certified real roots and conjugate pairs.
  const SturmSequence s(q);
  const auto n_real = static_cast<std::size_t>(q.degree() >= 1 ? s.count_all() : 0);
  if (n_real > roots.size()) throw NumericalFailure("all_roots: real root count exceeds degree");
  std::vector<cplx> by_imag = roots;
  std::sort(by_imag.begin(), by_imag.end(), [](cplx x, cplx y) {
    return std::abs(x.imag()) / std::max(1.0, std::abs(x)) < std::abs(y.imag()) / std::max(1.0, std::abs(y));
  });
  std::vector<double> real;
  for (std::size_t i = 0; i < n_real; ++i) real.push_back(real_polish(q, by_imag[i].real()));
  if (!certify_real(s, real)) real = isolate_real(q, s);
  if (real.size() != n_real) throw NumericalFailure("all_roots: Sturm count and located real roots disagree");

  // Drop the approximation nearest to each certified real root.
  std::vector<cplx> rest = roots;
  for (double x : real) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < rest.size(); ++i)
      if (std::abs(rest[i] - x) < std::abs(rest[best] - x)) best = i;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
  }
  if (rest.size() % 2 != 0) throw NumericalFailure("all_roots: complex roots do not pair into conjugates");

  std::vector<cplx> out;
  out.reserve(static_cast<std::size_t>(d));
  for (std::size_t i = 0; i < zeros_at_origin; ++i) out.emplace_back(0.0, 0.0);
  for (double x : real) out.emplace_back(x, 0.0);
  // Pair each remaining root with its nearest conjugate and average.
  while (!rest.empty()) {
    const cplx u = rest.back();
    rest.pop_back();
    std::size_t best = 0;
    for (std::size_t i = 1; i < rest.size(); ++i)
      if (std::abs(std::conj(rest[i]) - u) < std::abs(std::conj(rest[best]) - u)) best = i;
    const cplx w = rest[best];
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
    cplx avg = 0.5 * (u + std::conj(w));
    avg = {avg.real(), std::abs(avg.imag())};
    out.push_back(avg);
    out.push_back(std::conj(avg));
  }

  for (const auto& z : out) {
    if (std::abs(p(z)) > 1e-8 * p.abs_scale(z))
      throw NumericalFailure("all_roots: root residual above tolerance");
  }
  return out;
}

std::vector<double> real_roots(const Polynomial& p, double lo, double hi) {
  if (p.is_zero()) throw InvalidParameter("real_roots of the zero polynomial");
  if (p.degree() < 1) return {};
  std::vector<double> all;
  if (p.degree() <= kMaxRootDegree) {
    for (const auto& z : all_roots(p))
      if (z.imag() == 0.0) all.push_back(z.real());
  } else {
    all = isolate_real(p, SturmSequence(p));
  }
  std::vector<double> out;
  for (double x : all)
    if (x > lo && x < hi) out.push_back(x);
  std::sort(out.begin(), out.end());
  if (static_cast<int>(out.size()) != count_real_roots(p, lo, hi))
    throw NumericalFailure("real_roots: Sturm certification mismatch");
  return out;
}

std::vector<double> real_roots_scan(const std::function<double(double)>& f, double lo, double hi, int samples) {
  if (samples < 2) samples = 2;
  std::vector<double> out;
  double a = lo;
  double fa = f(a);
  for (int i = 1; i < samples; ++i) {
    const double b = lo + (hi - lo) * i / (samples - 1);
    const double fb = f(b);
    if (fa == 0.0) {
      out.push_back(a);
    } else if (fb != 0.0 && (fa < 0.0) != (fb < 0.0)) {
      std::uintmax_t iters = 200;
      auto tol = boost::math::tools::eps_tolerance<double>(52);
      const auto r = boost::math::tools::toms748_solve(f, a, b, fa, fb, tol, iters);
      out.push_back(0.5 * (r.first + r.second));
    }
    a = b;
    fa = fb;
  }
  if (fa == 0.0) out.push_back(a);
  return out;
}

std::vector<cplx> ZeroSet::exceptional() const {
  std::vector<cplx> out;
  for (double x : exceptional_real) out.emplace_back(x, 0.0);
  for (const auto& z : exceptional_complex) {
    out.push_back(z);
    out.push_back(std::conj(z));
  }
  return out;
}

ZeroSet classify(const std::vector<cplx>& roots, double lo, double hi) {
  ZeroSet zs;
  zs.lo = lo;
  zs.hi = hi;
  auto near = [](double x, double e) { return std::isfinite(e) && std::abs(x - e) <= kBoundaryBuffer * std::max(1.0, std::abs(e)); };
  for (const auto& z : roots) {
    if (z.imag() == 0.0) {
      const double x = z.real();
      if (near(x, lo) || near(x, hi)) {
        std::ostringstream os;
        os.precision(17);
        os << "root " << x << " lies within " << kBoundaryBuffer << " of an interval endpoint";
        throw BoundaryAmbiguity(os.str());
      }
      (x > lo && x < hi ? zs.regular : zs.exceptional_real).push_back(x);
    } else if (z.imag() > 0.0) {
      zs.exceptional_complex.push_back(z);
    }
  }
  std::sort(zs.regular.begin(), zs.regular.end());
  std::sort(zs.exceptional_real.begin(), zs.exceptional_real.end());
  std::sort(zs.exceptional_complex.begin(), zs.exceptional_complex.end(),
            [](cplx x, cplx y) { return x.real() < y.real() || (x.real() == y.real() && x.imag() < y.imag()); });
  return zs;
}

ZeroSet zero_set(const Polynomial& p, double lo, double hi) { return classify(all_roots(p), lo, hi); }

InterlacingReport interlacing_report(const std::vector<double>& a, const std::vector<double>& b) {
  InterlacingReport rep;
  const auto na = static_cast<long>(a.size());
  const auto nb = static_cast<long>(b.size());
  if (std::abs(na - nb) > 1) {
    rep.interlaces = false;
    rep.violations.push_back("sizes " + std::to_string(na) + " and " + std::to_string(nb) + " differ by more than one");
    return rep;
  }
  struct Tagged {
    double x;
    int src;
    std::size_t idx;
  };
  std::vector<Tagged> merged;
  for (std::size_t i = 0; i < a.size(); ++i) merged.push_back({a[i], 0, i});
  for (std::size_t i = 0; i < b.size(); ++i) merged.push_back({b[i], 1, i});
  std::stable_sort(merged.begin(), merged.end(), [](const Tagged& x, const Tagged& y) { return x.x < y.x; });
  const char* names[2] = {"a", "b"};
  for (std::size_t i = 1; i < merged.size(); ++i) {
    const auto& l = merged[i - 1];
    const auto& r = merged[i];
    if (l.src == r.src || !(l.x < r.x)) {
      std::ostringstream os;
      os.precision(17);
      os << names[l.src] << "[" << l.idx << "]=" << l.x << " and " << names[r.src] << "[" << r.idx << "]=" << r.x
         << " are not separated";
      rep.violations.push_back(os.str());
    }
  }
  // With equal sizes either sequence may lead; otherwise the longer one
  // must occupy both ends.
  if (na != nb && !merged.empty()) {
    const int longer = na > nb ? 0 : 1;
    if (merged.front().src != longer || merged.back().src != longer)
      rep.violations.push_back("longer sequence does not enclose the shorter one");
  }
  rep.interlaces = rep.violations.empty();
  return rep;
}

InterlacingReport bracket_report(const std::vector<double>& zeros, const std::vector<double>& left,
                                 const std::vector<double>& right) {
  InterlacingReport rep;
  if (zeros.size() != left.size() || zeros.size() != right.size()) {
    rep.interlaces = false;
    rep.violations.push_back("bracket count mismatch: " + std::to_string(zeros.size()) + " zeros, " +
                             std::to_string(left.size()) + " left, " + std::to_string(right.size()) + " right");
    return rep;
  }
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    if (!(left[i] < zeros[i] && zeros[i] < right[i])) {
      std::ostringstream os;
      os.precision(17);
      os << "zero " << i << " = " << zeros[i] << " outside (" << left[i] << ", " << right[i] << ")";
      rep.violations.push_back(os.str());
    }
  }
  rep.interlaces = rep.violations.empty();
  return rep;
}

double min_relative_separation(const std::vector<cplx>& roots) {
  double scale = 1.0;
  for (const auto& z : roots) scale = std::max(scale, std::abs(z));
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t k = i + 1; k < roots.size(); ++k) best = std::min(best, std::abs(roots[i] - roots[k]));
  return best / scale;
}

double hausdorff_distance(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  if (a.empty() && b.empty()) return 0.0;
  if (a.empty() || b.empty()) return std::numeric_limits<double>::infinity();
  auto directed = [](const std::vector<cplx>& x, const std::vector<cplx>& y) {
    double worst = 0.0;
    for (const auto& p : x) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& q : y) best = std::min(best, std::abs(p - q));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

}  // namespace xop
