#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "xop/polynomial.hpp"

namespace xop {

/// Coefficient-based root finding is limited to this degree.
inline constexpr int kMaxRootDegree = 60;
/// Roots closer than this to an interval endpoint are ambiguous.
inline constexpr double kBoundaryBuffer = 1e-10;

/// All complex roots by Aberth-Ehrlich iteration with Newton polishing.
/// Roots certified real by an exact Sturm count are returned with zero
/// imaginary part; the rest come in conjugate pairs. Throws
/// InvalidParameter for degree < 1 or above kMaxRootDegree, and
/// NumericalFailure on non-convergence.
std::vector<std::complex<double>> all_roots(const Polynomial& p);

/// Real roots of p in the open interval (lo, hi), ascending, with
/// completeness certified by an exact Sturm count.
std::vector<double> real_roots(const Polynomial& p, double lo, double hi);

/// Real roots of f on [lo, hi] located by sign changes on `samples` uniform
/// points and refined by bracketing. Needs no coefficients, so it serves
/// degrees above kMaxRootDegree; roots closer than the grid spacing may be
/// missed.
std::vector<double> real_roots_scan(const std::function<double(double)>& f, double lo, double hi, int samples);

struct ZeroSet {
  std::vector<double> regular;                             // ascending, inside (lo, hi)
  std::vector<double> exceptional_real;                    // ascending, outside [lo, hi]
  std::vector<std::complex<double>> exceptional_complex;   // one per pair, imag > 0
  double lo = 0.0;
  double hi = 0.0;

  int degree() const {
    return static_cast<int>(regular.size() + exceptional_real.size() + 2 * exceptional_complex.size());
  }
  /// Exceptional zeros with both members of each complex pair.
  std::vector<std::complex<double>> exceptional() const;
};

/// Sorts roots into regular and exceptional relative to (lo, hi). Throws
/// BoundaryAmbiguity when a real root is within kBoundaryBuffer of a finite
/// endpoint.
ZeroSet classify(const std::vector<std::complex<double>>& roots, double lo, double hi);

/// all_roots followed by classify.
ZeroSet zero_set(const Polynomial& p, double lo, double hi);

struct InterlacingReport {
  bool interlaces = true;
  std::vector<std::string> violations;
};

/// Strict alternation of two ascending sequences whose sizes differ by at
/// most one.
InterlacingReport interlacing_report(const std::vector<double>& a, const std::vector<double>& b);

/// Checks that zeros[i] lies strictly inside (left[i], right[i]) for each i.
InterlacingReport bracket_report(const std::vector<double>& zeros, const std::vector<double>& left,
                                 const std::vector<double>& right);

/// Smallest pairwise distance between roots divided by max(1, max |root|);
/// infinity for fewer than two roots.
double min_relative_separation(const std::vector<std::complex<double>>& roots);

/// Symmetric Hausdorff distance between two finite point sets in the plane;
/// zero when both are empty, infinity when exactly one is.
double hausdorff_distance(const std::vector<std::complex<double>>& a, const std::vector<std::complex<double>>& b);

}  // namespace xop
