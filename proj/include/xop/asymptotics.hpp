#pragma once

#include <complex>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "xop/family.hpp"

namespace xop {

struct TrackPoint {
  int index = 0;
  double error = 0.0;
};

struct ConvergenceTrack {
  std::string label;
  std::vector<TrackPoint> points;  // strictly increasing index
  std::string limit_description;
};

/// Errors strictly decreasing from points[from] on.
bool strictly_decreasing(const ConvergenceTrack& t, std::size_t from = 0);
/// error(last) / error(first).
double end_ratio(const ConvergenceTrack& t);
/// Least-squares slope of log(error) against log(index).
double loglog_slope(const ConvergenceTrack& t);

/// Worker count for sweeps: XOPKIT_THREADS when set to a positive integer,
/// otherwise the hardware concurrency.
int sweep_threads();
/// Runs fn(0..count-1) on up to sweep_threads() workers.
void parallel_for(int count, const std::function<void(int)>& fn);

/// Default z_max of the Heine-Mehler grid: 40 for Laguerre, 20 for Jacobi.
double default_zmax(const Family& f);

/// Per n: sup over `count` uniform points on [0, z_max] of
/// |scaled X_n - Bessel limit|. Laguerre: n^{-alpha} X(z/n) (type II
/// n^{-alpha-1}); Jacobi: n^{-alpha} X(cos(z/n)). Evaluation uses the
/// recurrences. z_max <= 0 selects default_zmax.
ConvergenceTrack heine_mehler_sweep(const Family& f, const std::vector<int>& n_list, double z_max = 0.0,
                                    int count = 600);

/// Limit function of the scaled family at z.
double heine_mehler_limit(const Family& f, double z);
/// Scaled member at z.
double heine_mehler_scaled(const Family& f, int n, double z);

/// Per j: |scale * x_{j,i} - zt_i^2/4| with zt_i the i-th positive zero of
/// J_alpha, x_{j,i} the i-th smallest regular zero of X_{m+j}, scale = j
/// (type I) or n = m + j (type II, classical Laguerre). Jacobi families
/// track |n theta_{n,i} - zt_i| with x = cos(theta), zeros counted from +1.
ConvergenceTrack scaled_zero_track(const Family& f, int i, const std::vector<int>& j_list);

/// i-th smallest regular zero (counted from the hard edge) of the degree-n
/// member, found by a sign-change scan of the recurrence values.
double hard_edge_zero(const Family& f, int n, int i);

/// Per j: Hausdorff distance between the exceptional zeros of X_{m+j} and
/// the roots of exceptional_limit(f).
ConvergenceTrack exceptional_zero_track(const Family& f, const std::vector<int>& j_list);

/// Max over samples of |normalized ratio - limit|: type I X/L_j^alpha vs
/// xi_{alpha-1,m}; type II -X/((alpha+1+j) L_j^alpha) vs eta_{alpha+1,m};
/// Jacobi X/P_j^{(alpha,beta)} vs (-1)^m P_m^{(-alpha-1,beta-1)}; classical
/// families X/X vs 1. Throws InvalidParameter for a sample closer than 0.5
/// to the orthogonality interval.
double outer_ratio_check(const Family& f, int j, const std::vector<std::complex<double>>& samples);

struct GramReport {
  int size = 0;
  std::vector<int> degrees;
  std::vector<double> diag;
  double max_offdiag_ratio = 0.0;
  int quad_order = 0;
  std::vector<std::vector<double>> entries;
};

/// G_ab = int X_a X_b W over degrees a, b in [m, n_max], by the base Gauss
/// rule of order quad_order with 1/denominator^2 folded into the integrand.
/// Throws InvalidParameter for inadmissible families or n_max < m, and
/// NumericalFailure when quad_order < 2 (n_max + m) + 20 or a diagonal
/// entry is not positive.
GramReport gram_matrix(const Family& f, int n_max, int quad_order);

/// max over a, b of |G_ab(2 q) - G_ab(q)| / sqrt(G_aa(q) G_bb(q)).
double gram_doubling_deviation(const Family& f, int n_max, int quad_order);

}  // namespace xop
