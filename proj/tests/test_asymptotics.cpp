#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "xop/asymptotics.hpp"
#include "xop/errors.hpp"
#include "xop/special.hpp"

using namespace xop;
using doctest::Approx;

namespace {

const std::vector<int> kSweepDegrees{20, 40, 60, 80, 100};

}  // namespace

TEST_CASE("track helpers") {
  ConvergenceTrack t{"t", {{10, 1.0}, {20, 0.5}, {40, 0.25}}, ""};
  CHECK(strictly_decreasing(t));
  CHECK(end_ratio(t) == Approx(0.25));
  CHECK(loglog_slope(t) == Approx(-1.0).epsilon(1e-12));
  t.points[2].error = 0.6;
  CHECK_FALSE(strictly_decreasing(t));
  CHECK(strictly_decreasing(t, 2));
}

TEST_CASE("thread budget honors the environment") {
  setenv("XOPKIT_THREADS", "3", 1);
  CHECK(sweep_threads() == 3);
  setenv("XOPKIT_THREADS", "zero", 1);
  CHECK(sweep_threads() >= 1);
  unsetenv("XOPKIT_THREADS");
  std::vector<int> hits(50, 0);
  parallel_for(50, [&](int k) { hits[k] += 1; });
  for (int h : hits) CHECK(h == 1);
  CHECK_THROWS_AS(parallel_for(4, [](int k) { if (k == 2) throw NumericalFailure("x"); }), NumericalFailure);
}

TEST_CASE("heine-mehler type I at alpha 5.5 and m 3") {
  const ConvergenceTrack t = heine_mehler_sweep(LagFamily{LagType::I, 5.5, 3}, kSweepDegrees, 40.0);
  REQUIRE(t.points.size() == 5);
  CHECK(strictly_decreasing(t));
  CHECK(end_ratio(t) <= 1.0 / 3.0);
  CHECK(loglog_slope(t) >= -1.4);
  CHECK(loglog_slope(t) <= -0.6);
}

TEST_CASE("heine-mehler m = 0 matches the classical track") {
  const ConvergenceTrack a = heine_mehler_sweep(LagFamily{LagType::I, 5.5, 0}, kSweepDegrees);
  const ConvergenceTrack b = heine_mehler_sweep(ClassicalLaguerre{5.5}, kSweepDegrees);
  for (std::size_t k = 0; k < a.points.size(); ++k) CHECK(std::abs(a.points[k].error - b.points[k].error) <= 1e-12);
  const ConvergenceTrack c = heine_mehler_sweep(JacFamily{2.0, 0.5, 0}, kSweepDegrees);
  const ConvergenceTrack d = heine_mehler_sweep(ClassicalJacobi{2.0, 0.5}, kSweepDegrees);
  for (std::size_t k = 0; k < c.points.size(); ++k) CHECK(std::abs(c.points[k].error - d.points[k].error) <= 1e-12);
}

TEST_CASE("heine-mehler type II limit at zero") {
  const Family f = LagFamily{LagType::II, 1.0, 1};
  const double limit = -binomial(-1.0, 1) / gamma_function(2.0);
  CHECK(heine_mehler_limit(f, 0.0) == Approx(limit).epsilon(1e-15));
  double prev = INFINITY;
  for (int n : {2, 8, 32, 128}) {
    const double err = std::abs(heine_mehler_scaled(f, n, 0.0) - limit);
    CHECK(std::isfinite(err));
    CHECK(err < prev);
    prev = err;
  }
}

TEST_CASE("heine-mehler jacobi and type II") {
  for (const Family& f : {Family{LagFamily{LagType::II, 3.0, 2}}, Family{JacFamily{3.5, 1.0, 2}}}) {
    const ConvergenceTrack t = heine_mehler_sweep(f, kSweepDegrees);
    CAPTURE(t.label);
    CHECK(strictly_decreasing(t));
    CHECK(end_ratio(t) <= 1.0 / 3.0);
  }
}

TEST_CASE("heine-mehler supports degree 200") {
  const ConvergenceTrack t = heine_mehler_sweep(LagFamily{LagType::I, 5.5, 3}, {100, 200});
  CHECK(t.points[1].error < t.points[0].error);
}

TEST_CASE("heine-mehler rejects bad input") {
  CHECK_THROWS_AS(heine_mehler_sweep(ClassicalLaguerre{-1.5}, {20}), InvalidParameter);
  CHECK_THROWS_AS(heine_mehler_sweep(LagFamily{LagType::I, 5.5, 3}, {40, 20}), InvalidParameter);
  CHECK_THROWS_AS(heine_mehler_sweep(LagFamily{LagType::I, 5.5, 3}, {2}), InvalidParameter);
}

TEST_CASE("scaled zero tracks") {
  const ConvergenceTrack t = scaled_zero_track(LagFamily{LagType::I, 5.5, 3}, 1, {10, 20, 40, 80});
  CHECK(strictly_decreasing(t));
  const ConvergenceTrack c = scaled_zero_track(ClassicalLaguerre{5.5}, 1, {10, 20, 40, 80});
  CHECK(strictly_decreasing(c));
  const ConvergenceTrack m0 = scaled_zero_track(LagFamily{LagType::I, 5.5, 0}, 1, {10, 20});
  for (std::size_t k = 0; k < 2; ++k) CHECK(m0.points[k].error == Approx(c.points[k].error).epsilon(1e-12));
  const ConvergenceTrack ii = scaled_zero_track(LagFamily{LagType::II, 14.01, 15}, 1, {5, 85});
  CHECK(ii.points[1].error < ii.points[0].error);
  const ConvergenceTrack second = scaled_zero_track(LagFamily{LagType::I, 3.5, 2}, 2, {10, 40});
  CHECK(second.points[1].error < second.points[0].error);
  const ConvergenceTrack jac = scaled_zero_track(JacFamily{3.5, 1.0, 2}, 1, {10, 100});
  CHECK(jac.points[1].error < jac.points[0].error);
  CHECK_THROWS_AS(scaled_zero_track(ClassicalLaguerre{5.5}, 3, {2, 10}), InvalidParameter);
}

TEST_CASE("hard edge zero is a zero") {
  const Family f = LagFamily{LagType::I, 5.5, 3};
  const double x = hard_edge_zero(f, 23, 1);
  CHECK(std::abs(value(f, 23, x)) < 1e-8 * std::abs(value(f, 23, 0.0)));
  const ZeroSet z = family_zeros(f, 23);
  CHECK(x == Approx(z.regular.front()).epsilon(1e-12));
}

TEST_CASE("exceptional zero tracks") {
  const ConvergenceTrack zero = exceptional_zero_track(LagFamily{LagType::I, 3.5, 0}, {1, 5, 10});
  for (const auto& p : zero.points) CHECK(p.error == 0.0);
  const ConvergenceTrack two = exceptional_zero_track(LagFamily{LagType::II, 14.01, 15}, {1, 22});
  CHECK(two.points[1].error < two.points[0].error);
  const ConvergenceTrack one = exceptional_zero_track(LagFamily{LagType::I, 3.5, 6}, {1, 22});
  CHECK(one.points[1].error < one.points[0].error);
  const ConvergenceTrack jac = exceptional_zero_track(JacFamily{3.5, 1.0, 2}, {1, 22});
  CHECK(jac.points[1].error < jac.points[0].error);
}

TEST_CASE("outer ratio checks") {
  const Family one = LagFamily{LagType::I, 1.0, 2};
  CHECK(outer_ratio_check(one, 160, {{-5.0, 0.0}}) < outer_ratio_check(one, 20, {{-5.0, 0.0}}));
  CHECK(outer_ratio_check(LagFamily{LagType::I, 1.0, 0}, 20, {{-5.0, 0.0}, {2.0, 3.0}}) < 1e-14);
  const Family two = LagFamily{LagType::II, 1.0, 1};
  for (int j : {20, 40}) {
    const double r = outer_ratio_check(two, 4 * j, {{-3.0, 0.0}}) / outer_ratio_check(two, j, {{-3.0, 0.0}});
    CHECK(r >= 0.3);
    CHECK(r <= 0.8);
  }
  const Family jac = JacFamily{3.5, 1.0, 2};
  CHECK(outer_ratio_check(jac, 160, {{-2.0, 0.0}, {0.0, 1.0}}) < outer_ratio_check(jac, 20, {{-2.0, 0.0}, {0.0, 1.0}}));
  CHECK_THROWS_AS(outer_ratio_check(one, 20, {{-0.2, 0.0}}), InvalidParameter);
  CHECK_THROWS_AS(outer_ratio_check(jac, 20, {{1.2, 0.0}}), InvalidParameter);
}

TEST_CASE("gram matrices") {
  const GramReport g = gram_matrix(LagFamily{LagType::I, 5.5, 3}, 15, 120);
  CHECK(g.size == 13);
  CHECK(g.max_offdiag_ratio < 1e-8);
  for (double d : g.diag) CHECK(d > 0.0);
  CHECK(gram_matrix(ClassicalLaguerre{2.0}, 12, 120).max_offdiag_ratio < 1e-10);
  CHECK(gram_matrix(LagFamily{LagType::I, 2.0, 0}, 12, 120).max_offdiag_ratio < 1e-10);
  CHECK(gram_matrix(ClassicalJacobi{0.5, -0.5}, 12, 120).max_offdiag_ratio < 1e-10);
  CHECK(gram_matrix(JacFamily{0.75, -0.5, 2}, 12, 120).max_offdiag_ratio < 1e-7);
  CHECK(gram_doubling_deviation(LagFamily{LagType::I, 5.5, 3}, 15, 120) < 1e-9);
}

TEST_CASE("gram matrix errors") {
  CHECK_THROWS_AS(gram_matrix(LagFamily{LagType::I, 5.5, 3}, 15, 40), NumericalFailure);
  CHECK_THROWS_AS(gram_matrix(JacFamily{0.5, -0.5, 2}, 12, 120), InvalidParameter);
  CHECK_THROWS_AS(gram_matrix(JacFamily{0.5, 0.0, 1}, 12, 120), InvalidParameter);
  CHECK_THROWS_AS(gram_matrix(LagFamily{LagType::I, 5.5, 3}, 2, 120), InvalidParameter);
}
