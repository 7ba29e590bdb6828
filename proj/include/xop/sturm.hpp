#pragma once

#include <memory>

#include "xop/polynomial.hpp"

namespace xop {

/// Sturm sequence of a real polynomial, built in exact integer arithmetic on
/// the dyadic values of its double coefficients. Counts are exact for the
/// polynomial as stored.
class SturmSequence {
 public:
  explicit SturmSequence(const Polynomial& p);
  ~SturmSequence();
  SturmSequence(SturmSequence&&) noexcept;
  SturmSequence& operator=(SturmSequence&&) noexcept;

  /// Number of distinct real roots in (lo, hi]; lo and hi may be infinite.
  int count(double lo, double hi) const;
  /// Distinct real roots on the whole line.
  int count_all() const;
  /// Exact sign of p(x), x finite.
  int sign_at(double x) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Distinct real roots of p in the open interval (lo, hi).
int count_real_roots(const Polynomial& p, double lo, double hi);

}  // namespace xop
