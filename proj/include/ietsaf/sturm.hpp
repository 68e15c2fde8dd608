#pragma once

#include "ietsaf/poly.hpp"

#include <utility>
#include <vector>

namespace ietsaf {

/// Sturm chain p, p', -rem(p, p'), ... for a squarefree p.
class SturmSequence {
 public:
  explicit SturmSequence(const RatPoly& p);

  const RatPoly& poly() const { return chain_.front(); }
  int sign_changes(const Rational& x) const;
  // Number of distinct real roots in (lo, hi].
  int count_half_open(const Rational& lo, const Rational& hi) const;
  // Number of distinct real roots in (lo, hi).
  int count_open(const Rational& lo, const Rational& hi) const;

 private:
  std::vector<RatPoly> chain_;
};

int sign(const Rational& q);

/// Disjoint intervals (lo, hi], each holding exactly one root of p in (lo, hi].
/// Sorted left to right. Throws InvalidInput for non-squarefree p or lo >= hi.
std::vector<std::pair<Rational, Rational>> sturm_isolate(const RatPoly& p, const Rational& lo, const Rational& hi);

}  // namespace ietsaf
