#pragma once

#include "turankit/grid.hpp"
#include "turankit/rational_poly.hpp"

#include <cstddef>
#include <vector>

namespace turankit {

/// Sturm sequence p, p', -rem(...), ... of a square-free polynomial.
///
/// Elements are stored as primitive integer-coefficient polynomials; each is a
/// positive multiple of the corresponding classical element, so sign variations
/// are unchanged.  When the input had repeated factors it is first divided by
/// gcd(p, p') and `square_free_reduced` is set.
class SturmChain {
 public:
  explicit SturmChain(const RationalPoly& p);

  const std::vector<RationalPoly>& polys() const noexcept { return polys_; }
  bool square_free_reduced() const noexcept { return square_free_reduced_; }
  /// Square-free part of the input (first element of the chain).
  const RationalPoly& base() const { return polys_.front(); }

  /// Sign variations at x, zeros skipped.
  std::size_t variations(const Rational& x) const;
  std::size_t variations_at_pos_infinity() const;
  std::size_t variations_at_neg_infinity() const;

  /// Distinct real roots in the half-open interval (lo, hi].
  std::size_t count(const Rational& lo, const Rational& hi) const;
  std::size_t count_all() const;

 private:
  std::vector<RationalPoly> polys_;
  std::vector<std::vector<Integer>> integer_polys_;
  bool square_free_reduced_ = false;
};

/// Number of distinct real roots of p in (lo, hi].  Throws for the zero
/// polynomial or when lo >= hi.
std::size_t sturm_count_roots(const RationalPoly& p, const Rational& lo, const Rational& hi);

/// Cauchy bound: every real root lies in (-B, B).
Rational cauchy_root_bound(const RationalPoly& p);

/// Disjoint intervals (lo, hi], each holding exactly one distinct real root of
/// p inside (lo, hi], refined until hi - lo <= width.
std::vector<Interval> isolate_real_roots(const RationalPoly& p, const Rational& lo, const Rational& hi,
                                         const Rational& width);

}  // namespace turankit
