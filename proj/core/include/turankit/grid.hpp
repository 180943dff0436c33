#pragma once

#include "turankit/numeric.hpp"

#include <cstddef>
#include <vector>

namespace turankit {

struct Interval {
  Rational lo;
  Rational hi;
};

/// `count` equally spaced points including both endpoints (count >= 2).
std::vector<Real> uniform_grid(const Interval& range, std::size_t count, Precision p);

/// Uniform grid plus geometric points hi - (hi - lo) * 2^-k accumulating at the
/// upper endpoint, `count` points in total, sorted ascending.  The cluster holds
/// min(count / 8, bits / 2) points.
std::vector<Real> clustered_grid(const Interval& range, std::size_t count, Precision p);

/// Open-interval uniform grid: `count` interior points of (lo, hi).
std::vector<Real> interior_grid(const Interval& range, std::size_t count, Precision p);

}  // namespace turankit
