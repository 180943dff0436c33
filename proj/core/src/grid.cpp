#include "turankit/grid.hpp"

#include <algorithm>
#include <stdexcept>

namespace turankit {

namespace {

void check_range(const Interval& range) {
  if (!(range.lo < range.hi)) throw std::invalid_argument("grid range must satisfy lo < hi");
}

}  // namespace

std::vector<Real> uniform_grid(const Interval& range, std::size_t count, Precision p) {
  check_range(range);
  if (count < 2) throw std::invalid_argument("uniform grid needs at least two points");
  std::vector<Real> grid;
  grid.reserve(count);
  const Rational step = (range.hi - range.lo) / Rational(count - 1);
  for (std::size_t i = 0; i < count; ++i) grid.push_back(to_real(Rational(range.lo + step * Rational(i)), p));
  return grid;
}

std::vector<Real> interior_grid(const Interval& range, std::size_t count, Precision p) {
  check_range(range);
  if (count < 1) throw std::invalid_argument("interior grid needs at least one point");
  std::vector<Real> grid;
  grid.reserve(count);
  const Rational step = (range.hi - range.lo) / Rational(count + 1);
  for (std::size_t i = 1; i <= count; ++i) grid.push_back(to_real(Rational(range.lo + step * Rational(i)), p));
  return grid;
}

std::vector<Real> clustered_grid(const Interval& range, std::size_t count, Precision p) {
  check_range(range);
  if (count < 16) throw std::invalid_argument("clustered grid needs at least 16 points");
  const std::size_t cluster = std::min<std::size_t>(count / 8, p.bits() / 2);
  std::vector<Real> grid = uniform_grid(range, count - cluster, p);
  const Rational width = range.hi - range.lo;
  Rational offset = width;
  for (std::size_t k = 1; k <= cluster; ++k) {
    offset /= 2;
    grid.push_back(to_real(Rational(range.hi - offset), p));
  }
  std::sort(grid.begin(), grid.end());
  return grid;
}

}  // namespace turankit
