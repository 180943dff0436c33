#pragma once

// Zeros of the normalised ultraspherical polynomials, the position of the
// vertex x~ of T_n relative to the two largest zeros of G_{n+1}, and the
// Christoffel-Darboux kernel y'_{n+1} y_n - y'_n y_{n+1}.

#include "turankit/numeric.hpp"

#include <cstddef>
#include <vector>

namespace turankit {

enum class ZeroMethod { Bisection, ExactSturm };

struct ZeroSet {
  Rational lambda;
  std::size_t degree = 0;
  /// Descending.
  std::vector<Real> zeros;
  ZeroMethod method = ZeroMethod::Bisection;
  Rational tolerance;
  unsigned precision_bits = 0;
};

/// 10^-20.
Rational default_zero_tolerance();

/// All zeros of G_degree to absolute tolerance `tol`.  Bisection brackets each
/// zero between consecutive zeros of G_{degree-1} (and -1, 1); the exact
/// method isolates roots of the exact coefficient vector with Sturm chains.
/// Throws std::invalid_argument for lambda <= -1/2 or degree = 0, and
/// std::runtime_error if a bracket loses its sign change after one precision
/// escalation.
ZeroSet isolate_zeros(const Rational& lambda, std::size_t degree, const Rational& tol = default_zero_tolerance(),
                      Precision p = Precision(kDefaultPrecisionBits), ZeroMethod method = ZeroMethod::Bisection);

enum class ClaimVerdict { Holds, Fails };

struct ClaimReport {
  Rational lambda;
  std::size_t n = 0;
  Rational theta;
  Real x_tilde;
  Real x1;
  Real x2;
  /// x~ > x2 for lambda < 0, x~ > x1 for lambda >= 0.
  ClaimVerdict verdict = ClaimVerdict::Fails;
  /// Which side of x1 the vertex falls on (informational for lambda < 0).
  bool x_tilde_above_x1 = false;
};

/// Uses the exponent 4/(2-l) or 2/(1+2l).  Requires n >= 1.
ClaimReport claim_vertex_vs_zeros(const Rational& lambda, std::size_t n,
                                  Precision p = Precision(kDefaultPrecisionBits));

struct KernelReport {
  std::size_t points = 0;
  Real min_value;
  Real argmin_x;
  bool all_positive = false;
};

/// y'_{n+1}(x) y_n(x) - y'_n(x) y_{n+1}(x) on the grid.  The kernel is
/// well defined at zeros of y_n, so no point is dropped.
KernelReport cd_kernel_positivity(const Rational& lambda, std::size_t n, const std::vector<Real>& grid,
                                  Precision p = Precision(kDefaultPrecisionBits));

}  // namespace turankit
