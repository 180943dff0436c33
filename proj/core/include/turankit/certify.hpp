#pragma once

// Nonnegativity certificates for Delta_n, the sharp-exponent search and batch
// tables.
//
// Exact route: with theta = u/v, x = s^v turns Delta_n on [0, 1] into the
// polynomial s^u G_n(s^v)^2 - G_{n-1}(s^v) G_{n+1}(s^v).  Its (1 - s)^m factor
// is removed and the quotient is shown root-free on (0, 1) by a Sturm count.
// Delta_n is even in x for symmetric families, so [0, 1] covers [-1, 1].
//
// Numeric route: a grid scan (uniform plus points clustered at the upper
// endpoint) followed by golden-section refinement from the smallest local
// minima.

#include "turankit/families.hpp"
#include "turankit/grid.hpp"
#include "turankit/turan.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace turankit {

enum class CertificateMode { ExactSturm, NumericScan };
enum class Outcome { CertifiedNonnegative, Counterexample, Inconclusive };

std::string to_string(CertificateMode mode);
std::string to_string(Outcome outcome);

struct ExactDetails {
  unsigned u = 1;  // theta = u / v
  unsigned v = 1;
  /// Delta(s) = q(s^step).
  unsigned step = 1;
  int degree = 0;  // of q
  std::size_t multiplicity = 0;
  /// Distinct roots of the quotient in (0,1).
  std::size_t interior_roots = 0;
  /// Those of odd multiplicity; only these can change the sign.
  std::size_t sign_changing_roots = 0;
  /// Quotient at sample_point, the first of 1/2, 1/3, 2/3, 1/4, ... where it is nonzero.
  Rational sample_point;
  Rational sample_value;
  Rational value_at_zero;
  Rational value_at_one;
};

struct ScanDetails {
  std::size_t grid_size = 0;
  /// Precision actually used (after escalation).
  unsigned precision_bits = 0;
  bool escalated = false;
  /// Magnitude of the cancelling terms at the argmin.
  Real scale;
};

struct Certificate {
  CertificateMode mode = CertificateMode::NumericScan;
  std::string family;
  std::size_t n = 0;
  std::string theta;  // rule description
  std::optional<Rational> theta_exact;
  Real lo;
  Real hi;
  Outcome outcome = Outcome::Inconclusive;
  /// Smallest value seen and where (numeric), or the witness (both modes).
  Real min_value;
  Real argmin_x;
  std::optional<ExactDetails> exact;
  std::optional<ScanDetails> scan;
  std::string notes;
};

/// Exact Sturm certificate on [0, 1].  Throws std::invalid_argument unless
/// 0 < theta <= 2 and lambda > -1/2.
Certificate certify_exact(const Rational& lambda, std::size_t n, const Rational& theta);

struct ScanOptions {
  std::size_t grid_size = 4096;
  Precision precision = Precision(kDefaultPrecisionBits);
  /// Local minima refined by golden section.
  std::size_t refine_candidates = 4;
  std::size_t refine_iterations = 60;
  /// One retry at doubled precision when the minimum is inside the noise band.
  bool allow_escalation = true;
};

/// Grid scan of Delta_n on [lo, hi].  Outcome:
///   counterexample  min < -2^(-bits/3) and still negative at doubled precision;
///   nonnegative     min >= -2^(-bits/2) * scale;
///   inconclusive    otherwise, after one escalation.
/// Throws std::invalid_argument for grid_size < 64.
Certificate scan_min(const FamilySpec& family, std::size_t n, const ThetaRule& rule, const Interval& range,
                     const ScanOptions& options = {});

/// scan_min for n = 1 .. n_max, sharing the recurrence and the grid.
std::vector<Certificate> scan_min_range(const FamilySpec& family, std::size_t n_max, const ThetaRule& rule,
                                        const Interval& range, const ScanOptions& options = {});

struct ThetaEstimate {
  Rational lambda;
  std::size_t n = 0;
  /// Largest exponent seen to be nonnegative and smallest with a verified counterexample.
  Rational theta_lo;
  Rational theta_hi;
  std::size_t iterations = 0;
  std::string backend = "numeric-scan";
  /// No counterexample exists at theta = 2, so theta_hi = 2 is a ceiling, not a witness.
  bool hi_is_ceiling = false;
  /// lambda < 0: no closed form for the sharp exponent is known.
  bool empirical = false;
  std::string notes;
};

struct SharpThetaOptions {
  Rational tol = Rational(1, 10000);
  std::size_t grid_size = 2048;
  Precision precision = Precision(kDefaultPrecisionBits);
};

/// Bisection on theta in (0, 2].  Each trial scans [max(0, x~(theta) - 1/10), 1].
/// Throws std::invalid_argument for tol < 1e-6, std::runtime_error when a
/// trial stays inconclusive after escalation.
ThetaEstimate sharp_theta(const Rational& lambda, std::size_t n, const SharpThetaOptions& options = {});

struct TaylorCheck {
  Real slope_fd;
  Real slope_formula;  // (2 - theta (1 + 2l)) / (1 + 2l)
  Real quad_fd;
  /// 4 (3n^2 + 6 l n + 2 l^2 - l) / ((3 + 2l)(1 + 2l)^2), only at theta = 2/(1+2l), l >= 0.
  std::optional<Real> quad_formula;
  /// |slope_fd - slope_formula| <= 1e-6 max(1, |slope_formula|).
  bool slope_matches = false;
  bool quad_matches = false;
};

/// Taylor coefficients of Delta_n in (1 - x) at x = 1, by finite differences
/// with steps 2^-30, 2^-31, 2^-32 at 256 bits and Richardson extrapolation.
TaylorCheck taylor_slope_check(const Rational& lambda, std::size_t n, const Rational& theta);

enum class BatchMode { Check, SharpTheta };

struct BatchOptions {
  bool exact = false;
  ScanOptions scan;
  SharpThetaOptions sharp;
};

struct BatchRow {
  Rational lambda;
  std::size_t n = 0;
  std::optional<Certificate> certificate;
  std::optional<ThetaEstimate> estimate;
  std::string error;
};

/// One row per (lambda, n), lambda-major.  Errors are recorded per row.
/// Throws std::invalid_argument when either grid is empty.
std::vector<BatchRow> batch_table(const std::vector<Rational>& lambdas, const std::vector<std::size_t>& ns,
                                  BatchMode mode, const BatchOptions& options = {});

}  // namespace turankit
