#include "turankit/certify.hpp"
#include "turankit/curves.hpp"

#include <stdexcept>

namespace turankit {

namespace {

enum class Trial { Nonnegative, Counterexample };

Rational scan_start(const Rational& lambda, std::size_t n, const Rational& theta, Precision p) {
  if (theta <= 0 || theta >= 2) return 0;
  const double x_tilde = to_double(vertex(UltrasphericalCurves{lambda, n, theta}, Curve::Current, p).x_vertex);
  const double start = x_tilde - 0.1;
  if (start <= 0) return 0;
  // Round down to a multiple of 2^-20 to keep the grid endpoints short.
  return Rational(static_cast<long>(start * (1 << 20)), 1 << 20);
}

}  // namespace

ThetaEstimate sharp_theta(const Rational& lambda, std::size_t n, const SharpThetaOptions& options) {
  if (n == 0) throw std::invalid_argument("sharp_theta needs n >= 1");
  if (options.tol < Rational(1, 1000000)) throw std::invalid_argument("sharp_theta needs tol >= 1e-6");
  const FamilySpec family = FamilySpec::ultraspherical(lambda);

  ScanOptions scan;
  scan.grid_size = options.grid_size;
  scan.precision = options.precision;
  scan.allow_escalation = true;

  auto trial = [&](const Rational& theta) {
    const Interval range{scan_start(lambda, n, theta, options.precision), 1};
    const Certificate c = scan_min(family, n, ThetaRule::custom(theta), range, scan);
    if (c.outcome == Outcome::CertifiedNonnegative) return Trial::Nonnegative;
    if (c.outcome == Outcome::Counterexample) return Trial::Counterexample;
    throw std::runtime_error("sharp_theta: inconclusive scan at theta = " + to_string(theta) + " after escalation");
  };

  ThetaEstimate est;
  est.lambda = lambda;
  est.n = n;
  est.empirical = lambda < 0;
  if (est.empirical) est.notes = "EMPIRICAL";

  if (trial(Rational(2)) == Trial::Nonnegative) {
    est.theta_lo = 2;
    est.theta_hi = 2;
    est.hi_is_ceiling = true;
    est.iterations = 1;
    est.notes += std::string(est.notes.empty() ? "" : "; ") + "nonnegative at theta = 2; upper end is a ceiling";
    return est;
  }
  Rational lo = 0;
  Rational hi = 2;
  if (trial(lo) != Trial::Nonnegative) throw std::runtime_error("sharp_theta: Delta_n is negative already at theta = 0");
  est.iterations = 2;
  while (hi - lo > options.tol) {
    const Rational mid = (lo + hi) / 2;
    if (trial(mid) == Trial::Nonnegative) {
      lo = mid;
    } else {
      hi = mid;
    }
    ++est.iterations;
  }
  est.theta_lo = lo;
  est.theta_hi = hi;
  return est;
}

}  // namespace turankit
