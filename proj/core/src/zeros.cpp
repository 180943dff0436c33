#include "turankit/zeros.hpp"

#include "turankit/curves.hpp"
#include "turankit/families.hpp"
#include "turankit/sturm.hpp"
#include "turankit/turan.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace turankit {

namespace {

int sign_of(const Real& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Ascending zeros, or nullopt when some bracket has no sign change at this precision.
std::optional<std::vector<Real>> bisection_zeros(const FamilySpec& family, std::size_t degree, const Real& tol,
                                                 Precision p) {
  const RecurrenceTable table(family, degree - 1, p);
  std::vector<Real> vals;
  std::vector<Real> prev;
  for (std::size_t k = 1; k <= degree; ++k) {
    auto f = [&](const Real& x) {
      table.values(x, vals);
      return vals[k];
    };
    std::vector<Real> edges;
    edges.reserve(prev.size() + 2);
    edges.push_back(to_real(-1, p));
    for (const Real& z : prev) edges.push_back(z);
    edges.push_back(to_real(1, p));

    std::vector<Real> cur;
    cur.reserve(k);
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
      Real lo = edges[i];
      Real hi = edges[i + 1];
      int s_lo = sign_of(f(lo));
      const int s_hi = sign_of(f(hi));
      if (s_lo == 0 || s_hi == 0 || s_lo == s_hi) return std::nullopt;
      Real mid = make_real(p);
      for (int iter = 0; iter < 4 * static_cast<int>(p.bits()) && hi - lo > tol; ++iter) {
        mid = (lo + hi) / 2;
        const int s_mid = sign_of(f(mid));
        if (s_mid == 0) {
          lo = mid;
          hi = mid;
          break;
        }
        if (s_mid == s_lo) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      if (hi - lo > tol) return std::nullopt;
      cur.push_back(Real((lo + hi) / 2));
    }
    prev = std::move(cur);
  }
  return prev;
}

}  // namespace

Rational default_zero_tolerance() {
  Rational r(1);
  for (int i = 0; i < 20; ++i) r /= 10;
  return r;
}

ZeroSet isolate_zeros(const Rational& lambda, std::size_t degree, const Rational& tol, Precision p,
                      ZeroMethod method) {
  if (degree == 0) throw std::invalid_argument("isolate_zeros needs degree >= 1");
  if (tol <= 0) throw std::invalid_argument("isolate_zeros needs tol > 0");
  const FamilySpec family = FamilySpec::ultraspherical(lambda);

  ZeroSet out;
  out.lambda = lambda;
  out.degree = degree;
  out.method = method;
  out.tolerance = tol;

  if (method == ZeroMethod::ExactSturm) {
    const RationalPoly poly = exact_coefficients(family, degree);
    for (const Interval& iv : isolate_real_roots(poly, Rational(-1), Rational(1), tol)) {
      out.zeros.push_back(to_real(Rational((iv.lo + iv.hi) / 2), p));
    }
    out.precision_bits = p.bits();
  } else {
    std::optional<std::vector<Real>> zeros = bisection_zeros(family, degree, to_real(tol, p), p);
    Precision used = p;
    if (!zeros) {
      used = p.doubled();
      zeros = bisection_zeros(family, degree, to_real(tol, used), used);
    }
    if (!zeros) {
      throw std::runtime_error("isolate_zeros: lost a sign change at " + std::to_string(used.bits()) + " bits");
    }
    out.zeros = std::move(*zeros);
    out.precision_bits = used.bits();
  }
  if (out.zeros.size() != degree) {
    throw std::runtime_error("isolate_zeros: found " + std::to_string(out.zeros.size()) + " zeros of a degree " +
                             std::to_string(degree) + " polynomial");
  }
  std::sort(out.zeros.begin(), out.zeros.end(), [](const Real& a, const Real& b) { return a > b; });
  return out;
}

ClaimReport claim_vertex_vs_zeros(const Rational& lambda, std::size_t n, Precision p) {
  if (n == 0) throw std::invalid_argument("claim check needs n >= 1");
  ClaimReport r;
  r.lambda = lambda;
  r.n = n;
  r.theta = theta_theorem1(lambda);
  r.x_tilde = vertex(UltrasphericalCurves{lambda, n, r.theta}, Curve::Current, p).x_vertex;
  const ZeroSet zs = isolate_zeros(lambda, n + 1, default_zero_tolerance(), p);
  r.x1 = zs.zeros[0];
  r.x2 = zs.zeros[1];
  const bool holds = lambda < 0 ? r.x_tilde > r.x2 : r.x_tilde > r.x1;
  r.verdict = holds ? ClaimVerdict::Holds : ClaimVerdict::Fails;
  r.x_tilde_above_x1 = r.x_tilde > r.x1;
  return r;
}

KernelReport cd_kernel_positivity(const Rational& lambda, std::size_t n, const std::vector<Real>& grid,
                                  Precision p) {
  if (grid.empty()) throw std::invalid_argument("kernel check needs a nonempty grid");
  const RecurrenceTable table(FamilySpec::ultraspherical(lambda), n, p);
  std::vector<Real> y;
  std::vector<Real> dy;
  KernelReport r;
  bool first = true;
  for (const Real& x : grid) {
    table.values_and_derivatives(x, y, dy);
    Real k = dy[n + 1] * y[n] - dy[n] * y[n + 1];
    if (first || k < r.min_value) {
      r.min_value = k;
      r.argmin_x = to_real(x, p);
      first = false;
    }
    ++r.points;
  }
  r.all_positive = r.min_value > 0;
  return r;
}

}  // namespace turankit
