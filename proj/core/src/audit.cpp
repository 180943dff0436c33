#include "turankit/audit.hpp"

#include "turankit/curves.hpp"
#include "turankit/grid.hpp"

#include <stdexcept>

namespace turankit {

namespace {

Real w_of(const Rational& theta, const Real& x, Precision p) { return abs_pow(to_real(x, p), to_real(theta, p)); }

RationalPoly w_poly() { return RationalPoly::identity(); }
RationalPoly c(const Rational& v) { return RationalPoly::constant(v); }

// R_n as a polynomial in w at fixed x.
RationalPoly resultant_in_w(const Rational& lambda, std::size_t n, const Rational& x) {
  const ResultantParts r = ultraspherical_parts(lambda, n);
  return r.A * r.A - Rational(4 * x * x) * r.B * r.C;
}

}  // namespace

Real audit_rho(const Rational& lambda, const Rational&theta, const Real& x_in, Precision p) {
  const Real x = to_real(x_in, p);
  const Real w = w_of(theta, x, p);
  const Real x2 = x * x;
  return Real(1 - 2 * to_real(Rational(1 + lambda), p) * x2 + to_real(Rational(1 + 2 * lambda), p) * x2 * w);
}

Real audit_eta(const Rational& lambda, const Rational& theta, const Real& x_in, Precision p) {
  const Real x = to_real(x_in, p);
  const Real w = w_of(theta, x, p);
  const Real x2 = x * x;
  const Real l = to_real(lambda, p);
  return Real(1 - (3 + l) * x2 + (1 + x2 + l * x2) * w);
}

Real audit_D(const Rational& lambda, std::size_t n, const Rational& theta, const Real& x_in, Precision p) {
  const Real x = to_real(x_in, p);
  const Real w = w_of(theta, x, p);
  const Rational nn(n);
  const Real k = to_real(Rational(nn * (nn + 2 * lambda + 1)), p);
  return Real(k * (1 - w) * (1 - 2 * x + w) * (1 + 2 * x + w) +
              4 * to_real(lambda, p) * audit_eta(lambda, theta, x, p));
}

Real audit_g(const Real& n_in, const Rational& lambda, Precision p) {
  const Real n = to_real(n_in, p);
  const Real l = to_real(lambda, p);
  const Real first = log((n + 1) * (n + 2 * l + 1) / ((n + l + 1) * (n + l + 1)));
  const Real second = log(n * (n + 2 * l + 1) / ((n + 1) * (n + 2 * l)));
  return Real(2 * first - l * second);
}

Real audit_dg_dn(const Real& n_in, const Rational& lambda, Precision p) {
  const Real n = to_real(n_in, p);
  const Real l = to_real(lambda, p);
  const Real num = -2 * l * l * (3 * n + 2 * l * l + 3 * l + 1);
  const Real den = n * (n + 1) * (n + l + 1) * (n + 2 * l) * (n + 2 * l + 1);
  return Real(num / den);
}

RationalPoly d_identity_residual(const Rational& lambda, std::size_t n, const Rational& x) {
  const Rational nn(n);
  const Rational k = nn * (nn + 2 * lambda + 1);
  const RationalPoly w = w_poly();
  const RationalPoly one_minus_w = c(1) - w;
  const RationalPoly eta = c(Rational(1 - (3 + lambda) * x * x)) + Rational(1 + x * x + lambda * x * x) * w;
  const RationalPoly D = k * one_minus_w * (c(Rational(1 - 2 * x)) + w) * (c(Rational(1 + 2 * x)) + w) +
                         Rational(4 * lambda) * eta;
  return resultant_in_w(lambda, n, x) - resultant_in_w(lambda, 0, x) - k * one_minus_w * D;
}

RationalPoly case_two_factorization_residual(const Rational& lambda, std::size_t n, LastFactorSign sign) {
  const Rational nn(n);
  const Rational m = nn + 2 * lambda + 1;
  const ResultantParts r = ultraspherical_parts(lambda, n);
  const RationalPoly w = w_poly();
  const RationalPoly z = c(1) - w;
  const Rational last = sign == LastFactorSign::Plus ? Rational(2 * lambda) : Rational(-2 * lambda);
  const RationalPoly product =
      z * (nn * z + c(2 * lambda)) * (m * z - c(2 * lambda)) * (Rational(m * nn) * z + c(last));
  return r.A * r.A - Rational(4) * w * r.B * r.C - product;
}

RationalPoly theorem_two_factorization_residual(const Rational& a_n, const Rational& a_next) {
  const ResultantParts r = symmetric_unit_parts(a_n, a_next);
  const RationalPoly w = w_poly();
  const RationalPoly product = (c(1) - w) * (c(Rational(1 - a_n)) - a_n * w) *
                               (c(a_next) - Rational(1 - a_next) * w) *
                               (c(Rational(a_next * (1 - a_n))) - Rational(a_n * (1 - a_next)) * w);
  return r.A * r.A - w * r.B * r.C - product;
}

bool AuditReport::identities_hold() const {
  for (const RationalPoly& res : d_identity_residuals) {
    if (!res.is_zero()) return false;
  }
  return lemma_case == AuditCase::PositiveLambda ? (rho_at_one == 0 && eta_at_one == 0)
                                                 : factorization_residual.is_zero();
}

bool AuditReport::all_claims_hold() const {
  if (!identities_hold() || !R_positive) return false;
  if (lemma_case == AuditCase::PositiveLambda) return rho_positive && eta_positive && D_positive;
  return g_positive && dg_negative && dg_matches && x0_beyond_threshold;
}

AuditReport audit_lemma_quantities(const Rational& lambda, std::size_t n, const Rational& theta, std::size_t count,
                                   Precision p) {
  if (lambda == 0) throw std::invalid_argument("audit covers lambda > 0 and -1/2 < lambda < 0, not lambda = 0");
  if (lambda <= Rational(-1, 2)) throw std::invalid_argument("audit needs lambda > -1/2");
  if (n == 0) throw std::invalid_argument("audit needs n >= 1");
  if (theta <= 0 || theta >= 2) throw std::invalid_argument("audit needs 0 < theta < 2");

  AuditReport rep;
  rep.lambda = lambda;
  rep.n = n;
  rep.theta = theta;
  rep.lemma_case = lambda > 0 ? AuditCase::PositiveLambda : AuditCase::NegativeLambda;

  const CurveScheme scheme = UltrasphericalCurves{lambda, n, theta};
  rep.R_positive = rep.rho_positive = rep.eta_positive = rep.D_positive = true;
  for (const Real& x : interior_grid(Interval{0, 1}, count, p)) {
    AuditPoint pt{x, audit_rho(lambda, theta, x, p), audit_eta(lambda, theta, x, p),
                  audit_D(lambda, n, theta, x, p), resultant_Rn(scheme, x, p)};
    rep.R_positive = rep.R_positive && pt.R > 0;
    rep.rho_positive = rep.rho_positive && pt.rho > 0;
    rep.eta_positive = rep.eta_positive && pt.eta > 0;
    rep.D_positive = rep.D_positive && pt.D > 0;
    rep.points.push_back(std::move(pt));
  }

  // R_n has degree 2 in x for fixed w, so five abscissae make the check an identity.
  for (const Rational& x : {Rational(0), Rational(1, 3), Rational(1, 2), Rational(7, 10), Rational(1)}) {
    rep.d_identity_residuals.push_back(d_identity_residual(lambda, n, x));
  }

  // At x = 1, w = 1.
  rep.rho_at_one = 1 - 2 * (1 + lambda) + (1 + 2 * lambda);
  rep.eta_at_one = 1 - (3 + lambda) + (2 + lambda);

  const Real nn = to_real(static_cast<long>(n), p);
  rep.g = audit_g(nn, lambda, p);
  rep.dg_dn = audit_dg_dn(nn, lambda, p);
  Real h = nn;
  mpfr_mul_2si(h.backend().data(), h.backend().data(), -20, MPFR_RNDN);
  rep.dg_dn_numeric = (audit_g(Real(nn + h), lambda, p) - audit_g(Real(nn - h), lambda, p)) / (2 * h);
  rep.dg_negative = rep.dg_dn < 0;
  rep.dg_matches = abs(rep.dg_dn_numeric - rep.dg_dn) <= abs(rep.dg_dn) * Real(1e-6);

  if (rep.lemma_case == AuditCase::NegativeLambda) {
    rep.factorization_residual = case_two_factorization_residual(lambda, n);
    rep.g_positive = rep.g > 0;
    const Real x0 = vertex(scheme, Curve::Next, p).x_vertex;
    rep.x0_pow_theta = abs_pow(x0, to_real(theta, p));
    const Rational q(n);
    rep.threshold = to_real(Rational((q + 1) * (q + 2 * lambda) / (q * (q + 2 * lambda + 1))), p);
    rep.x0_beyond_threshold = rep.x0_pow_theta > rep.threshold;
  } else {
    rep.x0_pow_theta = make_real(p);
    rep.threshold = make_real(p);
  }
  return rep;
}

}  // namespace turankit
