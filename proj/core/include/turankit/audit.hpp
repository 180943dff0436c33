#pragma once

// Auxiliary quantities behind the positivity of the ultraspherical resultant
// R_n(x, theta) = A^2 - 4 x^2 B C, with w = x^theta:
//
//   rho(x)  = R_0 / (4 l^2) = 1 - 2(1+l) x^2 + (1+2l) x^2 w
//   eta(x)  = 1 - (3+l) x^2 + (1 + x^2 + l x^2) w
//   D_n     = (R_n - R_0) / (n (n+2l+1) (1-w))
//           = n (n+2l+1) (1-w)(1-2x+w)(1+2x+w) + 4 l eta(x)
//   g(n, l) = 2 ln((n+1)(n+2l+1)/(n+l+1)^2) - l ln(n(n+2l+1)/((n+1)(n+2l)))
//
// For l < 0 the lower bound A^2 - 4 w B C factors in z = 1 - w as
//   z (n z + 2l) ((n+2l+1) z - 2l) ((n+2l+1) n z + 2l).

#include "turankit/numeric.hpp"
#include "turankit/rational_poly.hpp"

#include <cstddef>
#include <vector>

namespace turankit {

Real audit_rho(const Rational& lambda, const Rational& theta, const Real& x, Precision p);
Real audit_eta(const Rational& lambda, const Rational& theta, const Real& x, Precision p);
/// Closed form of D_n.
Real audit_D(const Rational& lambda, std::size_t n, const Rational& theta, const Real& x, Precision p);

/// g(n, l) for real n > 0.
Real audit_g(const Real& n, const Rational& lambda, Precision p);
/// -2 l^2 (3n + 2l^2 + 3l + 1) / (n (n+1) (n+l+1) (n+2l) (n+2l+1)).
Real audit_dg_dn(const Real& n, const Rational& lambda, Precision p);

/// (R_n - R_0) - n (n+2l+1) (1-w) D_n as a polynomial in w at fixed rational x;
/// identically zero.
RationalPoly d_identity_residual(const Rational& lambda, std::size_t n, const Rational& x);

enum class LastFactorSign { Plus, Minus };

/// A^2 - 4 w B C minus the four-factor product, as a polynomial in w.  With
/// LastFactorSign::Plus (the correct identity) the residual is zero; Minus
/// uses ((n+2l+1) n z - 2l) and leaves a nonzero residual.
RationalPoly case_two_factorization_residual(const Rational& lambda, std::size_t n,
                                             LastFactorSign sign = LastFactorSign::Plus);

/// Symmetric-unit analogue: A^2 - w B C minus
///   (1-w)(1 - a_n - a_n w)(a_{n+1} - (1-a_{n+1}) w)(a_{n+1}(1-a_n) - a_n(1-a_{n+1}) w).
RationalPoly theorem_two_factorization_residual(const Rational& a_n, const Rational& a_next);

enum class AuditCase { PositiveLambda, NegativeLambda };

struct AuditPoint {
  Real x;
  Real rho;
  Real eta;
  Real D;
  Real R;
};

struct AuditReport {
  Rational lambda;
  std::size_t n = 0;
  Rational theta;
  AuditCase lemma_case = AuditCase::PositiveLambda;

  std::vector<AuditPoint> points;
  bool R_positive = false;
  /// D-identity residuals at the sample abscissae; all zero.
  std::vector<RationalPoly> d_identity_residuals;

  // Positive lambda.
  bool rho_positive = false;
  bool eta_positive = false;
  bool D_positive = false;
  Rational rho_at_one;
  Rational eta_at_one;

  // Negative lambda.
  RationalPoly factorization_residual;
  Real g;
  Real dg_dn;
  Real dg_dn_numeric;
  bool g_positive = false;
  bool dg_negative = false;
  bool dg_matches = false;
  /// x0^theta against (n+1)(n+2l) / (n (n+2l+1)).
  Real x0_pow_theta;
  Real threshold;
  bool x0_beyond_threshold = false;

  bool identities_hold() const;
  bool all_claims_hold() const;
};

/// Evaluates every quantity for one (lambda, n, theta) on `count` interior
/// points of (0, 1) and checks the sign claims of the matching case.
/// Throws std::invalid_argument for lambda = 0 or lambda <= -1/2, or n = 0.
AuditReport audit_lemma_quantities(const Rational& lambda, std::size_t n, const Rational& theta,
                                   std::size_t count = 999, Precision p = Precision(kDefaultPrecisionBits));

}  // namespace turankit
