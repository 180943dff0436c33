#pragma once

// Conics in the (x, tau) plane obtained by writing Delta_n and Delta_{n+1} as
// quadratics in t = p_{n+1} / p_n, their vertices, and the resultant of the
// pair in tau.  Three schemes:
//
//   ultraspherical   T_n:     (n+2l) t^2 - 2(n+l) x t + n w
//                    T_{n+1}: (n+2l+1) w t^2 - 2(n+l+1) x t + (n+1)
//   symmetric-unit   T_n:     (1-a_n) t^2 - x t + a_n w
//                    T_{n+1}: (1-a_{n+1}) w t^2 - x t + a_{n+1}
//   hermite          T_n:     (X+d_n) t^2 - (X+d_n) x t + a_n X
//                    T_{n+1}: X t^2 - (X+d_{n+1}) x t + a_{n+1} (X+d_{n+1})
//
// with w = x^theta, X = x^2, d_i = a_i - a_{i-1}.

#include "turankit/grid.hpp"
#include "turankit/numeric.hpp"
#include "turankit/rational_poly.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace turankit {

struct UltrasphericalCurves {
  Rational lambda;
  std::size_t n = 1;
  Rational theta;
};

struct SymmetricUnitCurves {
  Rational a_n;
  Rational a_next;
  Rational theta;
};

struct HermiteCurves {
  Rational a_prev;
  Rational a_cur;
  Rational a_next;
};

using CurveScheme = std::variant<UltrasphericalCurves, SymmetricUnitCurves, HermiteCurves>;

/// Throws std::invalid_argument when the scheme parameters are out of range.
void validate(const CurveScheme& scheme);
std::string describe(const CurveScheme& scheme);

enum class Curve { Current, Next };  // T_n, T_{n+1}

/// Coefficients of the named curve as a quadratic in tau, at x.
Quadratic<Real> curve_quadratic(const CurveScheme& scheme, Curve which, const Real& x, Precision p);

struct CurveBranches {
  Real x;
  Real tau_minus;
  Real tau_plus;
  Real discriminant;
  bool real = false;
};

/// Both roots in tau (tau_minus <= tau_plus) or real = false when the
/// discriminant is negative.  Throws std::domain_error when the leading
/// coefficient vanishes at x.
CurveBranches branches(const CurveScheme& scheme, Curve which, const Real& x, Precision p);

enum class VertexKind { X0, XTilde, Hermite };

struct VertexInfo {
  Real x_vertex;
  Real tau_vertex;
  VertexKind kind = VertexKind::X0;
};

/// Point where the discriminant of the named curve vanishes.  For the power
/// schemes the exponent is 1/(2 - theta); theta = 2 is accepted only when the
/// base is exactly 1 (vertex at x = 1), theta > 2 throws.
VertexInfo vertex(const CurveScheme& scheme, Curve which, Precision p);

/// Coefficients A, B, C of the ultraspherical resultant as polynomials in w = x^theta.
struct ResultantParts {
  RationalPoly A;
  RationalPoly B;
  RationalPoly C;
};
ResultantParts ultraspherical_parts(const Rational& lambda, std::size_t n);
ResultantParts symmetric_unit_parts(const Rational& a_n, const Rational& a_next);

/// R_n(x, theta): A^2 - 4 x^2 B C (ultraspherical), A^2 - x^2 B C
/// (symmetric-unit), or the cubic in x^2 (hermite).
Real resultant_Rn(const CurveScheme& scheme, const Real& x, Precision p);
/// Same value through the generic resultant of the two quadratics.
Real resultant_direct(const CurveScheme& scheme, const Real& x, Precision p);
/// Exact value where x^theta is rational (x in {0, 1} or theta an integer);
/// throws std::invalid_argument otherwise.
Rational resultant_Rn_exact(const CurveScheme& scheme, const Rational& x);

/// R_n as an exact polynomial: R_n(s) = poly(s^step) with x = s^v, w = s^u,
/// theta = u / v in lowest terms.  Only for the power schemes.
struct SymbolicResultant {
  RationalPoly poly;
  unsigned v = 1;
  unsigned u = 1;
  unsigned step = 1;
};
SymbolicResultant resultant_symbolic(const CurveScheme& scheme);

struct NestingViolation {
  Real x;
  std::string what;
};

struct NestingReport {
  std::size_t points = 0;
  /// Points where both curves are real.
  std::size_t compared = 0;
  std::vector<NestingViolation> violations;
  /// Degenerate scheme (lambda = 0 with theta = 2); nothing to compare.
  bool vacuous = false;
  /// Hermite only: value of T_n at the vertex of T_{n+1}.
  std::optional<Rational> hermite_vertex_value;
  bool ok() const { return violations.empty(); }
};

/// tau_n^- <= tau_{n+1}^- <= tau_{n+1}^+ <= tau_n^+ wherever T_{n+1} is real,
/// within 2^(-bits/2) relative.  Violations are collected, not thrown.
NestingReport nesting_check(const CurveScheme& scheme, const std::vector<Real>& grid, Precision p);

/// Default nesting grid: `count` points of (x0, 1] for the power schemes.
std::vector<Real> nesting_grid(const CurveScheme& scheme, std::size_t count, Precision p);

struct HermiteVertexValue {
  Rational closed_form;
  Rational direct;
};

/// T_n evaluated at the vertex of T_{n+1}, by the closed form
///   -(6 d'^3 + (17 a + 2 d) d'^2 + 6 a (2 a + d) d' + 4 a^2 d) / (3 a' + a)
/// and by direct substitution.  Requires a_prev < a_cur < a_next.
HermiteVertexValue hermite_vertex_value(const Rational& a_prev, const Rational& a_cur, const Rational& a_next);

/// b_0 .. b_3 of the hermite resultant written as sum b_i x^(2i).  Throws
/// std::logic_error if the x^8 term fails to cancel.
std::array<Rational, 4> hermite_resultant_coefficients(const Rational& a_prev, const Rational& a_cur,
                                                       const Rational& a_next);

struct RemarkProbe {
  Real x0;
  Real x_hat;  // (3 x0 + 1) / 4
  bool real = false;
  Real gap_plus;   // tau_n^+ - tau_{n+1}^+
  Real gap_minus;  // tau_{n+1}^- - tau_n^-
  Real resultant;
  Real lead_plus;       // 3 l ((4 - l) theta - 8) / (4 (2 - theta) n^2)
  Real lead_minus;      // l ((4 + 3 l) theta - 8) / (4 (2 - theta) n^2)
  Real lead_resultant;  // 9/2 (8 + l^2) l^4 n^-4, meaningful at theta = 8 / (4 - l)
};

/// Large-n intersection diagnostics at x_hat; 256 bits by default.
RemarkProbe remark_asymptotics_probe(const Rational& lambda, const Rational& theta, std::size_t n,
                                     Precision p = Precision(kEscalatedPrecisionBits));

}  // namespace turankit
