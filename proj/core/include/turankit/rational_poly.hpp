#pragma once

#include "turankit/numeric.hpp"

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace turankit {

/// Dense univariate polynomial with exact rational coefficients, index = power.
/// Trailing zeros are trimmed; the zero polynomial has no coefficients.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);
  RationalPoly(std::initializer_list<Rational> coeffs);

  static RationalPoly constant(const Rational& c);
  static RationalPoly monomial(const Rational& c, std::size_t power);
  /// The identity polynomial x.
  static RationalPoly identity();

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^i (zero beyond the degree).
  Rational coeff(std::size_t i) const;
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;
  Real evaluate(const Real& x) const;

  RationalPoly derivative() const;
  /// p(a x + b).
  RationalPoly compose_linear(const Rational& a, const Rational& b) const;

  RationalPoly& operator+=(const RationalPoly& rhs);
  RationalPoly& operator-=(const RationalPoly& rhs);
  RationalPoly& operator*=(const RationalPoly& rhs);
  RationalPoly& operator*=(const Rational& s);

  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(RationalPoly a, const Rational& s) { return a *= s; }
  friend RationalPoly operator*(const Rational& s, RationalPoly a) { return a *= s; }
  friend RationalPoly operator-(RationalPoly a);
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

RationalPoly scale(const RationalPoly& p, const Rational& s);
RationalPoly pow(const RationalPoly& p, unsigned e);

struct DivMod {
  RationalPoly quotient;
  RationalPoly remainder;
};

/// Euclidean division; throws std::domain_error when dividing by zero.
DivMod divmod(const RationalPoly& a, const RationalPoly& b);
/// Monic greatest common divisor (zero when both inputs are zero).
RationalPoly gcd(const RationalPoly& a, const RationalPoly& b);
/// Monic square-free polynomial whose roots are exactly the roots of p with odd
/// multiplicity (Yun's decomposition). A nonzero constant gives 1.
RationalPoly odd_multiplicity_part(const RationalPoly& p);

/// p(s^v); output degree is v * deg(p).
RationalPoly substitute_power(const RationalPoly& p, unsigned v);

/// Writes p(s) = q(s^step) with the largest step dividing every exponent present.
struct CompressedPoly {
  RationalPoly poly;
  unsigned step = 1;
};
CompressedPoly compress_exponents(const RationalPoly& p);

/// p(s) = (1 - s)^multiplicity * quotient(s), quotient(1) != 0.
struct Deflation {
  std::size_t multiplicity = 0;
  RationalPoly quotient;
};
Deflation deflate_at_one(const RationalPoly& p);

/// Human readable form, highest power first, e.g. "3/2*x^2 - 1/2".
std::string to_string(const RationalPoly& p, std::string_view var = "x");

// ---------------------------------------------------------------------------
// Resultant of two quadratics a1 t^2 + b1 t + c1 and a2 t^2 + b2 t + c2 in t.

template <class T>
struct Quadratic {
  T a;
  T b;
  T c;
};

inline bool is_zero_value(const Rational& v) { return v == 0; }
inline bool is_zero_value(const Real& v) { return v == 0; }
inline bool is_zero_value(const RationalPoly& v) { return v.is_zero(); }

/// (a1 c2 - a2 c1)^2 - (a1 b2 - a2 b1)(b1 c2 - b2 c1).  Works for Rational,
/// Real and RationalPoly coefficients; throws when a leading coefficient is zero.
template <class T>
T resultant_quadratics(const Quadratic<T>& q1, const Quadratic<T>& q2) {
  if (is_zero_value(q1.a) || is_zero_value(q2.a)) {
    throw std::domain_error("resultant_quadratics: degenerate leading coefficient");
  }
  const T ac = q1.a * q2.c - q2.a * q1.c;
  const T ab = q1.a * q2.b - q2.a * q1.b;
  const T bc = q1.b * q2.c - q2.b * q1.c;
  return T(ac * ac - ab * bc);
}

}  // namespace turankit
