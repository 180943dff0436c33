#pragma once

// Scalar types shared by every module: exact rationals (GMP) and
// variable-precision binary floating point (MPFR).

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace turankit {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using Real = boost::multiprecision::mpfr_float;

inline constexpr unsigned kMinPrecisionBits = 53;
inline constexpr unsigned kDefaultPrecisionBits = 128;
inline constexpr unsigned kEscalatedPrecisionBits = 256;

/// Working precision in bits of mantissa.
class Precision {
 public:
  /// Throws std::invalid_argument below 53 bits.
  explicit Precision(unsigned bits);

  unsigned bits() const noexcept { return bits_; }
  Precision doubled() const { return Precision(2 * bits_); }

  /// 2^(-bits/divisor), the tolerance scale used throughout (divisor 2 or 3).
  Real tolerance(unsigned divisor) const;

  friend bool operator==(Precision a, Precision b) = default;

 private:
  unsigned bits_;
};

/// 128 bits, escalated to 256 when |x| > 0.9 or n > 50.
Precision automatic_precision(std::size_t n, double abs_x);

/// Default precision, honouring the TURANKIT_PRECISION environment variable.
Precision default_precision();

/// Fresh zero carrying exactly `p.bits()` of mantissa.
Real make_real(Precision p);
/// Correctly rounded conversion.
Real to_real(const Rational& q, Precision p);
Real to_real(long v, Precision p);
/// Re-rounds `x` to precision `p` (extends with zeros when `p` is larger).
Real to_real(const Real& x, Precision p);

unsigned precision_of(const Real& x);

/// |x|^theta with the limit value 0 at x = 0 (theta > 0).
Real abs_pow(const Real& x, const Real& theta);

/// Parses "p/q", "-3", "0.999", "1e-3", "-2.5E+2" into an exact rational.
/// Decimal literals are converted digit by digit, never through binary floating point.
Rational parse_rational(std::string_view text);

/// "p/q" or "p" when the denominator is one.
std::string to_string(const Rational& q);

/// Scientific decimal string with `digits` significant digits.
std::string to_decimal(const Real& x, int digits);
/// Decimal string with the digit count implied by the precision of `x`.
std::string to_decimal(const Real& x);

double to_double(const Rational& q);
double to_double(const Real& x);

inline bool is_integer(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

}  // namespace turankit
