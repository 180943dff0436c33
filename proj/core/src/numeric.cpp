#include "turankit/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <ios>

namespace turankit {

Precision::Precision(unsigned bits) : bits_(bits) {
  if (bits < kMinPrecisionBits) {
    throw std::invalid_argument("precision must be at least 53 bits, got " + std::to_string(bits));
  }
}

Real Precision::tolerance(unsigned divisor) const {
  Real t = to_real(1, *this);
  mpfr_mul_2si(t.backend().data(), t.backend().data(), -static_cast<long>(bits_ / divisor), MPFR_RNDN);
  return t;
}

Precision automatic_precision(std::size_t n, double abs_x) {
  if (abs_x > 0.9 || n > 50) return Precision(kEscalatedPrecisionBits);
  return default_precision();
}

Precision default_precision() {
  if (const char* env = std::getenv("TURANKIT_PRECISION"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long bits = std::strtoul(env, &end, 10);
    if (end != nullptr && *end == '\0') return Precision(static_cast<unsigned>(bits));
    throw std::invalid_argument(std::string("TURANKIT_PRECISION is not an integer: ") + env);
  }
  return Precision(kDefaultPrecisionBits);
}

Real make_real(Precision p) {
  Real r;
  mpfr_set_prec(r.backend().data(), static_cast<mpfr_prec_t>(p.bits()));
  mpfr_set_zero(r.backend().data(), 1);
  return r;
}

Real to_real(const Rational& q, Precision p) {
  Real r = make_real(p);
  mpfr_set_q(r.backend().data(), q.backend().data(), MPFR_RNDN);
  return r;
}

Real to_real(long v, Precision p) {
  Real r = make_real(p);
  mpfr_set_si(r.backend().data(), v, MPFR_RNDN);
  return r;
}

Real to_real(const Real& x, Precision p) {
  Real r = make_real(p);
  mpfr_set(r.backend().data(), x.backend().data(), MPFR_RNDN);
  return r;
}

unsigned precision_of(const Real& x) {
  return static_cast<unsigned>(mpfr_get_prec(x.backend().data()));
}

Real abs_pow(const Real& x, const Real& theta) {
  if (x == 0) {
    Real zero = x;
    mpfr_set_zero(zero.backend().data(), 1);
    return zero;
  }
  return Real(pow(abs(x), theta));
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

[[noreturn]] void bad_number(std::string_view text) {
  throw std::invalid_argument("not a rational or decimal literal: '" + std::string(text) + "'");
}

Integer pow10(long e) {
  Integer r = 1;
  for (long i = 0; i < e; ++i) r *= 10;
  return r;
}

// mpz reads a leading 0 as an octal prefix, so strip it.
Integer decimal_integer(std::string_view digits) {
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return Integer(std::string(digits));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) bad_number(text);

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = s.substr(0, slash);
    const auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_number(text);
    const Integer d = decimal_integer(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    const Integer n = decimal_integer(num);
    Rational q(n, d);
    return negative ? Rational(-q) : q;
  }

  long exponent = 0;
  if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    auto exp_part = s.substr(e + 1);
    s = s.substr(0, e);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part.front() == '+' || exp_part.front() == '-')) {
      exp_negative = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    if (!all_digits(exp_part) || exp_part.size() > 6) bad_number(text);
    exponent = std::stol(std::string(exp_part));
    if (exp_negative) exponent = -exponent;
  }

  std::string digits;
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const auto int_part = s.substr(0, dot);
    const auto frac_part = s.substr(dot + 1);
    if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part))) {
      bad_number(text);
    }
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(s)) bad_number(text);
    digits = std::string(s);
  }

  const Integer mantissa = decimal_integer(digits);
  Rational q = exponent >= 0 ? Rational(mantissa * pow10(exponent)) : Rational(mantissa, pow10(-exponent));
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) {
  if (is_integer(q)) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

std::string to_decimal(const Real& x, int digits) {
  return x.str(std::max(digits, 1), std::ios_base::scientific);
}

std::string to_decimal(const Real& x) {
  const int digits = static_cast<int>(std::floor(precision_of(x) * 0.30102999566398120));
  return to_decimal(x, digits);
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

double to_double(const Real& x) { return mpfr_get_d(x.backend().data(), MPFR_RNDN); }

}  // namespace turankit
