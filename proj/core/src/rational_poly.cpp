#include "turankit/rational_poly.hpp"

#include <numeric>
#include <sstream>

namespace turankit {

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RationalPoly::RationalPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

RationalPoly RationalPoly::constant(const Rational& c) { return RationalPoly(std::vector<Rational>{c}); }

RationalPoly RationalPoly::monomial(const Rational& c, std::size_t power) {
  std::vector<Rational> coeffs(power + 1);
  coeffs[power] = c;
  return RationalPoly(std::move(coeffs));
}

RationalPoly RationalPoly::identity() { return monomial(Rational(1), 1); }

void RationalPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& RationalPoly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational RationalPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Real RationalPoly::evaluate(const Real& x) const {
  const Precision p(precision_of(x));
  Real acc = make_real(p);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += to_real(*it, p);
  }
  return acc;
}

RationalPoly RationalPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rational(i);
  return RationalPoly(std::move(d));
}

RationalPoly RationalPoly::compose_linear(const Rational& a, const Rational& b) const {
  const RationalPoly inner({b, a});
  RationalPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= inner;
    acc += constant(*it);
  }
  return acc;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RationalPoly(std::move(out));
}

RationalPoly& RationalPoly::operator*=(const RationalPoly& rhs) { return *this = *this * rhs; }

RationalPoly& RationalPoly::operator*=(const Rational& s) {
  if (s == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

RationalPoly operator-(RationalPoly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

RationalPoly scale(const RationalPoly& p, const Rational& s) { return p * s; }

RationalPoly pow(const RationalPoly& p, unsigned e) {
  RationalPoly result = RationalPoly::constant(1);
  RationalPoly base = p;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

DivMod divmod(const RationalPoly& a, const RationalPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {RationalPoly{}, a};
  std::vector<Rational> rem = a.coeffs();
  const auto db = static_cast<std::size_t>(b.degree());
  std::vector<Rational> quot(rem.size() - db);
  const Rational& lead = b.leading();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational factor = rem[k + db] / lead;
    quot[k] = factor;
    if (factor == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= factor * b.coeffs()[j];
  }
  rem.resize(db);
  return {RationalPoly(std::move(quot)), RationalPoly(std::move(rem))};
}

RationalPoly gcd(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly x = a;
  RationalPoly y = b;
  while (!y.is_zero()) {
    RationalPoly r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x * Rational(1 / x.leading());
}

RationalPoly odd_multiplicity_part(const RationalPoly& p) {
  if (p.is_zero()) throw std::domain_error("odd_multiplicity_part: zero polynomial");
  RationalPoly odd({Rational(1)});
  if (p.degree() == 0) return odd;
  const RationalPoly dp = p.derivative();
  const RationalPoly a0 = gcd(p, dp);
  RationalPoly b = divmod(p, a0).quotient;
  RationalPoly d = divmod(dp, a0).quotient - b.derivative();
  for (unsigned i = 1; b.degree() > 0; ++i) {
    const RationalPoly a = gcd(b, d);
    b = divmod(b, a).quotient;
    const RationalPoly c = divmod(d, a).quotient;
    d = c - b.derivative();
    if (i % 2 == 1) odd = odd * a;
  }
  return odd * Rational(1 / odd.leading());
}

RationalPoly substitute_power(const RationalPoly& p, unsigned v) {
  if (v == 0) throw std::invalid_argument("substitute_power: exponent must be positive");
  if (p.is_zero()) return {};
  std::vector<Rational> out(static_cast<std::size_t>(p.degree()) * v + 1);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) out[i * v] = p.coeffs()[i];
  return RationalPoly(std::move(out));
}

CompressedPoly compress_exponents(const RationalPoly& p) {
  std::size_t step = 0;
  for (std::size_t i = 1; i < p.coeffs().size(); ++i) {
    if (p.coeffs()[i] != 0) step = std::gcd(step, i);
  }
  if (step <= 1) return {p, 1};
  std::vector<Rational> out(p.coeffs().size() / step + 1);
  for (std::size_t i = 0; i < p.coeffs().size(); i += step) out[i / step] = p.coeffs()[i];
  return {RationalPoly(std::move(out)), static_cast<unsigned>(step)};
}

Deflation deflate_at_one(const RationalPoly& p) {
  if (p.is_zero()) throw std::domain_error("deflate_at_one: zero polynomial");
  Deflation out{0, p};
  while (out.quotient(Rational(1)) == 0) {
    // Synthetic division by (s - 1), then flip the sign to divide by (1 - s).
    const auto& c = out.quotient.coeffs();
    std::vector<Rational> q(c.size() - 1);
    Rational carry = 0;
    for (std::size_t k = c.size() - 1; k-- > 0;) {
      carry += c[k + 1];
      q[k] = -carry;
    }
    out.quotient = RationalPoly(std::move(q));
    ++out.multiplicity;
  }
  return out;
}

std::string to_string(const RationalPoly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    const Rational& c = p.coeffs()[i];
    if (c == 0) continue;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) {
      os << to_string(mag);
      if (i > 0) os << "*";
    }
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

}  // namespace turankit
