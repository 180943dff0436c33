#include "turankit/families.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace turankit {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

const Rational kMinusHalf(-1, 2);

}  // namespace

// ---------------------------------------------------------------------------
// SequenceSpec

SequenceSpec::SequenceSpec(Kind kind) : kind_(std::move(kind)) {
  if (const auto* u = std::get_if<UltrasphericalA>(&kind_); u != nullptr && u->lambda <= kMinusHalf) {
    throw std::invalid_argument("ultraspherical coefficients need lambda > -1/2, got " + to_string(u->lambda));
  }
  if (const auto* f = std::get_if<Formula>(&kind_); f != nullptr && !f->term) {
    throw std::invalid_argument("formula sequence without a term function");
  }
}

Rational SequenceSpec::at(std::size_t n) const {
  return std::visit(
      overloaded{
          [n](const UltrasphericalA& u) -> Rational {
            if (n == 0) return Rational(0);
            return Rational(n) / (2 * (Rational(n) + u.lambda));
          },
          [n](const HermiteMonicA&) -> Rational { return Rational(n, 2); },
          [n](const ExplicitList& l) -> Rational {
            if (n >= l.first_index && n - l.first_index < l.values.size()) return l.values[n - l.first_index];
            if (n == 0 && l.first_index == 1) return Rational(0);
            throw std::out_of_range("sequence index " + std::to_string(n) + " outside explicit list [" +
                                    std::to_string(l.first_index) + ", " +
                                    std::to_string(l.first_index + l.values.size()) + ")");
          },
          [n](const Formula& f) -> Rational { return f.term(n); },
      },
      kind_);
}

std::optional<std::size_t> SequenceSpec::last_index() const {
  if (const auto* l = std::get_if<ExplicitList>(&kind_)) {
    if (l->values.empty()) return l->first_index == 0 ? std::nullopt : std::optional<std::size_t>(0);
    return l->first_index + l->values.size() - 1;
  }
  return std::nullopt;
}

std::string SequenceSpec::describe() const {
  return std::visit(overloaded{
                        [](const UltrasphericalA& u) { return "ultraspherical-a(lambda=" + to_string(u.lambda) + ")"; },
                        [](const HermiteMonicA&) { return std::string("hermite-monic"); },
                        [](const ExplicitList& l) {
                          return "list[" + std::to_string(l.values.size()) + " from " +
                                 std::to_string(l.first_index) + "]";
                        },
                        [](const Formula& f) { return "formula(" + f.name + ")"; },
                    },
                    kind_);
}

bool operator==(const SequenceSpec& a, const SequenceSpec& b) {
  if (a.kind_.index() != b.kind_.index()) return false;
  return std::visit(
      overloaded{
          [&](const SequenceSpec::UltrasphericalA& u) {
            return u.lambda == std::get<SequenceSpec::UltrasphericalA>(b.kind_).lambda;
          },
          [&](const SequenceSpec::HermiteMonicA&) { return true; },
          [&](const SequenceSpec::ExplicitList& l) {
            const auto& r = std::get<SequenceSpec::ExplicitList>(b.kind_);
            return l.first_index == r.first_index && l.values == r.values;
          },
          [&](const SequenceSpec::Formula& f) { return f.name == std::get<SequenceSpec::Formula>(b.kind_).name; },
      },
      a.kind_);
}

// ---------------------------------------------------------------------------
// FamilySpec

FamilySpec FamilySpec::ultraspherical(const Rational& lambda) {
  if (lambda <= kMinusHalf) {
    throw std::invalid_argument("ultraspherical family needs lambda > -1/2, got " + to_string(lambda));
  }
  return FamilySpec(Ultraspherical{lambda});
}

FamilySpec FamilySpec::symmetric_unit(SequenceSpec a) { return FamilySpec(SymmetricUnit{std::move(a)}); }

FamilySpec FamilySpec::monic_symmetric(SequenceSpec a) { return FamilySpec(MonicSymmetric{std::move(a)}); }

FamilySpec FamilySpec::general(SequenceSpec a, SequenceSpec b, SequenceSpec c) {
  return FamilySpec(GeneralThreeTerm{std::move(a), std::move(b), std::move(c)});
}

bool FamilySpec::normalized_at_one() const noexcept {
  return std::holds_alternative<Ultraspherical>(variant_) || std::holds_alternative<SymmetricUnit>(variant_);
}

const Rational& FamilySpec::lambda() const {
  if (const auto* u = std::get_if<Ultraspherical>(&variant_)) return u->lambda;
  throw std::invalid_argument("family " + describe() + " has no lambda parameter");
}

const SequenceSpec& FamilySpec::a_sequence() const {
  if (const auto* s = std::get_if<SymmetricUnit>(&variant_)) return s->a;
  if (const auto* m = std::get_if<MonicSymmetric>(&variant_)) return m->a;
  throw std::invalid_argument("family " + describe() + " has no a-sequence");
}

RecurrenceStep FamilySpec::step(std::size_t k) const {
  return std::visit(
      overloaded{
          [k](const Ultraspherical& u) -> RecurrenceStep {
            if (k == 0) return {Rational(1), Rational(0), Rational(0)};
            const Rational kk(k);
            const Rational denom = kk + 2 * u.lambda;
            return {Rational(2 * (kk + u.lambda) / denom), Rational(0), Rational(kk / denom)};
          },
          [k](const SymmetricUnit& s) -> RecurrenceStep {
            if (k == 0) return {Rational(1), Rational(0), Rational(0)};
            const Rational ak = s.a.at(k);
            if (ak <= 0 || ak >= 1) {
              throw std::invalid_argument("symmetric-unit family needs 0 < a_n < 1; a_" + std::to_string(k) + " = " +
                                          to_string(ak));
            }
            const Rational inv = 1 / (1 - ak);
            return {inv, Rational(0), Rational(ak * inv)};
          },
          [k](const MonicSymmetric& m) -> RecurrenceStep {
            if (k == 0) return {Rational(1), Rational(0), Rational(0)};
            const Rational ak = m.a.at(k);
            if (ak <= 0) {
              throw std::invalid_argument("monic-symmetric family needs a_n > 0; a_" + std::to_string(k) + " = " +
                                          to_string(ak));
            }
            return {Rational(1), Rational(0), ak};
          },
          [k](const GeneralThreeTerm& g) -> RecurrenceStep { return {g.b.at(k), g.c.at(k), g.a.at(k)}; },
      },
      variant_);
}

std::string FamilySpec::describe() const {
  return std::visit(overloaded{
                        [](const Ultraspherical& u) { return "ultraspherical(lambda=" + to_string(u.lambda) + ")"; },
                        [](const SymmetricUnit& s) { return "symmetric-unit(a=" + s.a.describe() + ")"; },
                        [](const MonicSymmetric& m) { return "monic-symmetric(a=" + m.a.describe() + ")"; },
                        [](const GeneralThreeTerm& g) {
                          return "general(a=" + g.a.describe() + ", b=" + g.b.describe() + ", c=" + g.c.describe() +
                                 ")";
                        },
                    },
                    variant_);
}

bool operator==(const FamilySpec& a, const FamilySpec& b) {
  if (a.variant_.index() != b.variant_.index()) return false;
  return std::visit(overloaded{
                        [&](const FamilySpec::Ultraspherical& u) {
                          return u.lambda == std::get<FamilySpec::Ultraspherical>(b.variant_).lambda;
                        },
                        [&](const FamilySpec::SymmetricUnit& s) {
                          return s.a == std::get<FamilySpec::SymmetricUnit>(b.variant_).a;
                        },
                        [&](const FamilySpec::MonicSymmetric& m) {
                          return m.a == std::get<FamilySpec::MonicSymmetric>(b.variant_).a;
                        },
                        [&](const FamilySpec::GeneralThreeTerm& g) {
                          const auto& r = std::get<FamilySpec::GeneralThreeTerm>(b.variant_);
                          return g.a == r.a && g.b == r.b && g.c == r.c;
                        },
                    },
                    a.variant_);
}

// ---------------------------------------------------------------------------
// Numeric evaluation

RecurrenceTable::RecurrenceTable(const FamilySpec& family, std::size_t max_index, Precision precision)
    : precision_(precision) {
  b_.reserve(max_index + 1);
  c_.reserve(max_index + 1);
  a_.reserve(max_index + 1);
  for (std::size_t k = 0; k <= max_index; ++k) {
    const RecurrenceStep s = family.step(k);
    b_.push_back(to_real(s.b, precision));
    c_.push_back(s.c == 0 ? std::nullopt : std::optional<Real>(to_real(s.c, precision)));
    a_.push_back(to_real(s.a, precision));
  }
}

void RecurrenceTable::values(const Real& x, std::vector<Real>& out) const {
  const std::size_t count = b_.size() + 1;
  if (out.size() != count) out.assign(count, make_real(precision_));
  const Real xx = to_real(x, precision_);
  out[0] = to_real(1, precision_);
  Real factor = make_real(precision_);
  for (std::size_t k = 0; k < b_.size(); ++k) {
    factor = b_[k] * xx;
    if (c_[k]) factor += *c_[k];
    out[k + 1] = factor * out[k];
    if (k > 0) out[k + 1] -= a_[k] * out[k - 1];
  }
}

void RecurrenceTable::values_and_derivatives(const Real& x, std::vector<Real>& out, std::vector<Real>& dout) const {
  values(x, out);
  const std::size_t count = b_.size() + 1;
  if (dout.size() != count) dout.assign(count, make_real(precision_));
  const Real xx = to_real(x, precision_);
  dout[0] = make_real(precision_);
  Real factor = make_real(precision_);
  for (std::size_t k = 0; k < b_.size(); ++k) {
    factor = b_[k] * xx;
    if (c_[k]) factor += *c_[k];
    dout[k + 1] = b_[k] * out[k] + factor * dout[k];
    if (k > 0) dout[k + 1] -= a_[k] * dout[k - 1];
  }
}

EvalTriple eval_triple(const FamilySpec& family, std::size_t n, const Real& x, Precision precision,
                       bool with_derivatives) {
  const RecurrenceTable table(family, n, precision);
  std::vector<Real> values;
  std::vector<Real> derivs;
  if (with_derivatives) {
    table.values_and_derivatives(x, values, derivs);
  } else {
    table.values(x, values);
  }
  EvalTriple t;
  t.n = n;
  t.x = to_real(x, precision);
  t.p_prev = n == 0 ? make_real(precision) : values[n - 1];
  t.p_cur = values[n];
  t.p_next = values[n + 1];
  if (with_derivatives) {
    t.dp_cur = derivs[n];
    t.dp_next = derivs[n + 1];
  }
  t.precision_bits = precision.bits();
  return t;
}

bool converged(const EvalTriple& value, const EvalTriple& doubled) {
  const Precision p(value.precision_bits);
  const Real tol = p.tolerance(2);
  auto close = [&](const Real& a, const Real& b, const Real& scale) {
    Real diff = abs(a - b);
    Real mag = max(abs(b), scale);
    return diff <= tol * mag;
  };
  const Real scale = max(max(abs(doubled.p_prev), abs(doubled.p_cur)), abs(doubled.p_next)) * tol;
  bool ok = close(value.p_prev, doubled.p_prev, scale) && close(value.p_cur, doubled.p_cur, scale) &&
            close(value.p_next, doubled.p_next, scale);
  if (value.dp_cur && doubled.dp_cur) {
    const Real dscale = max(abs(*doubled.dp_cur), abs(*doubled.dp_next)) * tol;
    ok = ok && close(*value.dp_cur, *doubled.dp_cur, dscale) && close(*value.dp_next, *doubled.dp_next, dscale);
  }
  return ok;
}

Real ratio_t(const FamilySpec& family, std::size_t n, const Real& x, Precision precision) {
  if (family.normalized_at_one() && x == 1) return to_real(1, precision);
  const EvalTriple t = eval_triple(family, n, x, precision);
  const Real guard = precision.tolerance(2) * max(max(abs(t.p_prev), abs(t.p_next)), Real(abs(t.p_cur)));
  if (abs(t.p_cur) <= guard || t.p_cur == 0) {
    throw NearZeroDivision("t_n undefined: p_" + std::to_string(n) + " vanishes numerically at x = " + to_decimal(t.x, 20),
                           t.x);
  }
  return Real(t.p_next / t.p_cur);
}

// ---------------------------------------------------------------------------
// Exact evaluation

ExactTriple eval_exact(const FamilySpec& family, std::size_t n, const Rational& x) {
  Rational prev = 0;
  Rational cur = 1;
  Rational before_prev = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    const RecurrenceStep s = family.step(k);
    Rational next = (s.b * x + s.c) * cur - s.a * prev;
    before_prev = prev;
    prev = cur;
    cur = next;
  }
  // After the loop: cur = p_{n+1}, prev = p_n, before_prev = p_{n-1}.
  return {before_prev, prev, cur};
}

std::vector<RationalPoly> exact_coefficients_upto(const FamilySpec& family, std::size_t n) {
  std::vector<RationalPoly> polys;
  polys.reserve(n + 1);
  polys.push_back(RationalPoly::constant(1));
  RationalPoly prev;
  for (std::size_t k = 0; k < n; ++k) {
    const RecurrenceStep s = family.step(k);
    RationalPoly next = polys[k] * RationalPoly({s.c, s.b});
    if (k > 0) next -= polys[k - 1] * s.a;
    polys.push_back(std::move(next));
  }
  return polys;
}

RationalPoly exact_coefficients(const FamilySpec& family, std::size_t n) {
  return exact_coefficients_upto(family, n).back();
}

EvalTriple hermite_convert(const EvalTriple& values, HermiteDirection direction) {
  EvalTriple out = values;
  const long sign = direction == HermiteDirection::MonicToStandard ? 1 : -1;
  auto rescale = [&](Real& v, long k) {
    if (k < 0) return;
    mpfr_mul_2si(v.backend().data(), v.backend().data(), sign * k, MPFR_RNDN);
  };
  const long n = static_cast<long>(values.n);
  rescale(out.p_prev, n - 1);
  rescale(out.p_cur, n);
  rescale(out.p_next, n + 1);
  if (out.dp_cur) rescale(*out.dp_cur, n);
  if (out.dp_next) rescale(*out.dp_next, n + 1);
  return out;
}

}  // namespace turankit
