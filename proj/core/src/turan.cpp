#include "turankit/turan.hpp"

#include <stdexcept>

namespace turankit {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void validate_theorem2_sequence(const SequenceSpec& a, std::size_t last) {
  const Rational half(1, 2);
  Rational previous = 0;
  for (std::size_t n = 1; n <= last; ++n) {
    const Rational an = a.at(n);
    if (an <= half || an >= 1) {
      throw std::invalid_argument("theorem-2 hypothesis violated: need 1/2 < a_n < 1, a_" + std::to_string(n) +
                                  " = " + to_string(an));
    }
    if (n > 1 && an >= previous) {
      throw std::invalid_argument("theorem-2 hypothesis violated: a_n must be strictly decreasing at n = " +
                                  std::to_string(n));
    }
    previous = an;
  }
}

std::optional<Rational> analytic_theorem2_limit(const SequenceSpec& a) {
  if (const auto* u = std::get_if<SequenceSpec::UltrasphericalA>(&a.kind())) return Rational(4 / (2 - u->lambda));
  return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------------------
// Exponent rules

Rational theta_theorem1(const Rational& lambda) {
  if (lambda <= Rational(-1, 2)) {
    throw std::invalid_argument("theta_theorem1 needs lambda > -1/2, got " + to_string(lambda));
  }
  if (lambda <= 0) return Rational(4 / (2 - lambda));
  return Rational(2 / (1 + 2 * lambda));
}

Real theorem2_F(const Rational& a_n, const Rational& a_next, Precision precision) {
  const Rational num_arg = ((1 - a_n) * a_next) / ((1 - a_next) * a_n);
  const Rational den_arg = 4 * (1 - a_n) * a_next * a_next / a_n;
  const Real num = 2 * log(to_real(num_arg, precision));
  const Real den = log(to_real(den_arg, precision));
  return Real(num / den);
}

TheoremTwoResult theta_theorem2(const SequenceSpec& a, std::size_t horizon, Precision precision) {
  if (horizon == 0) throw std::invalid_argument("theta_theorem2 needs horizon >= 1");
  validate_theorem2_sequence(a, horizon + 1);

  TheoremTwoResult r;
  r.F_values.reserve(horizon);
  Rational an = a.at(1);
  for (std::size_t n = 1; n <= horizon; ++n) {
    const Rational next = a.at(n + 1);
    r.F_values.push_back(theorem2_F(an, next, precision));
    an = next;
  }
  std::size_t best = 0;
  r.strictly_decreasing = true;
  for (std::size_t i = 1; i < r.F_values.size(); ++i) {
    if (r.F_values[i] < r.F_values[best]) best = i;
    if (!(r.F_values[i] < r.F_values[i - 1])) r.strictly_decreasing = false;
  }
  r.finite_min = r.F_values[best];
  r.theta = r.finite_min;
  r.argmin_n = best + 1;
  r.analytic_limit = analytic_theorem2_limit(a);
  if (r.analytic_limit) {
    const Real limit = to_real(*r.analytic_limit, precision);
    r.finite_min_exceeds_limit = r.finite_min > limit;
    if (limit < r.theta) {
      r.theta = limit;
      r.argmin_n.reset();
    }
  }
  return r;
}

std::optional<Rational> ThetaRule::exact_theta() const {
  return std::visit(overloaded{
                        [](const TheoremOne& t) -> std::optional<Rational> { return theta_theorem1(t.lambda); },
                        [](const TheoremTwoInf& t) -> std::optional<Rational> {
                          const auto limit = analytic_theorem2_limit(t.a);
                          if (!limit) return std::nullopt;
                          const auto r = theta_theorem2(t.a, t.horizon, Precision(kDefaultPrecisionBits));
                          if (r.argmin_n) return std::nullopt;
                          return limit;
                        },
                        [](const HermiteFactor&) -> std::optional<Rational> { return std::nullopt; },
                        [](const Custom& c) -> std::optional<Rational> { return c.theta; },
                    },
                    kind_);
}

std::optional<Real> ThetaRule::theta(Precision precision) const {
  if (std::holds_alternative<HermiteFactor>(kind_)) return std::nullopt;
  if (const auto* t = std::get_if<TheoremTwoInf>(&kind_)) return theta_theorem2(t->a, t->horizon, precision).theta;
  return to_real(*exact_theta(), precision);
}

std::string ThetaRule::describe() const {
  return std::visit(overloaded{
                        [](const TheoremOne& t) { return "theorem1(lambda=" + to_string(t.lambda) + ")"; },
                        [](const TheoremTwoInf& t) {
                          return "theorem2-inf(a=" + t.a.describe() + ", horizon=" + std::to_string(t.horizon) + ")";
                        },
                        [](const HermiteFactor&) { return std::string("hermite-factor"); },
                        [](const Custom& c) { return "custom(" + to_string(c.theta) + ")"; },
                    },
                    kind_);
}

// ---------------------------------------------------------------------------
// Delta evaluation

DeltaEvaluator::DeltaEvaluator(const FamilySpec& family, std::size_t n_max, const ThetaRule& rule,
                               Precision precision)
    : n_max_(n_max), table_(family, n_max, precision), theta_(rule.theta(precision)) {
  if (n_max == 0) throw std::invalid_argument("Turan determinants need n >= 1");
  if (!rule.is_power()) {
    if (!family.is_monic_symmetric()) {
      throw std::invalid_argument("hermite-factor weight requires a monic-symmetric family, got " + family.describe());
    }
    const SequenceSpec& a = family.a_sequence();
    hermite_gap_.reserve(n_max + 1);
    hermite_gap_.push_back(make_real(precision));
    for (std::size_t n = 1; n <= n_max; ++n) hermite_gap_.push_back(to_real(Rational(a.at(n) - a.at(n - 1)), precision));
  } else if (*theta_ < 0) {
    throw std::invalid_argument("theta must be nonnegative");
  }
}

Real DeltaEvaluator::weight(std::size_t n, const Real& x) const {
  if (theta_) {
    if (*theta_ == 0) return to_real(1, table_.precision());
    return abs_pow(x, *theta_);
  }
  const Real x2 = x * x;
  return Real(x2 / (x2 + hermite_gap_[n]));
}

void DeltaEvaluator::evaluate(const Real& x, Point& out) const {
  table_.values(x, scratch_);
  const Precision p = table_.precision();
  if (out.delta.size() != n_max_ + 1) {
    out.delta.assign(n_max_ + 1, make_real(p));
    out.scale.assign(n_max_ + 1, make_real(p));
  }
  const Real xx = to_real(x, p);
  std::optional<Real> power;
  if (theta_) power = weight(1, xx);
  Real lhs = make_real(p);
  Real rhs = make_real(p);
  for (std::size_t n = 1; n <= n_max_; ++n) {
    lhs = scratch_[n] * scratch_[n];
    lhs *= power ? *power : weight(n, xx);
    rhs = scratch_[n - 1] * scratch_[n + 1];
    out.delta[n] = lhs - rhs;
    out.scale[n] = abs(lhs) + abs(rhs);
  }
}

Real DeltaEvaluator::delta(std::size_t n, const Real& x) const {
  if (n == 0 || n > n_max_) throw std::out_of_range("DeltaEvaluator: n outside 1..n_max");
  table_.values(x, scratch_);
  const Real xx = to_real(x, table_.precision());
  return Real(weight(n, xx) * scratch_[n] * scratch_[n] - scratch_[n - 1] * scratch_[n + 1]);
}

TuranSample turan_delta(const FamilySpec& family, std::size_t n, const ThetaRule& rule, const Real& x,
                        Precision precision) {
  const DeltaEvaluator eval(family, n, rule, precision);
  return TuranSample{family, n, rule, to_real(x, precision), eval.delta(n, x), Backend::Numeric, precision.bits()};
}

Rational turan_delta_exact(const FamilySpec& family, std::size_t n, const ThetaRule& rule, const Rational& x) {
  if (n == 0) throw std::invalid_argument("Turan determinants need n >= 1");
  const ExactTriple t = eval_exact(family, n, x);
  Rational w;
  if (!rule.is_power()) {
    if (!family.is_monic_symmetric()) {
      throw std::invalid_argument("hermite-factor weight requires a monic-symmetric family");
    }
    const Rational gap = family.a_sequence().at(n) - family.a_sequence().at(n - 1);
    w = x * x / (x * x + gap);
  } else {
    const auto theta = rule.exact_theta();
    if (!theta) throw std::invalid_argument("exact Delta needs a rational exponent");
    const Rational ax = abs(x);
    if (*theta == 0) {
      w = 1;
    } else if (ax == 0 || ax == 1) {
      w = ax;
    } else if (is_integer(*theta)) {
      w = 1;
      for (unsigned k = boost::multiprecision::numerator(*theta).convert_to<unsigned>(); k > 0; --k) w *= ax;
    } else {
      throw std::invalid_argument("|x|^theta is irrational at x = " + to_string(x));
    }
  }
  return w * t.p_cur * t.p_cur - t.p_prev * t.p_next;
}

Real hermite_standard_delta(std::size_t n, const Real& x, Precision precision) {
  if (n == 0) throw std::invalid_argument("Turan determinants need n >= 1");
  const EvalTriple monic = eval_triple(FamilySpec::hermite_monic(), n, x, precision);
  const EvalTriple h = hermite_convert(monic, HermiteDirection::MonicToStandard);
  const Real x2 = h.x * h.x;
  const Real w = x2 / (x2 + to_real(Rational(1, 2), precision));
  return Real(w * h.p_cur * h.p_cur - h.p_prev * h.p_next);
}

// ---------------------------------------------------------------------------
// Identities and bounds

Rational identity_residual(const FamilySpec& family, std::size_t n, const Rational& x) {
  const RecurrenceStep s = family.step(n);
  if (s.a == 0) throw std::domain_error("identity_residual: a_n = 0 at n = " + std::to_string(n));
  const ExactTriple t = eval_exact(family, n, x);
  const Rational lin = x * s.b + s.c;
  const Rational lhs = lin * lin / (4 * s.a) * t.p_cur * t.p_cur - t.p_prev * t.p_next;
  const Rational diff = t.p_next - s.a * t.p_prev;
  return lhs - diff * diff / (4 * s.a);
}

UniversalBound universal_bound_check(const Rational& lambda, std::size_t n, const Real& x, Precision precision) {
  if (n == 0) throw std::invalid_argument("universal bound needs n >= 1");
  const FamilySpec family = FamilySpec::ultraspherical(lambda);
  const Rational nn(n);
  const Rational weight = 1 + lambda * lambda / (nn * (nn + 2 * lambda));
  const EvalTriple t = eval_triple(family, n, x, precision);
  const Real w = to_real(weight, precision);
  return {weight, Real(w * t.x * t.x * t.p_cur * t.p_cur - t.p_prev * t.p_next)};
}

UniversalBoundExact universal_bound_check(const Rational& lambda, std::size_t n, const Rational& x) {
  if (n == 0) throw std::invalid_argument("universal bound needs n >= 1");
  const FamilySpec family = FamilySpec::ultraspherical(lambda);
  const Rational nn(n);
  const Rational weight = 1 + lambda * lambda / (nn * (nn + 2 * lambda));
  const ExactTriple t = eval_exact(family, n, x);
  return {weight, weight * x * x * t.p_cur * t.p_cur - t.p_prev * t.p_next};
}

AskeyReport askey_turan_check(const SequenceSpec& a, std::size_t n_max, const std::vector<Real>& grid,
                              Precision precision) {
  if (n_max == 0) throw std::invalid_argument("askey check needs n_max >= 1");
  if (grid.empty()) throw std::invalid_argument("askey check needs a nonempty grid");
  AskeyReport report;
  report.n_max = n_max;
  // a_{n_max + 1} enters p_{n_max + 2} only, so monotonicity is checked on 1..n_max.
  for (std::size_t n = 2; n <= n_max; ++n) {
    const Rational prev = a.at(n - 1);
    const Rational cur = a.at(n);
    if (cur < prev) {
      throw std::invalid_argument("askey hypothesis violated: a_n decreases at n = " + std::to_string(n));
    }
    if (cur == prev) report.hypothesis = Monotonicity::NonDecreasingEdge;
  }
  const FamilySpec family = FamilySpec::monic_symmetric(a);
  const DeltaEvaluator eval(family, n_max, ThetaRule::custom(Rational(0)), precision);
  DeltaEvaluator::Point pt;
  bool first = true;
  for (const Real& x : grid) {
    eval.evaluate(x, pt);
    for (std::size_t n = 1; n <= n_max; ++n) {
      if (first || pt.delta[n] < report.min_value) {
        report.min_value = pt.delta[n];
        report.argmin_x = to_real(x, precision);
        report.argmin_n = n;
        first = false;
      }
    }
    ++report.points;
  }
  report.all_nonnegative = report.min_value >= 0;
  return report;
}

}  // namespace turankit
