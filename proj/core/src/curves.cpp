#include "turankit/curves.hpp"

#include <numeric>
#include <stdexcept>

namespace turankit {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Real weight(const Rational& theta, const Real& x, Precision p) {
  return abs_pow(to_real(x, p), to_real(theta, p));
}

// x^theta exactly, where that is rational.
Rational exact_weight(const Rational& theta, const Rational& x) {
  const Rational ax = abs(x);
  if (ax == 0 || ax == 1) return ax;
  if (!is_integer(theta)) throw std::invalid_argument("x^theta is irrational at x = " + to_string(x));
  Rational w = 1;
  for (unsigned k = boost::multiprecision::numerator(theta).convert_to<unsigned>(); k > 0; --k) w *= ax;
  return w;
}

unsigned to_unsigned(const Integer& v) {
  if (v < 0 || v > 1u << 20) throw std::invalid_argument("exponent too large for symbolic resultant");
  return v.convert_to<unsigned>();
}

Real vertex_power(const Rational& base, const Rational& theta, Precision p) {
  if (theta > 2) throw std::invalid_argument("vertex needs theta <= 2");
  if (theta == 2) {
    if (base != 1) throw std::domain_error("vertex at theta = 2 is undefined unless the base is 1");
    return to_real(1, p);
  }
  return Real(pow(to_real(base, p), to_real(Rational(1 / (2 - theta)), p)));
}

// Hermite pieces as polynomials in X = x^2, with the x factor of b removed.
struct HermitePolys {
  Quadratic<RationalPoly> cur;
  Quadratic<RationalPoly> next;
};

HermitePolys hermite_polys(const HermiteCurves& h) {
  const Rational d = h.a_cur - h.a_prev;
  const Rational dn = h.a_next - h.a_cur;
  const RationalPoly X = RationalPoly::identity();
  HermitePolys out;
  out.cur = {X + RationalPoly::constant(d), -(X + RationalPoly::constant(d)), h.a_cur * X};
  out.next = {X, -(X + RationalPoly::constant(dn)), h.a_next * (X + RationalPoly::constant(dn))};
  return out;
}

RationalPoly hermite_resultant_poly(const HermiteCurves& h) {
  const HermitePolys q = hermite_polys(h);
  const RationalPoly ac = q.cur.a * q.next.c - q.next.a * q.cur.c;
  const RationalPoly ab = q.cur.a * q.next.b - q.next.a * q.cur.b;
  const RationalPoly bc = q.cur.b * q.next.c - q.next.b * q.cur.c;
  // Each of ab, bc carries one stripped factor x; together they give X.
  return ac * ac - RationalPoly::identity() * ab * bc;
}

}  // namespace

void validate(const CurveScheme& scheme) {
  std::visit(overloaded{
                 [](const UltrasphericalCurves& u) {
                   if (u.lambda <= Rational(-1, 2)) throw std::invalid_argument("curves need lambda > -1/2");
                   if (u.theta <= 0) throw std::invalid_argument("curves need theta > 0");
                 },
                 [](const SymmetricUnitCurves& s) {
                   if (s.a_n <= 0 || s.a_n >= 1 || s.a_next <= 0 || s.a_next >= 1) {
                     throw std::invalid_argument("symmetric-unit curves need 0 < a < 1");
                   }
                   if (s.theta <= 0) throw std::invalid_argument("curves need theta > 0");
                 },
                 [](const HermiteCurves& h) {
                   if (h.a_prev < 0 || !(h.a_prev < h.a_cur) || !(h.a_cur < h.a_next)) {
                     throw std::invalid_argument("hermite curves need 0 <= a_prev < a_cur < a_next");
                   }
                 },
             },
             scheme);
}

std::string describe(const CurveScheme& scheme) {
  return std::visit(overloaded{
                        [](const UltrasphericalCurves& u) {
                          return "ultraspherical(lambda=" + to_string(u.lambda) + ", n=" + std::to_string(u.n) +
                                 ", theta=" + to_string(u.theta) + ")";
                        },
                        [](const SymmetricUnitCurves& s) {
                          return "symmetric-unit(a_n=" + to_string(s.a_n) + ", a_next=" + to_string(s.a_next) +
                                 ", theta=" + to_string(s.theta) + ")";
                        },
                        [](const HermiteCurves& h) {
                          return "hermite(" + to_string(h.a_prev) + ", " + to_string(h.a_cur) + ", " +
                                 to_string(h.a_next) + ")";
                        },
                    },
                    scheme);
}

Quadratic<Real> curve_quadratic(const CurveScheme& scheme, Curve which, const Real& x_in, Precision p) {
  validate(scheme);
  const Real x = to_real(x_in, p);
  return std::visit(
      overloaded{
          [&](const UltrasphericalCurves& u) -> Quadratic<Real> {
            const Rational n(u.n);
            const Real w = weight(u.theta, x, p);
            if (which == Curve::Current) {
              return {to_real(Rational(n + 2 * u.lambda), p), Real(-2 * to_real(Rational(n + u.lambda), p) * x),
                      Real(to_real(n, p) * w)};
            }
            return {Real(to_real(Rational(n + 2 * u.lambda + 1), p) * w),
                    Real(-2 * to_real(Rational(n + u.lambda + 1), p) * x), to_real(Rational(n + 1), p)};
          },
          [&](const SymmetricUnitCurves& s) -> Quadratic<Real> {
            const Real w = weight(s.theta, x, p);
            if (which == Curve::Current) {
              return {to_real(Rational(1 - s.a_n), p), Real(-x), Real(to_real(s.a_n, p) * w)};
            }
            return {Real(to_real(Rational(1 - s.a_next), p) * w), Real(-x), to_real(s.a_next, p)};
          },
          [&](const HermiteCurves& h) -> Quadratic<Real> {
            const Real X = x * x;
            if (which == Curve::Current) {
              const Real lead = X + to_real(Rational(h.a_cur - h.a_prev), p);
              return {lead, Real(-lead * x), Real(to_real(h.a_cur, p) * X)};
            }
            const Real shifted = X + to_real(Rational(h.a_next - h.a_cur), p);
            return {X, Real(-shifted * x), Real(to_real(h.a_next, p) * shifted)};
          },
      },
      scheme);
}

CurveBranches branches(const CurveScheme& scheme, Curve which, const Real& x, Precision p) {
  const Quadratic<Real> q = curve_quadratic(scheme, which, x, p);
  if (q.a == 0) throw std::domain_error("curve leading coefficient vanishes at x = " + to_decimal(x, 10));
  CurveBranches out;
  out.x = to_real(x, p);
  out.discriminant = q.b * q.b - 4 * q.a * q.c;
  out.real = out.discriminant >= 0;
  if (!out.real) {
    out.tau_minus = make_real(p);
    out.tau_plus = make_real(p);
    return out;
  }
  const Real root = sqrt(out.discriminant);
  Real r1 = (-q.b - root) / (2 * q.a);
  Real r2 = (-q.b + root) / (2 * q.a);
  if (r2 < r1) std::swap(r1, r2);
  out.tau_minus = r1;
  out.tau_plus = r2;
  return out;
}

VertexInfo vertex(const CurveScheme& scheme, Curve which, Precision p) {
  validate(scheme);
  return std::visit(
      overloaded{
          [&](const UltrasphericalCurves& u) {
            const Rational n(u.n);
            VertexInfo v;
            if (which == Curve::Current) {
              if (u.n == 0) throw std::invalid_argument("vertex of T_n needs n >= 1");
              const Rational base = n * (n + 2 * u.lambda) / ((n + u.lambda) * (n + u.lambda));
              v.x_vertex = vertex_power(base, u.theta, p);
              v.tau_vertex = to_real(Rational((n + u.lambda) / (n + 2 * u.lambda)), p) * v.x_vertex;
              v.kind = VertexKind::XTilde;
            } else {
              const Rational m = n + 1;
              const Rational base = m * (m + 2 * u.lambda) / ((m + u.lambda) * (m + u.lambda));
              v.x_vertex = vertex_power(base, u.theta, p);
              const Real w = weight(u.theta, v.x_vertex, p);
              v.tau_vertex = to_real(Rational((m + u.lambda) / (m + 2 * u.lambda)), p) * v.x_vertex / w;
              v.kind = VertexKind::X0;
            }
            return v;
          },
          [&](const SymmetricUnitCurves& s) {
            VertexInfo v;
            const Rational a = which == Curve::Current ? s.a_n : s.a_next;
            v.x_vertex = vertex_power(Rational(4 * a * (1 - a)), s.theta, p);
            v.tau_vertex = v.x_vertex / to_real(Rational(2 * (1 - a)), p);
            if (which == Curve::Next) v.tau_vertex /= weight(s.theta, v.x_vertex, p);
            v.kind = which == Curve::Current ? VertexKind::XTilde : VertexKind::X0;
            return v;
          },
          [&](const HermiteCurves& h) {
            VertexInfo v;
            v.kind = VertexKind::Hermite;
            if (which == Curve::Current) {
              v.x_vertex = sqrt(to_real(Rational(3 * h.a_cur + h.a_prev), p));
              v.tau_vertex = v.x_vertex / 2;
            } else {
              v.x_vertex = sqrt(to_real(Rational(3 * h.a_next + h.a_cur), p));
              v.tau_vertex = 2 * to_real(h.a_next, p) / v.x_vertex;
            }
            return v;
          },
      },
      scheme);
}

ResultantParts ultraspherical_parts(const Rational& lambda, std::size_t n_index) {
  const Rational n(n_index);
  const Rational l = lambda;
  ResultantParts r;
  r.A = RationalPoly{Rational(-(n + 1) * (n + 2 * l)), 0, Rational(n * (n + 2 * l + 1))};
  r.B = RationalPoly{Rational(-(n + 1) * (n + l)), Rational(n * (n + l + 1))};
  r.C = RationalPoly{Rational(-(n + l + 1) * (n + 2 * l)), Rational((n + l) * (n + 2 * l + 1))};
  return r;
}

ResultantParts symmetric_unit_parts(const Rational& a_n, const Rational& a_next) {
  ResultantParts r;
  r.A = RationalPoly{Rational(-(1 - a_n) * a_next), 0, Rational(a_n * (1 - a_next))};
  r.B = RationalPoly{a_next, Rational(-a_n)};
  r.C = RationalPoly{Rational(1 - a_n), Rational(-(1 - a_next))};
  return r;
}

Real resultant_Rn(const CurveScheme& scheme, const Real& x_in, Precision p) {
  validate(scheme);
  const Real x = to_real(x_in, p);
  return std::visit(overloaded{
                        [&](const UltrasphericalCurves& u) {
                          const ResultantParts r = ultraspherical_parts(u.lambda, u.n);
                          const Real w = weight(u.theta, x, p);
                          const Real A = r.A.evaluate(w);
                          return Real(A * A - 4 * x * x * r.B.evaluate(w) * r.C.evaluate(w));
                        },
                        [&](const SymmetricUnitCurves& s) {
                          const ResultantParts r = symmetric_unit_parts(s.a_n, s.a_next);
                          const Real w = weight(s.theta, x, p);
                          const Real A = r.A.evaluate(w);
                          return Real(A * A - x * x * r.B.evaluate(w) * r.C.evaluate(w));
                        },
                        [&](const HermiteCurves& h) { return hermite_resultant_poly(h).evaluate(Real(x * x)); },
                    },
                    scheme);
}

Real resultant_direct(const CurveScheme& scheme, const Real& x, Precision p) {
  return resultant_quadratics(curve_quadratic(scheme, Curve::Current, x, p),
                              curve_quadratic(scheme, Curve::Next, x, p));
}

Rational resultant_Rn_exact(const CurveScheme& scheme, const Rational& x) {
  validate(scheme);
  return std::visit(overloaded{
                        [&](const UltrasphericalCurves& u) {
                          const ResultantParts r = ultraspherical_parts(u.lambda, u.n);
                          const Rational w = exact_weight(u.theta, x);
                          const Rational A = r.A(w);
                          return Rational(A * A - 4 * x * x * r.B(w) * r.C(w));
                        },
                        [&](const SymmetricUnitCurves& s) {
                          const ResultantParts r = symmetric_unit_parts(s.a_n, s.a_next);
                          const Rational w = exact_weight(s.theta, x);
                          const Rational A = r.A(w);
                          return Rational(A * A - x * x * r.B(w) * r.C(w));
                        },
                        [&](const HermiteCurves& h) { return hermite_resultant_poly(h)(Rational(x * x)); },
                    },
                    scheme);
}

SymbolicResultant resultant_symbolic(const CurveScheme& scheme) {
  validate(scheme);
  ResultantParts parts;
  Rational theta;
  Rational factor;
  if (const auto* u = std::get_if<UltrasphericalCurves>(&scheme)) {
    parts = ultraspherical_parts(u->lambda, u->n);
    theta = u->theta;
    factor = 4;
  } else if (const auto* s = std::get_if<SymmetricUnitCurves>(&scheme)) {
    parts = symmetric_unit_parts(s->a_n, s->a_next);
    theta = s->theta;
    factor = 1;
  } else {
    throw std::invalid_argument("symbolic resultant is defined for the power schemes only");
  }
  SymbolicResultant out;
  out.u = to_unsigned(boost::multiprecision::numerator(theta));
  out.v = to_unsigned(boost::multiprecision::denominator(theta));
  const RationalPoly A = substitute_power(parts.A, out.u);
  const RationalPoly B = substitute_power(parts.B, out.u);
  const RationalPoly C = substitute_power(parts.C, out.u);
  const RationalPoly x2 = RationalPoly::monomial(factor, 2 * out.v);
  const CompressedPoly compressed = compress_exponents(A * A - x2 * B * C);
  out.poly = compressed.poly;
  out.step = compressed.step;
  return out;
}

std::vector<Real> nesting_grid(const CurveScheme& scheme, std::size_t count, Precision p) {
  if (count == 0) throw std::invalid_argument("nesting grid needs count >= 1");
  const Real x0 = vertex(scheme, Curve::Next, p).x_vertex;
  const bool hermite = std::holds_alternative<HermiteCurves>(scheme);
  const Real hi = hermite ? Real(x0 + 8) : to_real(1, p);
  std::vector<Real> grid;
  grid.reserve(count);
  if (!hermite && x0 >= 1) {
    grid.push_back(to_real(1, p));
    return grid;
  }
  for (std::size_t k = 1; k <= count; ++k) {
    grid.push_back(Real(x0 + (hi - x0) * static_cast<long>(k) / static_cast<long>(count)));
  }
  return grid;
}

NestingReport nesting_check(const CurveScheme& scheme, const std::vector<Real>& grid, Precision p) {
  validate(scheme);
  NestingReport report;
  if (const auto* u = std::get_if<UltrasphericalCurves>(&scheme); u && u->lambda == 0 && u->theta == 2) {
    report.vacuous = true;
    report.points = grid.size();
    return report;
  }
  if (const auto* h = std::get_if<HermiteCurves>(&scheme)) {
    const HermiteVertexValue v = hermite_vertex_value(h->a_prev, h->a_cur, h->a_next);
    report.hermite_vertex_value = v.closed_form;
    if (v.closed_form != v.direct) {
      report.violations.push_back({make_real(p), "vertex value: closed form differs from direct evaluation"});
    }
    if (v.closed_form >= 0) {
      report.violations.push_back({make_real(p), "vertex value of T_n at the vertex of T_{n+1} is not negative"});
    }
  }
  const Real tol = p.tolerance(2);
  auto exceeds = [&](const Real& lo, const Real& hi) {
    return lo - hi > tol * (1 + abs(lo) + abs(hi));
  };
  for (const Real& x : grid) {
    ++report.points;
    const CurveBranches next = branches(scheme, Curve::Next, x, p);
    if (!next.real) continue;
    const CurveBranches cur = branches(scheme, Curve::Current, x, p);
    if (!cur.real) {
      report.violations.push_back({to_real(x, p), "T_n complex where T_{n+1} is real"});
      continue;
    }
    ++report.compared;
    if (exceeds(cur.tau_minus, next.tau_minus)) {
      report.violations.push_back({to_real(x, p), "tau_n^- > tau_{n+1}^-"});
    } else if (exceeds(next.tau_plus, cur.tau_plus)) {
      report.violations.push_back({to_real(x, p), "tau_{n+1}^+ > tau_n^+"});
    }
  }
  return report;
}

HermiteVertexValue hermite_vertex_value(const Rational& a_prev, const Rational& a_cur, const Rational& a_next) {
  validate(HermiteCurves{a_prev, a_cur, a_next});
  const Rational a = a_cur;
  const Rational an = a_next;
  const Rational d = a_cur - a_prev;
  const Rational dn = a_next - a_cur;
  const Rational X = 3 * an + a;

  HermiteVertexValue out;
  out.closed_form =
      -(6 * dn * dn * dn + (17 * a + 2 * d) * dn * dn + 6 * a * (2 * a + d) * dn + 4 * a * a * d) / X;
  // tau^2 = 4 a'^2 / X and x tau = 2 a' at the vertex of T_{n+1}.
  out.direct = (X + d) * 4 * an * an / X - (X + d) * 2 * an + a * X;
  return out;
}

std::array<Rational, 4> hermite_resultant_coefficients(const Rational& a_prev, const Rational& a_cur,
                                                       const Rational& a_next) {
  const HermiteCurves h{a_prev, a_cur, a_next};
  validate(h);
  const RationalPoly r = hermite_resultant_poly(h);
  if (r.degree() > 3) throw std::logic_error("hermite resultant: X^4 term did not cancel");
  return {r.coeff(0), r.coeff(1), r.coeff(2), r.coeff(3)};
}

RemarkProbe remark_asymptotics_probe(const Rational& lambda, const Rational& theta, std::size_t n, Precision p) {
  if (theta >= 2) throw std::invalid_argument("remark probe needs theta < 2");
  if (n == 0) throw std::invalid_argument("remark probe needs n >= 1");
  const CurveScheme scheme = UltrasphericalCurves{lambda, n, theta};
  RemarkProbe r;
  r.x0 = vertex(scheme, Curve::Next, p).x_vertex;
  r.x_hat = (3 * r.x0 + 1) / 4;
  const CurveBranches cur = branches(scheme, Curve::Current, r.x_hat, p);
  const CurveBranches next = branches(scheme, Curve::Next, r.x_hat, p);
  r.real = cur.real && next.real;
  r.gap_plus = r.real ? Real(cur.tau_plus - next.tau_plus) : make_real(p);
  r.gap_minus = r.real ? Real(next.tau_minus - cur.tau_minus) : make_real(p);
  r.resultant = resultant_Rn(scheme, r.x_hat, p);

  const Real l = to_real(lambda, p);
  const Real t = to_real(theta, p);
  const Real nn = to_real(static_cast<long>(n), p);
  const Real n2 = nn * nn;
  r.lead_plus = 3 * l * ((4 - l) * t - 8) / (4 * (2 - t) * n2);
  r.lead_minus = l * ((4 + 3 * l) * t - 8) / (4 * (2 - t) * n2);
  r.lead_resultant = Real(9) / 2 * (8 + l * l) * l * l * l * l / (n2 * n2);
  return r;
}

}  // namespace turankit
