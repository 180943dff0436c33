#include "turankit/curves.hpp"
#include "turankit/families.hpp"
#include "turankit/turan.hpp"

#include <doctest.h>

#include <random>

using namespace turankit;

namespace {
const Precision kP(128);
Real R(const Rational& q) { return to_real(q, kP); }
bool near(const Real& a, const Real& b, double tol = 1e-30) { return abs(a - b) <= tol * (1 + abs(b)); }
}  // namespace

TEST_CASE("branches at x = 1") {
  const CurveBranches b = branches(UltrasphericalCurves{1, 4, Rational(2, 3)}, Curve::Current, R(1), kP);
  REQUIRE(b.real);
  CHECK(near(b.tau_minus, R(Rational(4, 6))));
  CHECK(near(b.tau_plus, R(1)));
  const CurveBranches c =
      branches(UltrasphericalCurves{Rational(-1, 4), 4, Rational(16, 9)}, Curve::Next, R(1), kP);
  REQUIRE(c.real);
  CHECK(near(c.tau_minus, R(1)));
  CHECK(near(c.tau_plus, R(Rational(5, 1)) / R(Rational(9, 2))));
  CHECK_THROWS_AS(branches(UltrasphericalCurves{1, 4, Rational(2, 3)}, Curve::Next, R(0), kP), std::domain_error);
}

TEST_CASE("branch values solve the quadratic") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> xi(1, 999);
  const std::vector<CurveScheme> schemes{UltrasphericalCurves{Rational(-1, 3), 5, Rational(12, 7)},
                                         UltrasphericalCurves{2, 3, Rational(2, 5)},
                                         SymmetricUnitCurves{Rational(2, 3), Rational(4, 7), Rational(9, 5)},
                                         HermiteCurves{Rational(1, 2), 1, Rational(3, 2)}};
  for (const CurveScheme& s : schemes) {
    for (int i = 0; i < 50; ++i) {
      const Real x = R(Rational(xi(rng), 1000)) * (std::holds_alternative<HermiteCurves>(s) ? 5 : 1);
      for (Curve which : {Curve::Current, Curve::Next}) {
        const CurveBranches b = branches(s, which, x, kP);
        if (!b.real) {
          CHECK(b.discriminant < 0);
          continue;
        }
        CHECK(b.tau_minus <= b.tau_plus);
        const Quadratic<Real> q = curve_quadratic(s, which, x, kP);
        const Real scale = abs(q.a) + abs(q.b) + abs(q.c);
        for (const Real& t : {b.tau_minus, b.tau_plus}) {
          const Real scale_t = scale * (1 + t * t);
          CHECK(abs(q.a * t * t + q.b * t + q.c) <= kP.tolerance(2) * scale_t);
        }
      }
    }
  }
}

TEST_CASE("vertices") {
  const VertexInfo x0 = vertex(UltrasphericalCurves{Rational(1, 2), 1, 1}, Curve::Next, kP);
  CHECK(near(x0.x_vertex, R(Rational(96, 100))));
  CHECK(x0.kind == VertexKind::X0);
  const VertexInfo xt = vertex(UltrasphericalCurves{1, 4, Rational(2, 3)}, Curve::Current, kP);
  CHECK(near(xt.x_vertex, pow(R(Rational(24, 25)), R(Rational(3, 4)))));
  CHECK(xt.kind == VertexKind::XTilde);
  // Chebyshev limit: x~ = 1.
  CHECK(vertex(UltrasphericalCurves{0, 3, 2}, Curve::Current, kP).x_vertex == 1);
  CHECK_THROWS_AS(vertex(UltrasphericalCurves{1, 3, 2}, Curve::Current, kP), std::domain_error);

  const VertexInfo h = vertex(HermiteCurves{0, Rational(1, 2), 1}, Curve::Next, kP);
  CHECK(near(h.x_vertex, sqrt(R(Rational(7, 2)))));
  CHECK(near(h.tau_vertex, 2 / sqrt(R(Rational(7, 2)))));
  const CurveBranches touch = branches(HermiteCurves{0, Rational(1, 2), 1}, Curve::Next, h.x_vertex, kP);
  CHECK(abs(touch.tau_plus - touch.tau_minus) < 1e-15);

  // Discriminant vanishes at the vertex; both curves are real just to the right of x0.
  for (const Rational l : {Rational(-2, 5), Rational(1, 4), Rational(2)}) {
    const UltrasphericalCurves s{l, 6, theta_theorem1(l)};
    for (Curve which : {Curve::Current, Curve::Next}) {
      const VertexInfo v = vertex(s, which, kP);
      const Quadratic<Real> q = curve_quadratic(s, which, v.x_vertex, kP);
      CHECK(abs(q.b * q.b - 4 * q.a * q.c) <= kP.tolerance(3) * (q.b * q.b));
    }
    const Real right = vertex(s, Curve::Next, kP).x_vertex + Real(1e-9);
    CHECK(branches(s, Curve::Current, right, kP).real);
    CHECK(branches(s, Curve::Next, right, kP).real);
  }
}

TEST_CASE("resultant forms agree and vanish at x = 1") {
  for (const Rational l : {Rational(-1, 4), Rational(1, 2), Rational(3)}) {
    for (std::size_t n : {0u, 1u, 7u, 30u}) {
      const UltrasphericalCurves s{l, n, theta_theorem1(l)};
      CHECK(resultant_Rn_exact(s, 1) == 0);
      if (n == 0) continue;
      const Real x = R(Rational(19, 20));
      CHECK(near(resultant_Rn(s, x, kP), resultant_direct(s, x, kP) * 1, 1e-25));
    }
  }
  // R_0 = 4 l^2 rho for l = 1/2, theta = 1: rho = 1 - 3x^2 + 2x^3 = (1-x)^2 (1+2x).
  const Rational x(1, 3);
  CHECK(resultant_Rn_exact(UltrasphericalCurves{Rational(1, 2), 0, 1}, x) == (1 - x) * (1 - x) * (1 + 2 * x));
  CHECK(resultant_Rn(UltrasphericalCurves{Rational(-1, 4), 3, Rational(16, 9)}, R(Rational(95, 100)), kP) > 0);
  CHECK_THROWS_AS(resultant_Rn_exact(UltrasphericalCurves{Rational(-1, 4), 3, Rational(16, 9)}, Rational(1, 2)),
                  std::invalid_argument);

  const SymbolicResultant sym = resultant_symbolic(UltrasphericalCurves{Rational(-1, 4), 3, Rational(16, 9)});
  CHECK(sym.u == 16);
  CHECK(sym.v == 9);
  CHECK(sym.poly(Rational(1)) == 0);
  // poly(s^step) at s = (1/2)^(1/9) is R at x = 1/2; compare numerically.
  const Real s = pow(R(Rational(1, 2)), R(Rational(1, 9)));
  const Real via_poly = substitute_power(sym.poly, sym.step).evaluate(s);
  CHECK(near(via_poly, resultant_Rn(UltrasphericalCurves{Rational(-1, 4), 3, Rational(16, 9)}, R(Rational(1, 2)), kP),
             1e-25));

  const SymmetricUnitCurves su{Rational(2, 3), Rational(4, 7), Rational(16, 9)};
  CHECK(resultant_Rn_exact(su, 1) == 0);
  CHECK(near(resultant_Rn(su, R(Rational(9, 10)), kP), resultant_direct(su, R(Rational(9, 10)), kP), 1e-25));
}

TEST_CASE("nesting") {
  for (const Rational l : {Rational(-2, 5), Rational(-1, 3), Rational(-1, 4), Rational(1, 4), Rational(1, 2), Rational(1),
                           Rational(2)}) {
    for (std::size_t n : {1u, 4u, 30u}) {
      const UltrasphericalCurves s{l, n, theta_theorem1(l)};
      const NestingReport r = nesting_check(s, nesting_grid(s, 1000, kP), kP);
      CAPTURE(to_string(l));
      CAPTURE(n);
      CHECK(r.ok());
      CHECK(r.points == 1000);
      CHECK(r.compared > 0);
    }
  }
  CHECK(nesting_check(UltrasphericalCurves{0, 3, 2}, uniform_grid(Interval{Rational(1, 2), 1}, 10, kP), kP).vacuous);
  const HermiteCurves h{1, Rational(3, 2), 2};
  const NestingReport hr = nesting_check(h, nesting_grid(h, 500, kP), kP);
  CHECK(hr.ok());
  REQUIRE(hr.hermite_vertex_value);
  CHECK(*hr.hermite_vertex_value < 0);
}

TEST_CASE("hermite vertex value and resultant coefficients") {
  const HermiteVertexValue v = hermite_vertex_value(0, Rational(1, 2), 1);
  CHECK(v.closed_form == Rational(-47, 28));
  CHECK(v.direct == Rational(-47, 28));
  const HermiteVertexValue w = hermite_vertex_value(0, 1, 2);
  CHECK(w.closed_form == w.direct);
  // d_{n+1} -> 0: only -4 a^2 d / (3a' + a) survives.
  const Rational tiny(1, 1000000000);
  const HermiteVertexValue lim = hermite_vertex_value(1, 2, 2 + tiny);
  const Rational limit = -4 * Rational(4) * 1 / (3 * (2 + tiny) + 2);
  CHECK(abs(lim.closed_form - limit) < Rational(1, 10000));
  CHECK_THROWS_AS(hermite_vertex_value(1, 1, 2), std::invalid_argument);

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(1, 60);
  for (int i = 0; i < 20; ++i) {
    const Rational a0(d(rng) - 1, d(rng));
    const Rational a1 = a0 + Rational(d(rng), d(rng));
    const Rational a2 = a1 + Rational(d(rng), d(rng));
    const HermiteVertexValue hv = hermite_vertex_value(a0, a1, a2);
    CHECK(hv.closed_form == hv.direct);
    CHECK(hv.closed_form < 0);
    for (const Rational& b : hermite_resultant_coefficients(a0, a1, a2)) CHECK(b > 0);
  }
}

TEST_CASE("remark probe") {
  const RemarkProbe r = remark_asymptotics_probe(Rational(-2, 5), Rational(19, 10), 1000);
  REQUIRE(r.real);
  CHECK(r.gap_plus < 0);
  CHECK(r.gap_minus > 0);
  CHECK(r.gap_plus / r.lead_plus > Real(0.5));
  CHECK(r.gap_plus / r.lead_plus < Real(2));
  CHECK(r.gap_minus / r.lead_minus > Real(0.5));
  CHECK(r.gap_minus / r.lead_minus < Real(2));
  CHECK(near(r.x_hat, (3 * r.x0 + 1) / 4));
  const RemarkProbe s = remark_asymptotics_probe(Rational(-2, 5), Rational(20, 11), 100);
  CHECK(s.resultant > 0);
}
