#include "oracles.hpp"
#include "turankit/turan.hpp"

#include <doctest.h>

#include <boost/math/constants/constants.hpp>

#include <random>

using namespace turankit;

namespace {
const Precision kP(128);
Real R(const Rational& q) { return to_real(q, kP); }
}  // namespace

TEST_CASE("theorem-one exponent") {
  CHECK(theta_theorem1(Rational(1, 2)) == 1);
  CHECK(theta_theorem1(0) == 2);
  CHECK(theta_theorem1(Rational(-1, 4)) == Rational(16, 9));
  CHECK(theta_theorem1(Rational(-2, 5)) == Rational(5, 3));
  CHECK(theta_theorem1(1) == Rational(2, 3));
  CHECK_THROWS_AS(theta_theorem1(Rational(-1, 2)), std::invalid_argument);
  // Continuous at 0 and below 2 elsewhere.
  const Rational eps(1, 1000000);
  CHECK(2 - theta_theorem1(eps) < Rational(1, 100000));
  CHECK(2 - theta_theorem1(-eps) < Rational(1, 100000));
  for (const Rational l : {Rational(-49, 100), Rational(-1, 10), Rational(1, 10), Rational(5)}) CHECK(theta_theorem1(l) < 2);
}

TEST_CASE("theorem-two exponent for a_n = n/(2(n+l))") {
  const SequenceSpec a = SequenceSpec::ultraspherical(Rational(-1, 4));
  const TheoremTwoResult one = theta_theorem2(a, 1, kP);
  REQUIRE(one.F_values.size() == 1);
  // 2 ln(2/3) / ln(32/49)
  CHECK(abs(one.F_values[0] - 2 * log(R(Rational(2, 3))) / log(R(Rational(32, 49)))) < 1e-30);
  CHECK(abs(one.F_values[0] - Real(oracle::theorem2_F(-0.25L, 1))) < 1e-15);
  CHECK(one.analytic_limit == Rational(16, 9));

  const TheoremTwoResult r = theta_theorem2(a, 10000, kP);
  CHECK(r.strictly_decreasing);
  CHECK(r.finite_min_exceeds_limit);
  CHECK(!r.argmin_n);
  CHECK(abs(r.theta - R(Rational(16, 9))) < 1e-30);
  CHECK(ThetaRule(ThetaRule::TheoremTwoInf{a, 1000}).exact_theta() == Rational(16, 9));

  // Explicit list: only the finite minimum exists.
  const SequenceSpec list = SequenceSpec::list({Rational(9, 10), Rational(4, 5), Rational(3, 4), Rational(7, 10)});
  const TheoremTwoResult lr = theta_theorem2(list, 3, kP);
  CHECK(!lr.analytic_limit);
  REQUIRE(lr.argmin_n);
  CHECK(abs(lr.theta - lr.F_values[*lr.argmin_n - 1]) == 0);

  CHECK_THROWS_AS(theta_theorem2(SequenceSpec::list({Rational(1, 2), Rational(1, 3)}), 1, kP), std::invalid_argument);
  CHECK_THROWS_AS(theta_theorem2(SequenceSpec::list({Rational(3, 5), Rational(2, 3)}), 1, kP), std::invalid_argument);
  CHECK_THROWS_AS(theta_theorem2(SequenceSpec::ultraspherical(Rational(1, 4)), 5, kP), std::invalid_argument);
}

TEST_CASE("Delta values from the definitions") {
  const FamilySpec leg = FamilySpec::ultraspherical(Rational(1, 2));
  CHECK(abs(turan_delta(leg, 1, ThetaRule::custom(1), R(Rational(1, 2)), kP).delta - R(Rational(1, 4))) < 1e-35);
  CHECK(turan_delta_exact(leg, 1, ThetaRule::custom(1), Rational(1, 2)) == Rational(1, 4));
  for (const Rational l : {Rational(-1, 3), Rational(0), Rational(3)}) {
    for (std::size_t n : {1u, 7u, 20u}) {
      // The MPFR recurrence rounds its rational coefficients, so only the exact value is exactly 0.
      CHECK(abs(turan_delta(FamilySpec::ultraspherical(l), n, ThetaRule::theorem_one(l), R(1), kP).delta) < 1e-30);
      CHECK(turan_delta_exact(FamilySpec::ultraspherical(l), n, ThetaRule::theorem_one(l), 1) == 0);
    }
  }
  const FamilySpec h = FamilySpec::hermite_monic();
  CHECK(turan_delta_exact(h, 1, ThetaRule::hermite_factor(), 1) == Rational(1, 6));
  CHECK(abs(turan_delta(h, 1, ThetaRule::hermite_factor(), R(1), kP).delta - R(Rational(1, 6))) < 1e-35);
  CHECK_THROWS_AS(turan_delta(leg, 1, ThetaRule::hermite_factor(), R(0), kP), std::invalid_argument);
  // Weight at x = 0 is the limit 0.
  CHECK(turan_delta(leg, 2, ThetaRule::custom(1), R(0), kP).delta ==
        -R(oracle::gegenbauer(Rational(1, 2), 1, 0) * oracle::gegenbauer(Rational(1, 2), 3, 0)));
}

TEST_CASE("Chebyshev closed form sin^2(phi) sin^2(n phi)") {
  const FamilySpec t = FamilySpec::ultraspherical(0);
  const Real pi = boost::math::constants::pi<Real>();
  const Real tol = kP.tolerance(2);
  for (std::size_t n = 1; n <= 30; ++n) {
    DeltaEvaluator ev(t, n, ThetaRule::theorem_one(0), kP);
    for (int i = 1; i < 1000; i += 7) {
      const Real phi = to_real(pi, kP) * i / 1000;
      const Real expect = pow(sin(phi), 2) * pow(sin(n * phi), 2);
      const Real got = ev.delta(n, cos(phi));
      CHECK(abs(got - expect) <= tol * (1 + abs(expect)));
    }
  }
}

TEST_CASE("Hermite: Delta_1 (x^2 + 1/2) = 1/4 exactly") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-5000, 5000);
  for (int i = 0; i < 50; ++i) {
    const Rational x(d(rng), 997);
    CHECK(turan_delta_exact(FamilySpec::hermite_monic(), 1, ThetaRule::hermite_factor(), x) * (x * x + Rational(1, 2)) ==
          Rational(1, 4));
  }
}

TEST_CASE("standard Hermite Delta against the explicit sum") {
  for (std::size_t n : {1u, 4u, 9u}) {
    const Rational x(7, 3);
    const Rational w = x * x / (x * x + Rational(1, 2));
    const Rational expect = w * oracle::hermite_standard(n, x) * oracle::hermite_standard(n, x) -
                            oracle::hermite_standard(n - 1, x) * oracle::hermite_standard(n + 1, x);
    CHECK(abs(hermite_standard_delta(n, R(x), kP) - R(expect)) <= 1e-30 * abs(R(expect)));
  }
}

TEST_CASE("DeltaEvaluator agrees with turan_delta and recomputation at doubled precision") {
  const Rational l(-1, 4);
  const FamilySpec f = FamilySpec::ultraspherical(l);
  DeltaEvaluator ev(f, 12, ThetaRule::theorem_one(l), kP);
  DeltaEvaluator ev2(f, 12, ThetaRule::theorem_one(l), kP.doubled());
  DeltaEvaluator::Point pt;
  for (const Rational x : {Rational(-3, 4), Rational(1, 10), Rational(97, 100)}) {
    ev.evaluate(R(x), pt);
    for (std::size_t n = 1; n <= 12; ++n) {
      const Real single = turan_delta(f, n, ThetaRule::theorem_one(l), R(x), kP).delta;
      CHECK(abs(pt.delta[n] - single) <= kP.tolerance(2) * pt.scale[n]);
      const Real hi = ev2.delta(n, to_real(x, kP.doubled()));
      CHECK(abs(pt.delta[n] - hi) <= kP.tolerance(2) * pt.scale[n]);
    }
  }
}

TEST_CASE("identity residual is exactly zero") {
  CHECK(identity_residual(FamilySpec::ultraspherical(Rational(1, 3)), 3, Rational(7, 10)) == 0);
  CHECK(identity_residual(FamilySpec::hermite_monic(), 5, Rational(-3, 2)) == 0);
  CHECK(identity_residual(FamilySpec::ultraspherical(Rational(1, 2)), 1, 0) == 0);
  std::vector<Rational> a{Rational(1, 2), Rational(2, 3)}, b{1, 2, 3}, c{Rational(1, 5), -1, Rational(3, 7)};
  const FamilySpec g = FamilySpec::general(SequenceSpec::list(a), SequenceSpec::list(b, 0), SequenceSpec::list(c, 0));
  CHECK(identity_residual(g, 2, Rational(-11, 13)) == 0);
}

TEST_CASE("universal bound") {
  const UniversalBoundExact u = universal_bound_check(Rational(1, 2), 2, Rational(1));
  CHECK(u.weight == Rational(25, 24));
  CHECK(u.delta_univ == Rational(1, 24));
  CHECK(universal_bound_check(1, 1, Rational(1, 3)).weight == Rational(4, 3));
  CHECK(universal_bound_check(0, 5, Rational(1, 3)).weight == 1);
  for (const Rational l : {Rational(-2, 5), Rational(1, 2), Rational(3)}) {
    for (std::size_t n : {1u, 3u, 10u}) {
      for (const Rational x : {Rational(-2), Rational(-1, 2), Rational(0), Rational(9, 10), Rational(5, 4)}) {
        const UniversalBoundExact e = universal_bound_check(l, n, x);
        const Rational expect = e.weight * x * x * oracle::gegenbauer(l, n, x) * oracle::gegenbauer(l, n, x) -
                                oracle::gegenbauer(l, n - 1, x) * oracle::gegenbauer(l, n + 1, x);
        CHECK(e.delta_univ == expect);
        CHECK(e.delta_univ >= 0);
      }
    }
  }
}

TEST_CASE("Askey check") {
  const Precision p(128);
  std::vector<Real> grid;
  for (int i = -60; i <= 60; ++i) grid.push_back(to_real(Rational(i, 10), p));
  const AskeyReport r = askey_turan_check(SequenceSpec::hermite_monic(), 20, grid, p);
  CHECK(r.all_nonnegative);
  CHECK(r.hypothesis == Monotonicity::StrictlyIncreasing);
  CHECK(r.points == grid.size());
  const AskeyReport edge = askey_turan_check(SequenceSpec::list(std::vector<Rational>(10, Rational(1, 4))), 8, grid, p);
  CHECK(edge.hypothesis == Monotonicity::NonDecreasingEdge);
  CHECK(edge.all_nonnegative);
  CHECK_THROWS_AS(askey_turan_check(SequenceSpec::list({Rational(1), Rational(1, 2), Rational(1, 3)}), 2, grid, p),
                  std::invalid_argument);
}

TEST_CASE("rule descriptions and values") {
  CHECK(ThetaRule::custom(Rational(3, 2)).exact_theta() == Rational(3, 2));
  CHECK(!ThetaRule::hermite_factor().theta(kP));
  CHECK(!ThetaRule::hermite_factor().is_power());
  CHECK(ThetaRule::theorem_one(Rational(1, 2)).theta(kP) == 1);
}
