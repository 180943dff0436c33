#include "turankit/certify.hpp"

#include <doctest.h>

using namespace turankit;

TEST_CASE("exact certificate for Legendre with theta = 1") {
  // Delta_2(x) = x (1-x)^2 (9x^2 + 8x + 1) / 4.
  const Certificate c = certify_exact(Rational(1, 2), 2, 1);
  CHECK(c.outcome == Outcome::CertifiedNonnegative);
  CHECK(c.mode == CertificateMode::ExactSturm);
  REQUIRE(c.exact);
  CHECK(c.exact->multiplicity == 2);
  CHECK(c.exact->interior_roots == 0);
  CHECK(c.exact->sample_value > 0);
  CHECK(to_string(c.outcome) == "certified");
  CHECK(to_string(c.mode) == "exact-sturm");
}

TEST_CASE("exact certificates along the theorem-one exponent") {
  for (const Rational l : {Rational(-1, 4), Rational(0), Rational(1, 2), Rational(1)}) {
    for (std::size_t n = 1; n <= 6; ++n) {
      CAPTURE(to_string(l));
      CAPTURE(n);
      CHECK(certify_exact(l, n, theta_theorem1(l)).outcome == Outcome::CertifiedNonnegative);
    }
  }
}

TEST_CASE("exact route finds counterexamples beyond the sharp exponent") {
  const Certificate c = certify_exact(Rational(1, 2), 1, Rational(101, 100));
  CHECK(c.outcome == Outcome::Counterexample);
  CHECK(c.min_value < 0);
  CHECK(c.argmin_x > Real(0.9));
  CHECK_THROWS_AS(certify_exact(Rational(1, 2), 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(certify_exact(Rational(1, 2), 1, 0), std::invalid_argument);
}

TEST_CASE("numeric scan") {
  const FamilySpec f = FamilySpec::ultraspherical(Rational(1, 2));
  const Certificate ok = scan_min(f, 3, ThetaRule::theorem_one(Rational(1, 2)), Interval{0, 1});
  CHECK(ok.outcome == Outcome::CertifiedNonnegative);
  REQUIRE(ok.scan);
  CHECK(ok.scan->grid_size == 4096);

  const Certificate bad = scan_min(f, 1, ThetaRule::custom(Rational(101, 100)), Interval{Rational(9, 10), 1});
  CHECK(bad.outcome == Outcome::Counterexample);
  CHECK(bad.argmin_x > Real(0.9));
  CHECK(bad.argmin_x < 1);
  // Direct check of the witness.
  const Real d = turan_delta(f, 1, ThetaRule::custom(Rational(101, 100)), bad.argmin_x, Precision(256)).delta;
  CHECK(d < 0);

  ScanOptions tiny;
  tiny.grid_size = 10;
  CHECK_THROWS_AS(scan_min(f, 1, ThetaRule::custom(1), Interval{0, 1}, tiny), std::invalid_argument);

  const auto range = scan_min_range(f, 10, ThetaRule::theorem_one(Rational(1, 2)), Interval{0, 1});
  REQUIRE(range.size() == 10);
  for (std::size_t n = 1; n <= 10; ++n) {
    CHECK(range[n - 1].n == n);
    CHECK(range[n - 1].outcome == Outcome::CertifiedNonnegative);
  }
}

TEST_CASE("Hermite scan with the Hermite factor") {
  const Certificate c =
      scan_min(FamilySpec::hermite_monic(), 10, ThetaRule::hermite_factor(), Interval{-8, 8});
  CHECK(c.outcome == Outcome::CertifiedNonnegative);
}

TEST_CASE("sharp theta brackets 2/(1+2l)") {
  const ThetaEstimate e = sharp_theta(Rational(1, 2), 3);
  CHECK(e.theta_lo <= 1);
  CHECK(1 <= e.theta_hi);
  CHECK(e.theta_hi - e.theta_lo <= Rational(1, 10000));
  CHECK(!e.empirical);
  CHECK(!e.hi_is_ceiling);

  const ThetaEstimate z = sharp_theta(0, 2);
  CHECK(z.hi_is_ceiling);
  CHECK(z.theta_lo == 2);

  const ThetaEstimate m = sharp_theta(Rational(-1, 4), 4);
  CHECK(m.empirical);
  CHECK(m.theta_lo >= Rational(16, 9) - Rational(1, 10000));
  CHECK(m.theta_hi <= 2);
  SharpThetaOptions o;
  o.tol = Rational(1, 10000000);
  CHECK_THROWS_AS(sharp_theta(Rational(1, 2), 1, o), std::invalid_argument);
}

TEST_CASE("Taylor coefficients at x = 1") {
  const TaylorCheck t = taylor_slope_check(Rational(1, 2), 1, 1);
  CHECK(t.slope_matches);
  REQUIRE(t.quad_formula);
  CHECK(abs(*t.quad_formula - Real(1.5)) < 1e-30);
  CHECK(t.quad_matches);
  // Slope (2 - theta (1 + 2l)) / (1 + 2l) is independent of n.
  for (std::size_t n : {1u, 5u, 12u}) {
    const TaylorCheck s = taylor_slope_check(Rational(1, 3), n, Rational(1, 2));
    CHECK(s.slope_matches);
    CHECK(abs(s.slope_formula - Real(2 - 0.5 * (5.0 / 3)) / Real(5.0 / 3)) < 1e-15);
  }
}

TEST_CASE("batch tables") {
  BatchOptions o;
  const auto rows = batch_table({Rational(1, 2), Rational(1)}, {1, 2, 3}, BatchMode::Check, o);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0].lambda == Rational(1, 2));
  CHECK(rows[3].lambda == 1);
  CHECK(rows[5].n == 3);
  for (const BatchRow& r : rows) {
    REQUIRE(r.certificate);
    CHECK(r.certificate->outcome == Outcome::CertifiedNonnegative);
  }
  o.exact = true;
  const auto ex = batch_table({Rational(-1, 4)}, {1, 2}, BatchMode::Check, o);
  CHECK(ex[1].certificate->mode == CertificateMode::ExactSturm);
  CHECK_THROWS_AS(batch_table({}, {1}, BatchMode::Check, o), std::invalid_argument);
  const auto bad = batch_table({Rational(-1)}, {1}, BatchMode::Check, o);
  CHECK(!bad[0].error.empty());
}

TEST_CASE("Chebyshev at theta = 2 touches zero and is still certified") {
  // Delta = sin^2(phi) sin^2(n phi) has double zeros at cos(k pi / n).
  for (std::size_t n : {3u, 6u, 11u}) {
    const Certificate c = certify_exact(Rational(0), n, Rational(2));
    CHECK(c.outcome == Outcome::CertifiedNonnegative);
    CHECK(c.exact->interior_roots > 0);
    CHECK(c.exact->sign_changing_roots == 0);
    CHECK(c.min_value == 0);
  }
}

TEST_CASE("odd_multiplicity_part keeps only odd-multiplicity roots") {
  const RationalPoly x{Rational(0), Rational(1)};
  const RationalPoly a{Rational(-1, 3), Rational(1)};
  const RationalPoly b{Rational(-1, 2), Rational(1)};
  const RationalPoly c{Rational(2), Rational(1)};
  const RationalPoly p = x * a * a * b * b * b * c * c * c * c * Rational(5);
  CHECK(odd_multiplicity_part(p) == x * b);
  CHECK(odd_multiplicity_part(RationalPoly{Rational(4)}) == RationalPoly{Rational(1)});
}
