#include "turankit/grid.hpp"
#include "turankit/numeric.hpp"
#include "turankit/rational_poly.hpp"
#include "turankit/sturm.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace turankit;

TEST_CASE("parse_rational reads fractions and decimals exactly") {
  CHECK(parse_rational("-1/4") == Rational(-1, 4));
  CHECK(parse_rational("0.9") == Rational(9, 10));
  CHECK(parse_rational("0.09") == Rational(9, 100));
  CHECK(parse_rational("007") == 7);
  CHECK(parse_rational("1e-3") == Rational(1, 1000));
  CHECK(parse_rational("-2.5E+2") == -250);
  CHECK(parse_rational(" 6/8 ") == Rational(3, 4));
  CHECK(parse_rational("0.1") != Rational(0.1));  // no binary rounding
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("."), std::invalid_argument);
}

TEST_CASE("to_string round-trips through parse_rational") {
  for (const char* s : {"0", "-7", "22/7", "-1/3", "123456789012345678901234567890/11"}) {
    CHECK(to_string(parse_rational(s)) == s);
  }
}

TEST_CASE("precision is explicit and propagates") {
  CHECK_THROWS_AS(Precision(52), std::invalid_argument);
  const Precision p(200);
  CHECK(precision_of(make_real(p)) == 200);
  CHECK(precision_of(to_real(Rational(1, 3), p)) == 200);
  const Real third = to_real(Rational(1, 3), p);
  CHECK(abs(third * 3 - 1) < to_real(Rational(1), p) / Real(1e59));
  CHECK(p.doubled().bits() == 400);
  CHECK(automatic_precision(10, 0.5).bits() == 128);
  CHECK(automatic_precision(10, 0.95).bits() == 256);
  CHECK(automatic_precision(60, 0.1).bits() == 256);
}

TEST_CASE("abs_pow has the zero limit") {
  const Precision p(128);
  CHECK(abs_pow(to_real(0, p), to_real(Rational(16, 9), p)) == 0);
  CHECK(abs(abs_pow(to_real(-8, p), to_real(Rational(1, 3), p)) - 2) < 1e-30);
}

TEST_CASE("grids") {
  const Precision p(128);
  const auto u = uniform_grid(Interval{0, 1}, 5, p);
  REQUIRE(u.size() == 5);
  CHECK(u.front() == 0);
  CHECK(u.back() == 1);
  CHECK(u[2] == to_real(Rational(1, 2), p));
  const auto c = clustered_grid(Interval{0, 1}, 4096, p);
  CHECK(c.size() == 4096);
  CHECK(std::is_sorted(c.begin(), c.end()));
  CHECK(c.back() == 1);
  CHECK(1 - c[c.size() - 2] < 1e-15);  // geometric cluster reaches close to 1
  const auto in = interior_grid(Interval{0, 1}, 999, p);
  CHECK(in.size() == 999);
  CHECK(in.front() > 0);
  CHECK(in.back() < 1);
}

TEST_CASE("rational polynomial arithmetic") {
  const RationalPoly x = RationalPoly::identity();
  const RationalPoly p = x * x - RationalPoly::constant(1);  // (x-1)(x+1)
  CHECK(p.degree() == 2);
  CHECK(p(Rational(3)) == 8);
  CHECK(to_string(p) == "x^2 - 1");
  CHECK(to_string(RationalPoly{}) == "0");
  const DivMod dm = divmod(p, x - RationalPoly::constant(1));
  CHECK(dm.remainder.is_zero());
  CHECK(dm.quotient == x + RationalPoly::constant(1));
  CHECK(gcd(p, x * x - x) == x - RationalPoly::constant(1));
  CHECK(p.derivative() == 2 * x);
  CHECK(substitute_power(p, 3) == pow(x, 6) - RationalPoly::constant(1));
  const CompressedPoly cp = compress_exponents(substitute_power(p, 3));
  CHECK(cp.step == 6);
  CHECK(cp.poly == x - RationalPoly::constant(1));
  const Deflation d = deflate_at_one(pow(RationalPoly::constant(1) - x, 3) * (x + RationalPoly::constant(2)));
  CHECK(d.multiplicity == 3);
  CHECK(d.quotient == x + RationalPoly::constant(2));
  CHECK(p.compose_linear(2, 1)(Rational(0)) == 0);
}

TEST_CASE("resultant of quadratics vanishes exactly on a common root") {
  // (t-1)(t-2) and (t-1)(t+5)
  const Quadratic<Rational> a{1, -3, 2};
  const Quadratic<Rational> b{1, 4, -5};
  CHECK(resultant_quadratics(a, b) == 0);
  const Quadratic<Rational> c{1, 0, 1};
  CHECK(resultant_quadratics(a, c) != 0);
}

TEST_CASE("Sturm counts match known roots") {
  const RationalPoly x = RationalPoly::identity();
  auto lin = [&](const Rational& r) { return x - RationalPoly::constant(r); };
  const RationalPoly p = lin(Rational(1, 3)) * lin(Rational(1, 2)) * lin(2) * lin(-5);
  CHECK(sturm_count_roots(p, 0, 1) == 2);
  CHECK(sturm_count_roots(p, Rational(1, 2), 1) == 0);  // half-open (lo, hi]
  CHECK(sturm_count_roots(p, Rational(1, 3), Rational(1, 2)) == 1);
  CHECK(SturmChain(p).count_all() == 4);
  // Repeated roots are counted once.
  const RationalPoly q = pow(lin(Rational(1, 4)), 3) * (x * x + RationalPoly::constant(1));
  SturmChain sq(q);
  CHECK(sq.square_free_reduced());
  CHECK(sq.count(0, 1) == 1);
  CHECK_THROWS(sturm_count_roots(RationalPoly{}, 0, 1));
  CHECK(cauchy_root_bound(p) > 5);

  const auto ivs = isolate_real_roots(p, -10, 10, Rational(1, 1 << 20));
  REQUIRE(ivs.size() == 4);
  const Rational roots[] = {-5, Rational(1, 3), Rational(1, 2), 2};
  for (int i = 0; i < 4; ++i) {
    CHECK(ivs[i].lo < roots[i]);
    CHECK(roots[i] <= ivs[i].hi);
    CHECK(ivs[i].hi - ivs[i].lo <= Rational(1, 1 << 20));
  }
}
