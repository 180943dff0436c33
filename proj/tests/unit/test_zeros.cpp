#include "turankit/grid.hpp"
#include "turankit/zeros.hpp"

#include <doctest.h>

#include <boost/math/constants/constants.hpp>

using namespace turankit;

namespace {
const Precision kP(128);
Real R(const Rational& q) { return to_real(q, kP); }
}  // namespace

TEST_CASE("zeros of U_5 are cos(k pi / 6)") {
  const ZeroSet z = isolate_zeros(1, 5);
  REQUIRE(z.zeros.size() == 5);
  const Real pi = boost::math::constants::pi<Real>();
  for (int k = 1; k <= 5; ++k) CHECK(abs(z.zeros[k - 1] - cos(to_real(pi, kP) * k / 6)) < 1e-20);
  CHECK(abs(z.zeros[2]) < 1e-20);
}

TEST_CASE("Legendre P_2 zeros") {
  const ZeroSet z = isolate_zeros(Rational(1, 2), 2);
  CHECK(abs(z.zeros[0] - 1 / sqrt(R(3))) < 1e-20);
  CHECK(abs(z.zeros[1] + 1 / sqrt(R(3))) < 1e-20);
}

TEST_CASE("zero sets: symmetric, inside (-1, 1), interlacing, both backends agree") {
  for (const Rational l : {Rational(-2, 5), Rational(-1, 4), Rational(0), Rational(3, 2)}) {
    for (std::size_t d = 2; d <= 15; ++d) {
      CAPTURE(to_string(l));
      CAPTURE(d);
      const ZeroSet a = isolate_zeros(l, d);
      const ZeroSet b = isolate_zeros(l, d, default_zero_tolerance(), kP, ZeroMethod::ExactSturm);
      const ZeroSet prev = isolate_zeros(l, d - 1);
      REQUIRE(a.zeros.size() == d);
      REQUIRE(b.zeros.size() == d);
      for (std::size_t i = 0; i < d; ++i) {
        CHECK(abs(a.zeros[i]) < 1);
        CHECK(abs(a.zeros[i] + a.zeros[d - 1 - i]) < 1e-19);
        CHECK(abs(a.zeros[i] - b.zeros[i]) < 2e-20);
        if (i + 1 < d) {
          CHECK(a.zeros[i] > prev.zeros[i]);
          CHECK(prev.zeros[i] > a.zeros[i + 1]);
        }
      }
      if (d % 2 == 1) CHECK(abs(a.zeros[d / 2]) < 1e-19);
    }
  }
  CHECK_THROWS_AS(isolate_zeros(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(isolate_zeros(Rational(-1, 2), 3), std::invalid_argument);
}

TEST_CASE("vertex against the largest zeros") {
  const ClaimReport r = claim_vertex_vs_zeros(1, 4);
  CHECK(r.verdict == ClaimVerdict::Holds);
  CHECK(abs(r.x_tilde - pow(R(Rational(24, 25)), R(Rational(3, 4)))) < 1e-30);
  CHECK(abs(r.x1 - sqrt(R(3)) / 2) < 1e-20);
  CHECK(abs(r.x2 - R(Rational(1, 2))) < 1e-20);

  const ClaimReport c = claim_vertex_vs_zeros(0, 6);
  CHECK(c.x_tilde == 1);
  CHECK(c.verdict == ClaimVerdict::Holds);

  const ClaimReport m = claim_vertex_vs_zeros(Rational(-1, 3), 4);
  CHECK(m.verdict == ClaimVerdict::Holds);
  CHECK(m.x2 < m.x_tilde);
  CHECK(m.x_tilde < m.x1);
  const ClaimReport q = claim_vertex_vs_zeros(Rational(-1, 4), 4);
  CHECK(q.x_tilde_above_x1);
}

TEST_CASE("Christoffel-Darboux kernel") {
  const KernelReport k = cd_kernel_positivity(Rational(1, 2), 3, interior_grid(Interval{-1, 1}, 2001, kP));
  CHECK(k.all_positive);
  CHECK(k.points == 2001);
  // l = 2, n = 1, x = 0: -y_2(0) = 1 / (1 + 2l).
  const KernelReport z = cd_kernel_positivity(2, 1, {R(0)});
  CHECK(abs(z.min_value - R(Rational(1, 5))) < 1e-35);
  const KernelReport e = cd_kernel_positivity(2, 0, {R(Rational(1, 3))});
  CHECK(e.min_value == 1);
}
