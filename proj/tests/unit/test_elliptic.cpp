#include <doctest.h>

#include "quintic/elliptic.hpp"
#include "quintic/integer_factor.hpp"
#include "quintic/resultant.hpp"
#include "test_util.hpp"

using namespace quintic;
using namespace testutil;

namespace {

const WeierstrassCurve kE0 = WeierstrassCurve::short_form(Rational(-675), Rational(-79650));
const WeierstrassCurve kE{0, -1, 0, -833, 109537};

ECPoint P(long x, long y) { return ECPoint::affine(Rational(x), Rational(y)); }

}  // namespace

TEST_CASE("j-invariants") {
  CHECK(j_invariant(kE0) == Rational(-25, 2));
  CHECK(j_invariant(WeierstrassCurve::short_form(Rational(1), Rational(0))) == Rational(1728));
  CHECK(j_invariant(kE) == Rational(-25, 2));
  CHECK_THROWS_AS(j_invariant(WeierstrassCurve::short_form(Rational(0), Rational(0))), DomainError);
  // Long-form invariants against a hand-expanded curve: y^2 + xy + y = x^3 - x^2.
  WeierstrassCurve e{1, -1, 1, 0, 0};
  CHECK(e.b2() == Rational(-3));
  CHECK(e.c4() == Rational(-15));
  // Completing the square: disc = 16 * disc(x^3 + b2/4 x^2 + b4/2 x + b6/4).
  UniPoly cubic({e.b6() / Rational(4), e.b4() / Rational(2), e.b2() / Rational(4), Rational(1)});
  CHECK(e.discriminant() == Rational(16) * discriminant(cubic));
}

TEST_CASE("twist factors") {
  CHECK(quadratic_twist_factor(kE0, kE0) == Integer(1));
  CHECK(quadratic_twist_factor(kE0, kE) == Integer(-10));
  CHECK_FALSE(quadratic_twist_factor(kE0, WeierstrassCurve::short_form(Rational(1), Rational(1))).has_value());
  CHECK_THROWS_AS(quadratic_twist_factor(WeierstrassCurve::short_form(Rational(1), Rational(0)), kE0), UnsupportedJ);
  CHECK_THROWS_AS(quadratic_twist_factor(WeierstrassCurve::short_form(Rational(0), Rational(1)), kE0), UnsupportedJ);
  for (int i = 0; i < 30; ++i) {
    Rational d = rand_nonzero(200, 30);
    WeierstrassCurve t = quadratic_twist(kE0, d);
    CHECK(j_invariant(t) == j_invariant(kE0));
    CHECK(quadratic_twist_factor(kE0, t) == squarefree_class(d));
  }
}

TEST_CASE("group law examples") {
  WeierstrassCurve e = WeierstrassCurve::short_form(Rational(0), Rational(1));
  ECPoint p = P(0, 1), q = P(2, 3);
  CHECK(add(e, p, ECPoint::at_infinity()) == p);
  CHECK(scalar_mul(e, 2, p) == add(e, p, p));
  CHECK(scalar_mul(e, 2, p) == P(0, -1));
  CHECK(scalar_mul(e, 3, p).infinity);
  CHECK(scalar_mul(e, 3, q) == P(-1, 0));
  CHECK(scalar_mul(e, 6, q).infinity);
  CHECK(add(e, q, negate(e, q)).infinity);
  CHECK(scalar_mul(e, -2, q) == negate(e, scalar_mul(e, 2, q)));
  CHECK_THROWS_AS(add(e, P(1, 1), p), UsageError);
}

TEST_CASE("group law properties") {
  struct Case {
    WeierstrassCurve e;
    ECPoint g;
  };
  const Case cases[] = {
      {WeierstrassCurve::short_form(Rational(-43), Rational(166)), P(3, 8)},
      {WeierstrassCurve::short_form(Rational(0), Rational(-2)), P(3, 5)},
      {WeierstrassCurve{1, -1, 1, 0, 0}, P(1, 0)},
      {WeierstrassCurve{0, 0, 1, -1, 0}, P(0, 0)},
  };
  for (const auto& c : cases) {
    REQUIRE(on_curve(c.e, c.g));
    for (int i = 0; i < 20; ++i) {
      ECPoint x = scalar_mul(c.e, rand_int(-4, 4), c.g), y = scalar_mul(c.e, rand_int(-4, 4), c.g),
              z = scalar_mul(c.e, rand_int(-4, 4), c.g);
      CHECK(on_curve(c.e, add(c.e, x, y)));
      CHECK(add(c.e, x, y) == add(c.e, y, x));
      CHECK(add(c.e, add(c.e, x, y), z) == add(c.e, x, add(c.e, y, z)));
      CHECK(add(c.e, x, negate(c.e, x)).infinity);
    }
  }
}
