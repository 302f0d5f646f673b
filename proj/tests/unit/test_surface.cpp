#include <doctest.h>

#include "quintic/errors.hpp"
#include "quintic/families.hpp"
#include "quintic/surface.hpp"
#include "test_util.hpp"

using namespace quintic;
using namespace testutil;

namespace {

std::array<Rational, 4> q4(Rational a, Rational b, Rational c, Rational d) { return {a, b, c, d}; }

const SurfaceLine kLines[] = {SurfaceLine::L1, SurfaceLine::L2, SurfaceLine::L3, SurfaceLine::L4, SurfaceLine::L5};
const RationalCurve kCurves[] = {RationalCurve::R1, RationalCurve::R2, RationalCurve::R3, RationalCurve::R4,
                                 RationalCurve::R5};

}  // namespace

TEST_CASE("the form is a 30-term sextic") {
  CHECK(surface_form().terms().size() == 30);
  CHECK(surface_form().homogeneous_degree() == 6);
}

TEST_CASE("eliminating t reproduces the form") {
  MPoly e = t_eliminant();
  Rational unit;
  REQUIRE(e.divide_by_variable(0).proportional_to(surface_form(), &unit));
  CHECK(unit == Rational(-80));
}

TEST_CASE("membership examples") {
  CHECK(on_surface(q4(10, 1, Rational(-3, 5), 0)));
  CHECK(on_surface(q4(0, 0, 1, 1)));
  CHECK_FALSE(on_surface(q4(1, 1, 1, 1)));
  CHECK(on_surface(SurfacePoint::from_rationals(q4(10, 1, Rational(-3, 5), 0))));
}

TEST_CASE("t recovery on the annotated lines") {
  CHECK(recover_t(q4(10, 1, Rational(-3, 5), 7)) == Rational(0));
  CHECK(recover_t(line_point(SurfaceLine::L4, Rational(3), Rational(16))) == Rational(-3125, 256));
  CHECK_FALSE(recover_t(line_point(SurfaceLine::L3, Rational(3), Rational(32))).has_value());
  CHECK_THROWS_AS(recover_t(q4(1, 1, 1, 1)), UsageError);
  for (int i = 0; i < 50; ++i) {
    Rational u = rand_nonzero(50, 9), v = rand_nonzero(50, 9);
    auto p1 = line_point(SurfaceLine::L1, u, v);
    if (recover_t(p1)) CHECK(*recover_t(p1) == Rational(0));
    CHECK_FALSE(recover_t(line_point(SurfaceLine::L3, u, v)).has_value());
    auto p4 = line_point(SurfaceLine::L4, u, v);
    if (Rational(32) * u != Rational(25) * v) CHECK(recover_t(p4) == Rational(-3125, 256));
  }
}

TEST_CASE("rational curve examples") {
  CHECK(rational_curve_point(RationalCurve::R4, Rational(1)) == q4(0, Rational(-7, 4), 1, 1));
  CHECK(rational_curve_point(RationalCurve::R3, Rational(0)) ==
        q4(1, Rational(1, 10), Rational(-4, 25), Rational(16, 125)));
  CHECK(rational_curve_point(RationalCurve::R5, Rational(2)) == q4(-45, Rational(-9, 2), 2, 1));
  for (auto c : kCurves) CHECK(on_surface(rational_curve(c, Rational(1, 3))));
  CHECK(parse_rational_curve("R3") == RationalCurve::R3);
  CHECK_THROWS_AS(parse_rational_curve("R9"), UsageError);
}

TEST_CASE("the form vanishes on all lines and curves") {
  // Each curve has coordinate degree <= 4, so the composite has degree <= 24;
  // 50 distinct samples decide the identity.
  for (auto l : kLines)
    for (int i = 0; i < 50; ++i) CHECK(on_surface(line_point(l, rand_rational(99, 20), rand_rational(99, 20))));
  for (auto c : kCurves) {
    int n = 0;
    for (long k = -25; n < 50; ++k) {
      std::array<Rational, 4> p;
      try {
        p = rational_curve_point(c, Rational(k, 7));
      } catch (const UndefinedInput&) {
        continue;
      }
      ++n;
      CHECK(on_surface(p));
    }
  }
}

TEST_CASE("homogeneity") {
  for (int i = 0; i < 30; ++i) {
    auto p = q4(rand_rational(), rand_rational(), rand_rational(), rand_rational());
    Rational l = rand_nonzero();
    auto lp = p;
    for (auto& x : lp) x *= l;
    CHECK(surface_form().eval(lp) == l.pow(6) * surface_form().eval(p));
  }
}

TEST_CASE("search points lie on the surface with their t") {
  CurveCK c = curve_from_t(Rational(6, 5));
  for (const auto& p : point_search(c, 200).points) {
    CHECK(on_surface(p));
    auto t = recover_t(p);
    if (p == CurvePoint{{Integer(0), Integer(1), Integer(0), Integer(0)}}) {
      CHECK_FALSE(t.has_value());  // 0/0: the base point of every t-curve
      continue;
    }
    CHECK(t == Rational(6, 5));
    auto m = consistency_with_curve(p);
    REQUIRE(m.has_value());
    CHECK(m->on_curve);
  }
}

TEST_CASE("points of random t-curves from the two-trinomial family") {
  int n = 0;
  while (n < 50) {
    Rational a = rand_rational(60, 9);
    if (a.is_zero() || a == Rational(1) || a == Rational(-8)) continue;
    TrinomialPair pr = two_trinomial_family(a);
    TForm tf = normalize_t_form(pr.f.monic());
    const Rational t = tf.form.a;
    if (t == Rational(-3125, 256)) continue;
    ++n;
    // alpha_f = lambda * alpha_t, so coordinates pick up powers of lambda.
    CurveCK c = curve_from_t(t);
    Coords beta;
    for (std::size_t k = 0; k < 5; ++k) beta[k] = pr.root[k] * tf.lambda.pow(static_cast<long>(k));
    CurvePoint p = trinomial_to_point(c, c.field->element(beta));
    CHECK(c.contains(p.rationals()));
    CHECK(on_surface(p));
    INFO("a = " << a.str() << ", point " << p.str());
    // A 0/0 quotient (e.g. a = -4) leaves t unrecoverable from the point alone.
    if (auto rt = recover_t(p)) CHECK(*rt == t);
    CHECK(point_to_trinomial(c, p).cls == equiv_class(pr.h.monic()));
  }
}

TEST_CASE("consistency with the t-curves") {
  CHECK_FALSE(consistency_with_curve(SurfacePoint::from_rationals(q4(10, 1, Rational(-3, 5), 7))).has_value());
  CHECK_FALSE(consistency_with_curve(SurfacePoint::from_rationals(line_point(SurfaceLine::L4, 3, 16))).has_value());
  for (auto c : kCurves)
    for (long k = 1; k < 8; ++k) {
      SurfacePoint p = rational_curve(c, Rational(k, 3));
      auto m = consistency_with_curve(p);
      if (m) CHECK(m->on_curve);
    }
  CHECK_THROWS_AS(consistency_with_curve(SurfacePoint::from_rationals(q4(1, 1, 1, 1))), UsageError);
}
