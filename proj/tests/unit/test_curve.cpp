#include <doctest.h>

#include "quintic/curve.hpp"
#include "quintic/errors.hpp"
#include "test_util.hpp"

using namespace quintic;
using namespace testutil;

namespace {

CurvePoint pt(long a, long b, long c, long d) { return {{Integer(a), Integer(b), Integer(c), Integer(d)}}; }

CurvePoint from_q(std::array<Rational, 4> p) { return CurvePoint::from_rationals(p); }

const long kF1Family[8][2] = {{75, 105},     {-75, 465},      {-1125, 3825},  {-2025, 65205},
                            {2025, 10665}, {-10125, 83025}, {28125, -39375}, {-3410625, 86685375}};

bool bring_conditions(const CurveCK& c, const CurvePoint& p) {
  UniPoly cp = char_poly(c.field->element(c.lift(p.rationals())));
  return cp.coeff(4).is_zero() && cp.coeff(3).is_zero() && cp.coeff(2).is_zero();
}

}  // namespace

TEST_CASE("t-form curve forms") {
  CurveCK c = curve_from_t(Rational(6, 5));
  CHECK(c.quadric.str(c.free_names()) == "-5*a^2 + 50*a*b + (192/5)*b*d + (96/5)*c^2 + 48*c*d");
  CHECK(c.contains(pt(0, 1, 0, 0).rationals()));
  CHECK(c.eliminated == kE);
  CHECK(c.lift({Rational(4), 0, 0, 0})[kE] == Rational(25, 6));
  CHECK_THROWS_AS(curve_from_t(Rational(0)), DomainError);
  CHECK_THROWS_AS(curve_from_t(Rational(-3125, 256)), DomainError);
  CHECK(curve_from_t(Rational(-3125, 20736)).contains(pt(0, 1, 0, 0).rationals()));
}

TEST_CASE("generic construction matches the t-form display") {
  for (const Rational& t : {Rational(6, 5), Rational(2), Rational(-7, 3), Rational(-3125, 20736), Rational(11, 13)}) {
    CurveCK shown = curve_from_t(t);
    CurveCK built = curve_from_field(t_form(t).poly(), kE);
    REQUIRE(built.free_vars == shown.free_vars);
    Rational unit;
    CHECK(built.quadric.proportional_to(shown.quadric, &unit));
    CHECK(!unit.is_zero());
    // The displayed cubic differs from the x^2 condition by a * quadric.
    MPoly::Exponents d3{0, 0, 0, 3};
    const Rational k = shown.cubic.coeff(d3) / built.cubic.coeff(d3);
    MPoly rest = shown.cubic - built.cubic * k;
    MPoly a = MPoly::variable(4, 0);
    CHECK(rest.proportional_to(a * shown.quadric));
    // Same elimination either way.
    CHECK(built.elimination.proportional_to(shown.elimination));
  }
}

TEST_CASE("pure quintic eliminates a") {
  CurveCK c = curve_from_field(UniPoly::parse_coeffs("-18,0,0,0,0,1"));
  CHECK(c.linear5 == MPoly::term(5, Rational(-5), {1}));
  CHECK(c.eliminated == kA);
  CHECK(c.elimination.is_zero());
  CHECK_THROWS_AS(curve_from_field(UniPoly::parse_coeffs("1,1,0,0,0,1")), UsageError);
}

TEST_CASE("curve of x^5 + 75x + 105 carries the eight trinomials") {
  CurveCK c = curve_from_field(UniPoly::parse_coeffs("105,75,0,0,0,1"));
  CHECK(c.eliminated == kE);
  std::vector<EquivClass> classes;
  for (const auto& ab : kF1Family) {
    Trinomial f{Rational(ab[0]), Rational(ab[1])};
    auto r = has_root_in_field(f.poly(), c.field);
    REQUIRE(r.status == RootStatus::Certificate);
    CurvePoint p = trinomial_to_point(c, *r.root);
    CHECK(c.contains(p.rationals()));
    CHECK(point_to_trinomial(c, p).cls == equiv_class(f));
    classes.push_back(equiv_class(f));
  }
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i + 1; j < classes.size(); ++j) CHECK_FALSE(classes[i] == classes[j]);
}

TEST_CASE("search finds the five t = 6/5 points") {
  CurveCK c = curve_from_t(Rational(6, 5));
  SearchResult r = point_search(c, 200);
  const std::array<std::array<Rational, 4>, 5> expected{{
      {0, 1, 0, 0},
      {Rational(-168, 55), Rational(9, 11), Rational(19, 11), 1},
      {Rational(36, 35), Rational(-30, 7), Rational(24, 7), 1},
      {Rational(-22, 15), Rational(-7, 6), Rational(-5, 4), 1},
      {Rational(-8, 65), Rational(20, 39), Rational(-16, 39), 1},
  }};
  const std::array<EquivClass, 5> classes{{{ClassKind::Generic, Rational(6, 5)},
                                           {ClassKind::Pure, Rational(18)},
                                           {ClassKind::Pure, Rational(432)},
                                           {ClassKind::Pure, Rational(324)},
                                           {ClassKind::Pure, Rational(24)}}};
  for (std::size_t i = 0; i < 5; ++i) {
    CurvePoint p = from_q(expected[i]);
    INFO(p.str());
    CHECK(std::find(r.points.begin(), r.points.end(), p) != r.points.end());
    CHECK(point_to_trinomial(c, p).cls == classes[i]);
  }
  CHECK(from_q(expected[1]) == pt(168, -45, -95, -55));
  for (const auto& p : r.points) CHECK(bring_conditions(c, p));
  CHECK(std::is_sorted(r.points.begin(), r.points.end()));
  CHECK(r.degenerate.empty());
}

TEST_CASE("small searches") {
  CHECK(point_search(curve_from_t(Rational(6, 5)), 1).points.front() == pt(0, 1, 0, 0));
  CHECK(point_search(curve_from_t(Rational(9, 7)), 1).points.front() == pt(0, 1, 0, 0));
  auto r = point_search(curve_from_t(Rational(-3125, 20736)), 100);
  CHECK(std::find(r.points.begin(), r.points.end(), pt(0, 1, 0, 0)) != r.points.end());
  CHECK_THROWS_AS(point_search(curve_from_t(Rational(6, 5)), 0), UsageError);
}

TEST_CASE("search is invariant under partitioning and thread count") {
  for (const CurveCK& c : {curve_from_t(Rational(6, 5)), curve_from_field(UniPoly::parse_coeffs("-18,0,0,0,0,1"))}) {
    const long h = 40;
    SearchOptions one;
    one.threads = 1;
    SearchResult whole = point_search(c, h, one);
    SearchOptions many;
    many.threads = 4;
    CHECK(point_search(c, h, many).points == whole.points);
    std::vector<CurvePoint> merged;
    const std::pair<long, long> halves[2] = {{-h, 7}, {8, h}};
    for (auto x : halves)
      for (auto y : halves)
        for (auto z : halves) {
          SearchOptions part;
          part.box = std::array<std::pair<long, long>, 3>{x, y, z};
          auto r = point_search(c, h, part);
          merged.insert(merged.end(), r.points.begin(), r.points.end());
        }
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    CHECK(merged == whole.points);
    for (const auto& p : whole.points) CHECK(bring_conditions(c, p));
  }
}

TEST_CASE("points and trinomials") {
  const Rational t(6, 5);
  CurveCK c = curve_from_t(t);
  PointImage im = point_to_trinomial(c, pt(0, 1, 0, 0));
  CHECK(im.trinomial == t_form(t));
  CHECK(im.rho == std::pair<Integer, Integer>{Integer(6), Integer(5)});
  CHECK(point_to_trinomial(c, from_q({Rational(-168, 55), Rational(9, 11), Rational(19, 11), 1})).cls ==
        EquivClass{ClassKind::Pure, Rational(18)});
  CHECK(point_to_trinomial(c, from_q({Rational(36, 35), Rational(-30, 7), Rational(24, 7), 1})).cls ==
        EquivClass{ClassKind::Pure, Rational(432)});
  CHECK_THROWS_AS(point_to_trinomial(c, pt(1, 1, 1, 1)), UsageError);

  FieldElement alpha = c.field->alpha();
  CHECK(trinomial_to_point(c, alpha) == pt(0, 1, 0, 0));
  CHECK(trinomial_to_point(c, alpha * Rational(2)) == pt(0, 1, 0, 0));
  CHECK_THROWS_AS(trinomial_to_point(c, alpha + c.field->from_rational(Rational(1))), UsageError);

  auto r = has_root_in_field(UniPoly::parse_coeffs("-324,0,0,0,0,1"), c.field);
  REQUIRE(r.status == RootStatus::Certificate);
  CHECK(trinomial_to_point(c, *r.root) == from_q({Rational(-22, 15), Rational(-7, 6), Rational(-5, 4), 1}));
}

TEST_CASE("class is invariant under rescaling the point") {
  CurveCK c = curve_from_t(Rational(6, 5));
  for (const auto& p : point_search(c, 200).points) {
    EquivClass cls = point_to_trinomial(c, p).cls;
    for (int i = 0; i < 3; ++i) {
      Rational l = rand_nonzero(50, 50);
      auto q = p.rationals();
      for (auto& x : q) x *= l;
      CHECK(point_to_trinomial(c, CurvePoint::from_rationals(q)).cls == cls);
      // Scaling beta directly.
      FieldElement beta = c.field->element(c.lift(q));
      CHECK(equiv_class(Trinomial::from_poly(char_poly(beta))) == cls);
    }
  }
}

TEST_CASE("degree-10 field polynomial") {
  CHECK(field_L_polynomial(Rational(1)) == UniPoly::parse_coeffs("-1,4,-4,0,0,-11,-3,0,0,0,1"));
  UniPoly p = field_L_polynomial(Rational(6, 5));
  CHECK(p.degree() == 10);
  CHECK(p.lc() == Rational(1));
  CHECK(p.coeff(5) == Rational(-66, 5));
  CHECK(p.coeff(0) == Rational(-36, 25));
  CHECK_THROWS_AS(field_L_polynomial(Rational(0)), DomainError);
}
