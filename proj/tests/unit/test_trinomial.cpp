#include <doctest.h>

#include "quintic/errors.hpp"
#include "quintic/factor.hpp"
#include "quintic/families.hpp"
#include "quintic/galois.hpp"
#include "quintic/integer_factor.hpp"
#include "quintic/resultant.hpp"
#include "test_util.hpp"

using namespace quintic;
using namespace testutil;

namespace {

Trinomial tri(const char* a, const char* b) { return {Rational::parse(a), Rational::parse(b)}; }

}  // namespace

TEST_CASE("parsing normalizes the leading coefficient") {
  CHECK(Trinomial::from_poly(UniPoly::parse_coeffs("-4,-10,0,0,0,40")) == tri("-1/4", "-1/10"));
  CHECK_THROWS_AS(Trinomial::from_poly(UniPoly::parse_coeffs("1,1,1,0,0,1")), UsageError);
}

TEST_CASE("equivalence classes") {
  CHECK(equiv_class(tri("-5", "12")) == EquivClass{ClassKind::Generic, Rational(-3125, 20736)});
  CHECK(equiv_class(tri("750", "3750")) == EquivClass{ClassKind::Generic, Rational(6, 5)});
  CHECK(equiv_class(tri("0", "-18")) == equiv_class(tri("0", "-9/16")));
  CHECK(equiv_class(tri("0", "-18")).kind == ClassKind::Pure);
  CHECK_FALSE(equiv_class(tri("0", "-18")) == equiv_class(tri("0", "-324")));
  CHECK(equiv_class(tri("3", "0")).kind == ClassKind::LinearOnly);
  CHECK(equiv_class(tri("0", "0")).kind == ClassKind::Degenerate);
}

TEST_CASE("classes are invariant under rescaling") {
  for (int i = 0; i < 200; ++i) {
    Trinomial f{rand_int(0, 5) ? rand_rational(50, 20) : Rational(0), rand_int(0, 5) ? rand_rational(50, 20) : Rational(0)};
    Rational lambda = rand_nonzero(30, 30);
    CHECK(equiv_class(f) == equiv_class(rescale(f, lambda)));
    // lambda^-5 f(lambda x) computed as a polynomial, then reparsed.
    UniPoly p = f.poly().compose_scale(lambda).scaled(lambda.pow(-5));
    CHECK(Trinomial::from_poly(p) == rescale(f, lambda));
  }
}

TEST_CASE("t-form normalization") {
  TForm n = normalize_t_form(tri("-5", "12"));
  CHECK(n.form == t_form(Rational(-3125, 20736)));
  CHECK(rescale(tri("-5", "12"), n.lambda) == n.form);
  TForm fixed = normalize_t_form(t_form(Rational(7, 3)));
  CHECK(fixed.lambda == Rational(1));
  CHECK(normalize_t_form(tri("750", "3750")).form == t_form(Rational(6, 5)));
  try {
    normalize_t_form(tri("0", "-18"));
    FAIL("expected NotNormalizable");
  } catch (const NotNormalizable& e) {
    CHECK(e.equiv_class().kind == ClassKind::Pure);
  }
}

TEST_CASE("closed-form discriminant") {
  CHECK(trinomial_disc(t_form(Rational(-3125, 256))).is_zero());
  CHECK(trinomial_disc(tri("0", "1")) == Rational(3125));
  CHECK(trinomial_disc(tri("-5", "12")) == Rational(64000000));
  for (int i = 0; i < 200; ++i) {
    Trinomial f{rand_rational(300, 40), rand_rational(300, 40)};
    CHECK(trinomial_disc(f) == discriminant(f.poly()));
  }
}

TEST_CASE("Galois heuristic") {
  CHECK(galois_type_heuristic(tri("-5", "12"), 500).group == GaloisGroup::D10);
  GaloisGuess pure = galois_type_heuristic(tri("0", "-18"), 500);
  CHECK(pure.group == GaloisGroup::F20);
  CHECK_FALSE(pure.evidence.discriminant_is_square);
  CHECK(galois_type_heuristic(tri("-1", "1"), 500).group == GaloisGroup::S5);
  CHECK_THROWS_AS(galois_type_heuristic(tri("1", "1"), 500), UsageError);
  // Cyclic: the minimal polynomial of 2 cos(2 pi / 11) is degree 5 with group C5.
  CHECK(galois_type_heuristic(UniPoly::parse_coeffs("1,3,-3,-4,1,1"), 500).group == GaloisGroup::C5);
}

TEST_CASE("Weber family") {
  CHECK(weber_family(Rational(2)) == tri("15/32", "21/16"));
  CHECK(weber_family(Rational(1)) == tri("0", "1"));
  CHECK_FALSE(is_irreducible(weber_family(Rational(1)).poly()));
  CHECK(weber_family(Rational(0)) == tri("-5/16", "3/8"));
  int seen = 0;
  while (seen < 10) {
    Trinomial f = weber_family(rand_rational(30, 7));
    if (!is_irreducible(f.poly())) continue;
    ++seen;
    for (const auto& [t, n] : cycle_type_census(f.poly(), 499)) CHECK(group_has_cycle_type(GaloisGroup::F20, t));
  }
}

TEST_CASE("dihedral family") {
  CHECK(dihedral_family(Rational(2)) == tri("1/4", "6/5"));
  CHECK(dihedral_family(Rational(1)) == weber_family(Rational(0)));
  CHECK(dihedral_family(Rational(-1)) == weber_family(Rational(0)));
  CHECK(galois_type_heuristic(dihedral_family(Rational(1)), 500).group == GaloisGroup::D10);
  CHECK_THROWS_AS(dihedral_family(Rational(0)), UndefinedInput);
  int seen = 0;
  while (seen < 10) {
    Trinomial f = dihedral_family(rand_nonzero(30, 7));
    if (!is_irreducible(f.poly())) continue;
    ++seen;
    CHECK(is_rational_square(discriminant(f.poly())));
    for (const auto& [t, n] : cycle_type_census(f.poly(), 499)) CHECK(group_has_cycle_type(GaloisGroup::D10, t));
  }
}

TEST_CASE("radical family") {
  RadicalFamilyMember m = sw2_family(Rational(2));
  CHECK(m.radicand == Rational(24));
  CHECK(m.trinomial == tri("96/5", "-192/5"));
  CHECK(sw2_family(Rational(-2)).radicand == Rational(648));
  CHECK_THROWS_AS(sw2_family(Rational(1)), UndefinedInput);
  CHECK_THROWS_AS(sw2_family(Rational(-1)), UndefinedInput);
  CHECK_THROWS_AS(sw2_family(Rational(0)), UndefinedInput);
  int seen = 0;
  while (seen < 5) {
    Rational r = rand_nonzero(7, 3);
    if (r == Rational(1) || r == Rational(-1)) continue;
    RadicalFamilyMember mr = sw2_family(r);
    UniPoly radical({-mr.radicand, 0, 0, 0, 0, 1});
    if (!is_irreducible(radical)) continue;
    ++seen;
    auto res = has_root_in_field(mr.trinomial.poly(), NumberField::create(radical));
    INFO("r = " << r.str());
    REQUIRE(res.status == RootStatus::Certificate);
    CHECK(evaluate(mr.trinomial.poly(), *res.root).is_zero());
  }
}

TEST_CASE("two-trinomial family") {
  TrinomialPair p = two_trinomial_family(Rational(2));
  CHECK(p.f == ScaledTrinomial{Rational(40), Rational(-10), Rational(-4)});
  CHECK(p.h == ScaledTrinomial{Rational(20), Rational(145), Rational(-394)});
  CHECK(p.root == Coords{Rational(2), Rational(2), Rational(-5), Rational(10), Rational(-10)});
  CHECK(verify_pair(p));
  CHECK(verify_pair(two_trinomial_family(Rational(3))));
  for (long bad : {0L, 1L, -8L}) CHECK_THROWS_AS(two_trinomial_family(Rational(bad)), UndefinedInput);
  int checked = 0;
  while (checked < 25) {
    Rational a = rand_rational(80, 15);
    if (a.is_zero() || a == Rational(1) || a == Rational(-8)) continue;
    ++checked;
    TrinomialPair q = two_trinomial_family(a);
    CHECK(verify_pair(q));
    CHECK(q.f_irreducible == is_irreducible(q.f.poly()));
  }
  // The new root is not a rescaled conjugate: the classes differ.
  CHECK_FALSE(equiv_class(p.f.monic()) == equiv_class(p.h.monic()));
}
