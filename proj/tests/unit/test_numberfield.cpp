#include <doctest.h>

#include "quintic/errors.hpp"
#include "quintic/factor.hpp"
#include "quintic/numberfield.hpp"
#include "test_util.hpp"

using namespace quintic;
using namespace testutil;

namespace {

FieldPtr field(const char* coeffs) { return NumberField::create(UniPoly::parse_coeffs(coeffs)); }

Coords coords(std::initializer_list<Rational> c) {
  Coords out{};
  std::size_t i = 0;
  for (const auto& x : c) out[i++] = x;
  return out;
}

FieldPtr random_field() {
  for (;;) {
    std::vector<Rational> c(6);
    for (auto& x : c) x = Rational(rand_int(-9, 9));
    c[5] = Rational(1);
    UniPoly g(c);
    if (is_irreducible(g)) return NumberField::create(g, 192);
  }
}

FieldElement random_element(const FieldPtr& k) {
  Coords c;
  for (auto& x : c) x = rand_rational(6, 4);
  return k->element(c);
}

}  // namespace

TEST_CASE("multiplication") {
  FieldPtr k = field("-18,0,0,0,0,1");
  FieldElement a = k->alpha();
  CHECK(a * a.pow(4) == k->from_rational(Rational(18)));
  FieldElement one = k->from_rational(Rational(1));
  CHECK((one + a) * (one - a) == k->element(coords({1, 0, -1})));
  FieldPtr kt = field("6/5,6/5,0,0,0,1");
  CHECK(kt->alpha() * kt->alpha().pow(4) == kt->element(coords({Rational(-6, 5), Rational(-6, 5)})));
  CHECK_THROWS_AS(a * kt->alpha(), UsageError);
}

TEST_CASE("multiplication matrices") {
  FieldPtr k = field("-18,0,0,0,0,1");
  Matrix5 id = multiplication_matrix(k->from_rational(Rational(1)));
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) CHECK(id[i][j] == Rational(i == j ? 1 : 0));
  Matrix5 comp = multiplication_matrix(k->alpha());
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      Rational want = (i == j + 1) ? Rational(1) : Rational(0);
      if (j == 4 && i == 0) want = Rational(18);
      CHECK(comp[i][j] == want);
    }
  CHECK(k->alpha().pow(2).trace().is_zero());
}

TEST_CASE("characteristic polynomials") {
  FieldPtr k = field("-18,0,0,0,0,1");
  CHECK(char_poly(k->from_rational(Rational(3, 2))) == pow(UniPoly::linear_root(Rational(3, 2)), 5));
  CHECK(char_poly(k->alpha()) == k->defining_poly());
  // Point (-8/65 : 20/39 : -16/39 : 1) on the t = 6/5 curve, e = 5a/(4t).
  FieldPtr kt = field("6/5,6/5,0,0,0,1");
  const Rational a(-8, 65), t(6, 5);
  UniPoly cp = char_poly(kt->element(coords({a, Rational(20, 39), Rational(-16, 39), Rational(1), Rational(5) * a / (Rational(4) * t)})));
  CHECK(cp.coeff(4).is_zero());
  CHECK(cp.coeff(3).is_zero());
  CHECK(cp.coeff(2).is_zero());
  CHECK(cp.coeff(1).is_zero());
  // -constant term = beta^5 lies in the fifth-power class of 24.
  Rational ratio = -cp.coeff(0) / Rational(24);
  Integer n = ratio.num(), d = ratio.den();
  CHECK(mpz_root(n.get_mpz_t(), n.get_mpz_t(), 5) != 0);
  CHECK(mpz_root(d.get_mpz_t(), d.get_mpz_t(), 5) != 0);
}

TEST_CASE("char_poly annihilates its element and is irreducible off Q") {
  for (int f = 0; f < 10; ++f) {
    FieldPtr k = random_field();
    for (int i = 0; i < 10; ++i) {
      FieldElement b = random_element(k);
      UniPoly cp = char_poly(b);
      CHECK(evaluate(cp, b).is_zero());
      if (!b.is_rational()) CHECK(is_irreducible(cp));
    }
  }
}

TEST_CASE("trace and norm match the embeddings") {
  for (int f = 0; f < 5; ++f) {
    FieldPtr k = random_field();
    for (int i = 0; i < 5; ++i) {
      FieldElement b = random_element(k);
      UniPoly cp = char_poly(b);
      ComplexBall sum = ComplexBall::from_rational(Rational(0), 192), prod = ComplexBall::from_rational(Rational(1), 192);
      for (std::size_t j = 0; j < 5; ++j) {
        sum = sum + b.embed(j);
        prod = prod * b.embed(j);
      }
      CHECK((sum - ComplexBall::from_rational(b.trace(), 192)).may_contain_zero());
      CHECK((sum - ComplexBall::from_rational(-cp.coeff(4), 192)).may_contain_zero());
      CHECK((prod - ComplexBall::from_rational(-cp.coeff(0), 192)).may_contain_zero());
    }
  }
}

TEST_CASE("root certificates") {
  FieldPtr k = field("-18,0,0,0,0,1");
  auto self = has_root_in_field(k->defining_poly(), k);
  REQUIRE(self.status == RootStatus::Certificate);
  CHECK(evaluate(k->defining_poly(), *self.root).is_zero());
  for (const char* f : {"-324,0,0,0,0,1", "3750,750,0,0,0,1", "6/5,6/5,0,0,0,1"}) {
    UniPoly p = UniPoly::parse_coeffs(f);
    auto r = has_root_in_field(p, k);
    INFO(f);
    REQUIRE(r.status == RootStatus::Certificate);
    CHECK(evaluate(p, *r.root).is_zero());
  }
  auto r = has_root_in_field(UniPoly::parse_coeffs("-324,0,0,0,0,1"), k);
  CHECK(r.root->pow(5) == k->from_rational(Rational(324)));
}

TEST_CASE("exact absence proofs") {
  FieldPtr k = field("-18,0,0,0,0,1");
  // Reducible without linear factor.
  CHECK(has_root_in_field(UniPoly::parse_coeffs("1,1,0,0,0,1"), k).status == RootStatus::ProvenAbsent);
  // Three real roots cannot live in a field with one real embedding.
  CHECK(has_root_in_field(UniPoly::parse_coeffs("1,-5,0,0,0,1"), k).status == RootStatus::ProvenAbsent);
  // Same signature, square discriminant versus non-square.
  CHECK(has_root_in_field(UniPoly::parse_coeffs("12,-5,0,0,0,1"), k).status == RootStatus::ProvenAbsent);
  // Rational root is its own certificate.
  auto lin = has_root_in_field(UniPoly::parse_coeffs("-32,0,0,0,0,1"), k);
  REQUIRE(lin.status == RootStatus::Certificate);
  CHECK(*lin.root == k->from_rational(Rational(2)));
}

TEST_CASE("certificates always verify") {
  for (int i = 0; i < 10; ++i) {
    FieldPtr k = random_field();
    FieldElement b = random_element(k);
    if (b.is_rational()) continue;
    UniPoly cp = char_poly(b);
    auto r = has_root_in_field(cp, k, 192, Integer(1000000));
    CHECK(r.status != RootStatus::ProvenAbsent);
    if (r.root) CHECK(evaluate(cp, *r.root).is_zero());
  }
}
