#include <doctest.h>

#include "quintic/errors.hpp"
#include "quintic/factor.hpp"
#include "quintic/resultant.hpp"
#include "quintic/roots.hpp"
#include "test_util.hpp"

using namespace quintic;
using namespace testutil;

namespace {

bool disjoint(const ComplexBall& x, const ComplexBall& y) { return !(x - y).may_contain_zero(); }

int real_count(const std::vector<ComplexBall>& r) {
  int n = 0;
  for (const auto& z : r) n += z.im().is_zero();
  return n;
}

}  // namespace

TEST_CASE("roots of x^2 + 1") {
  auto r = complex_roots(UniPoly::parse_coeffs("1,0,1"), 128);
  REQUIRE(r.size() == 2);
  CHECK((r[0] - ComplexBall::from_rational(Rational(0), Rational(1), Rational(0), 256)).may_contain_zero());
  CHECK((r[1] - ComplexBall::from_rational(Rational(0), Rational(-1), Rational(0), 256)).may_contain_zero());
  CHECK(r[0].radius().to_double() <= std::ldexp(1.0, -128));
}

TEST_CASE("signature of x^5 - 18 and x^5 + 6/5 x + 6/5") {
  auto r = complex_roots(UniPoly::parse_coeffs("-18,0,0,0,0,1"), 200);
  CHECK(real_count(r) == 1);
  CHECK(r[0].approx().real() == doctest::Approx(1.782602458));
  auto s = complex_roots(UniPoly::parse_coeffs("6/5,6/5,0,0,0,1"), 200);
  CHECK(real_count(s) == 1);
  // One real root means the discriminant is positive (two complex pairs).
  CHECK(discriminant(UniPoly::parse_coeffs("6/5,6/5,0,0,0,1")).sign() > 0);
}

TEST_CASE("canonical order and conjugate pairing") {
  for (int i = 0; i < 20; ++i) {
    UniPoly p = rand_poly(static_cast<int>(rand_int(2, 8)), 9, 3);
    if (factor_over_Q(p).has_repeated_factor()) continue;
    auto r = complex_roots(p, 128);
    REQUIRE(static_cast<int>(r.size()) == p.degree());
    const int nr = real_count(r);
    for (int k = 0; k + 1 < nr; ++k) CHECK(r[static_cast<std::size_t>(k)].re().to_rational() < r[static_cast<std::size_t>(k + 1)].re().to_rational());
    for (std::size_t k = static_cast<std::size_t>(nr); k < r.size(); k += 2) {
      CHECK(r[k].im().sign() > 0);
      CHECK(r[k + 1].im().to_rational() == -r[k].im().to_rational());
      CHECK(r[k + 1].re().to_rational() == r[k].re().to_rational());
    }
    for (std::size_t a = 0; a < r.size(); ++a)
      for (std::size_t b = a + 1; b < r.size(); ++b) CHECK(disjoint(r[a], r[b]));
  }
}

TEST_CASE("root sums and products contain the coefficient values") {
  for (int i = 0; i < 30; ++i) {
    UniPoly p = rand_poly(static_cast<int>(rand_int(1, 8)), 9, 3);
    if (factor_over_Q(p).has_repeated_factor()) continue;
    const int n = p.degree();
    auto r = complex_roots(p, 128);
    ComplexBall sum = ComplexBall::from_rational(Rational(0), 256), prod = ComplexBall::from_rational(Rational(1), 256);
    for (const auto& z : r) {
      sum = sum + z;
      prod = prod * z;
    }
    Rational want_sum = -p.coeff(n - 1) / p.lc();
    Rational want_prod = (n % 2 ? Rational(-1) : Rational(1)) * p.coeff(0) / p.lc();
    CHECK((sum - ComplexBall::from_rational(want_sum, 256)).may_contain_zero());
    CHECK((prod - ComplexBall::from_rational(want_prod, 256)).may_contain_zero());
  }
}

TEST_CASE("resultant equals lc(p)^deg q times q over the roots of p") {
  for (int i = 0; i < 30; ++i) {
    UniPoly p = rand_poly(static_cast<int>(rand_int(1, 6)), 9, 3);
    UniPoly q = rand_poly(static_cast<int>(rand_int(1, 6)), 9, 3);
    if (factor_over_Q(p).has_repeated_factor()) continue;
    ComplexBall acc = ComplexBall::from_rational(p.lc().pow(q.degree()), 256);
    for (const auto& z : complex_roots(p, 160)) acc = acc * eval_ball(q, z);
    CHECK((acc - ComplexBall::from_rational(resultant(p, q), 256)).may_contain_zero());
    CHECK(acc.radius().to_double() < 1e-20 * std::max(1.0, acc.abs_upper().to_double()));
  }
}

TEST_CASE("repeated roots exhaust precision") {
  CHECK_THROWS_AS(complex_roots(UniPoly::parse_coeffs("1,-2,1"), 64), PrecisionExhausted);
}
