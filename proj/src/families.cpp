#include "quintic/families.hpp"

#include "quintic/errors.hpp"
#include "quintic/factor.hpp"

namespace quintic {

ScaledTrinomial weber_family_scaled(const Rational& u) {
  const Rational u2 = u * u;
  return {Rational(4) * u2 + Rational(16), Rational(5) * u2 - Rational(5),
          Rational(4) * u2 + Rational(10) * u + Rational(6)};
}

Trinomial weber_family(const Rational& u) { return weber_family_scaled(u).monic(); }

Trinomial dihedral_family(const Rational& s) {
  if (s.is_zero()) throw UndefinedInput("dihedral_family: s = 0");
  return weber_family(s - s.inverse());
}

RadicalFamilyMember sw2_family(const Rational& r) {
  if (r.is_zero() || r == Rational(1) || r == Rational(-1))
    throw UndefinedInput("sw2_family: r must avoid 0 and +-1");
  const Rational one(1), r2 = r * r;
  const Rational m = r.pow(3) * (r + one) * (r - one).pow(4);
  const Rational den = (r2 + one).pow(4);
  const Rational a = Rational(-80) * r * (r2 - one) * (r2 + r - one) * (r2 - Rational(4) * r - one) / den;
  const Rational b = Rational(-32) * r * (r2 - one) *
                     (r.pow(4) + Rational(22) * r.pow(3) - Rational(6) * r2 - Rational(22) * r + one) / den;
  return {m, {a, b}};
}

TrinomialPair two_trinomial_family(const Rational& a) {
  if (a.is_zero() || a == Rational(1) || a == Rational(-8))
    throw UndefinedInput("two_trinomial_family: a must avoid 0, 1 and -8");
  const Rational a2 = a * a, a3 = a2 * a;
  TrinomialPair out;
  out.parameter = a;
  out.f = {Rational(4) * a + Rational(32), Rational(-5) * a2 + Rational(5) * a, -a3 + a2};
  // a^2 + 4a - 8 has no rational roots, so the prefactor is always defined.
  const Rational pre = (a2 + Rational(4) * a - Rational(8)).inverse();
  out.root[4] = pre * (Rational(4) * a2 + Rational(16) * a - Rational(128)) / (a2 - a);
  out.root[3] = pre * (Rational(8) * a + Rational(64)) / a;
  out.root[2] = pre * (Rational(-2) * a - Rational(16));
  out.root[1] = pre * (Rational(2) * a + Rational(4));
  out.root[0] = pre * (Rational(-4) * a + Rational(16));
  out.h = {a3 + Rational(7) * a2 - Rational(8) * a, Rational(10) * a2 + Rational(115) * a - Rational(125),
           Rational(2) * a2 - Rational(76) * a - Rational(250)};
  out.f_irreducible = is_irreducible(out.f.poly());
  return out;
}

bool verify_pair(const TrinomialPair& pair) {
  FieldPtr k = NumberField::algebra(pair.f.poly());
  FieldElement beta = k->element(pair.root);
  return evaluate(pair.h.poly(), beta).is_zero();
}

}  // namespace quintic
