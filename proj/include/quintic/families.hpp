#pragma once

#include "quintic/numberfield.hpp"
#include "quintic/trinomial.hpp"

namespace quintic {

/// Monic form of (4u^2 + 16) x^5 + (5u^2 - 5) x + (4u^2 + 10u + 6).
/// Irreducible members have Galois group inside F20.
Trinomial weber_family(const Rational& u);
ScaledTrinomial weber_family_scaled(const Rational& u);

/// weber_family(s - 1/s): the members whose Galois group lies in D10.
/// Throws UndefinedInput for s = 0.
Trinomial dihedral_family(const Rational& s);

/// Radicand m = r^3 (r+1) (r-1)^4 together with a trinomial x^5 + a x + b
/// whose root generates the same field as m^(1/5).
struct RadicalFamilyMember {
  Rational radicand;
  Trinomial trinomial;
};

/// Throws UndefinedInput for r in {0, 1, -1}.
RadicalFamilyMember sw2_family(const Rational& r);

/// Two inequivalent trinomials sharing a root field: f, h, and the
/// coordinates of a root of h in Q[x]/(f) on the basis 1, alpha, ..., alpha^4.
struct TrinomialPair {
  Rational parameter;
  ScaledTrinomial f;
  Coords root;
  ScaledTrinomial h;
  bool f_irreducible = false;
};

/// Throws UndefinedInput for a in {0, 1, -8}.
TrinomialPair two_trinomial_family(const Rational& a);

/// h(beta) == 0 exactly in Q[x]/(f), whether or not f is irreducible.
bool verify_pair(const TrinomialPair& pair);

}  // namespace quintic
