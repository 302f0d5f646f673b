#pragma once

#include <optional>
#include <string>

#include "quintic/errors.hpp"
#include "quintic/rational.hpp"

namespace quintic {

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q.
struct WeierstrassCurve {
  Rational a1, a2, a3, a4, a6;

  static WeierstrassCurve short_form(const Rational& a4, const Rational& a6) { return {0, 0, 0, a4, a6}; }

  Rational b2() const;
  Rational b4() const;
  Rational b6() const;
  Rational b8() const;
  Rational c4() const;
  Rational c6() const;
  Rational discriminant() const;
  bool is_singular() const { return discriminant().is_zero(); }
  std::string str() const;
  friend bool operator==(const WeierstrassCurve&, const WeierstrassCurve&) = default;
};

/// c4^3 / discriminant. Throws DomainError for singular curves.
Rational j_invariant(const WeierstrassCurve& e);

/// y^2 = x^3 - 27 c4 d^2 x - 54 c6 d^3, the twist of e by d (d != 0).
WeierstrassCurve quadratic_twist(const WeierstrassCurve& e, const Rational& d);

/// Both curves are models of the same curve over Q.
bool isomorphic_over_Q(const WeierstrassCurve& e1, const WeierstrassCurve& e2);

class UnsupportedJ : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Squarefree integer d with e2 isomorphic to the d-twist of e1, or nullopt
/// when the j-invariants differ. Throws UnsupportedJ for j in {0, 1728} and
/// DomainError for singular input.
std::optional<Integer> quadratic_twist_factor(const WeierstrassCurve& e1, const WeierstrassCurve& e2);

struct ECPoint {
  bool infinity = true;
  Rational x, y;

  static ECPoint at_infinity() { return {}; }
  static ECPoint affine(const Rational& x, const Rational& y) { return {false, x, y}; }
  std::string str() const;
  friend bool operator==(const ECPoint&, const ECPoint&) = default;
};

bool on_curve(const WeierstrassCurve& e, const ECPoint& p);
/// The group law; these throw UsageError for points off the curve.
ECPoint negate(const WeierstrassCurve& e, const ECPoint& p);
ECPoint add(const WeierstrassCurve& e, const ECPoint& p, const ECPoint& q);
ECPoint scalar_mul(const WeierstrassCurve& e, long n, const ECPoint& p);

}  // namespace quintic
