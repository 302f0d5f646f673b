#include "quintic/trinomial.hpp"

#include "quintic/integer_factor.hpp"

namespace quintic {

Trinomial Trinomial::from_coefficients(const Rational& lead, const Rational& a, const Rational& b) {
  if (lead.is_zero()) throw UsageError("trinomial leading coefficient is zero");
  return {a / lead, b / lead};
}

Trinomial Trinomial::from_poly(const UniPoly& p) {
  if (p.degree() != 5 || !p.coeff(2).is_zero() || !p.coeff(3).is_zero() || !p.coeff(4).is_zero())
    throw UsageError("not of the form l x^5 + a x + b: " + p.str());
  return from_coefficients(p.lc(), p.coeff(1), p.coeff(0));
}

UniPoly Trinomial::poly() const { return UniPoly({b, a, Rational(0), Rational(0), Rational(0), Rational(1)}); }

std::string Trinomial::str() const { return poly().str(); }

UniPoly ScaledTrinomial::poly() const {
  return UniPoly({b, a, Rational(0), Rational(0), Rational(0), lead});
}

std::string ScaledTrinomial::str() const { return poly().str(); }

std::string EquivClass::kind_name() const {
  switch (kind) {
    case ClassKind::Generic: return "generic";
    case ClassKind::Pure: return "pure";
    case ClassKind::LinearOnly: return "linear-only";
    case ClassKind::Degenerate: return "degenerate";
  }
  return "?";
}

std::string EquivClass::str() const {
  if (kind == ClassKind::Generic || kind == ClassKind::Pure) return kind_name() + "(" + value.str() + ")";
  return kind_name();
}

EquivClass equiv_class(const Trinomial& f) {
  const bool a0 = f.a.is_zero(), b0 = f.b.is_zero();
  if (a0 && b0) return {ClassKind::Degenerate, Rational(0)};
  if (b0) return {ClassKind::LinearOnly, Rational(0)};
  if (a0) return {ClassKind::Pure, Rational(fifth_power_class(f.b))};
  return {ClassKind::Generic, f.a.pow(5) / f.b.pow(4)};
}

Trinomial rescale(const Trinomial& f, const Rational& lambda) {
  if (lambda.is_zero()) throw UndefinedInput("rescaling by zero");
  return {f.a / lambda.pow(4), f.b / lambda.pow(5)};
}

TForm normalize_t_form(const Trinomial& f) {
  if (f.a.is_zero() || f.b.is_zero()) throw NotNormalizable(equiv_class(f));
  Rational t = f.a.pow(5) / f.b.pow(4);
  return {t_form(t), f.b / f.a};
}

Rational trinomial_disc(const Trinomial& f) {
  return Rational(256) * f.a.pow(5) + Rational(3125) * f.b.pow(4);
}

}  // namespace quintic
