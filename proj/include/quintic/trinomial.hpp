#pragma once

#include <string>

#include "quintic/errors.hpp"
#include "quintic/unipoly.hpp"

namespace quintic {

/// x^5 + a x + b.
struct Trinomial {
  Rational a;
  Rational b;

  /// lead x^5 + a x + b, normalized by dividing through; lead must be nonzero.
  static Trinomial from_coefficients(const Rational& lead, const Rational& a, const Rational& b);
  /// Accepts x^5 + a x + b shaped polynomials (any nonzero leading
  /// coefficient); throws UsageError otherwise.
  static Trinomial from_poly(const UniPoly& p);

  UniPoly poly() const;
  std::string str() const;
  friend bool operator==(const Trinomial&, const Trinomial&) = default;
};

/// lead x^5 + a x + b kept with its leading coefficient, as produced by
/// families whose natural form is not monic.
struct ScaledTrinomial {
  Rational lead;
  Rational a;
  Rational b;

  Trinomial monic() const { return Trinomial::from_coefficients(lead, a, b); }
  UniPoly poly() const;
  std::string str() const;
  friend bool operator==(const ScaledTrinomial&, const ScaledTrinomial&) = default;
};

enum class ClassKind { Generic, Pure, LinearOnly, Degenerate };

/// Equivalence invariant of x^5 + a x + b under x -> lambda x rescaling:
/// generic carries t = a^5/b^4, pure (a = 0) carries the fifth-power class
/// of b, linear-only is b = 0 with a != 0, degenerate is a = b = 0.
struct EquivClass {
  ClassKind kind = ClassKind::Degenerate;
  Rational value;  // t for Generic, class representative for Pure, else 0

  std::string kind_name() const;
  std::string str() const;
  friend bool operator==(const EquivClass&, const EquivClass&) = default;
};

EquivClass equiv_class(const Trinomial& f);

/// lambda^-5 f(lambda x).
Trinomial rescale(const Trinomial& f, const Rational& lambda);

/// x^5 + t x + t equivalent to the input, with the scaling witness
/// lambda = b/a: rescale(f, lambda) == form.
struct TForm {
  Trinomial form;
  Rational lambda;
};

class NotNormalizable : public DomainError {
 public:
  NotNormalizable(const EquivClass& cls)  // NOLINT
      : DomainError("trinomial has no t-form (class " + cls.str() + ")"), cls_(cls) {}
  const EquivClass& equiv_class() const { return cls_; }

 private:
  EquivClass cls_;
};

TForm normalize_t_form(const Trinomial& f);

/// 256 a^5 + 3125 b^4, the discriminant of x^5 + a x + b.
Rational trinomial_disc(const Trinomial& f);

/// x^5 + t x + t.
inline Trinomial t_form(const Rational& t) { return {t, t}; }

}  // namespace quintic
