#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "quintic/rational.hpp"

namespace quintic {

/// Dense univariate polynomial over Q. coeffs()[i] is the coefficient of x^i.
/// The coefficient vector is kept trimmed: the zero polynomial is empty and
/// otherwise the last entry is nonzero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<Rational> coeffs);

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, int degree);
  /// x - root
  static UniPoly linear_root(const Rational& root);

  /// Parses a comma-separated list of "p/q" coefficients, ascending degree.
  static UniPoly parse_coeffs(const std::string& text);

  const std::vector<Rational>& coeffs() const { return c_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  /// Coefficient of x^i (zero past the degree).
  Rational coeff(int i) const;
  Rational lc() const;

  Rational eval(const Rational& x) const;
  UniPoly derivative() const;
  UniPoly monic() const;
  UniPoly scaled(const Rational& s) const;
  /// p(s x)
  UniPoly compose_scale(const Rational& s) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator-(const UniPoly& a) { return a.scaled(Rational(-1)); }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division; throws UndefinedInput when dividing by zero.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
  UniPoly operator%(const UniPoly& d) const { return divmod(d).second; }
  UniPoly operator/(const UniPoly& d) const { return divmod(d).first; }

  /// Denominator-cleared primitive integer form: *this == content * result,
  /// with result having positive leading coefficient and unit content.
  std::vector<Integer> primitive_integer(Rational* content = nullptr) const;
  static UniPoly from_integers(const std::vector<Integer>& c);

  /// Human readable, e.g. "x^5 - 5*x + 12".
  std::string str() const;
  /// Comma-separated ascending coefficients, the inverse of parse_coeffs.
  std::string coeff_str() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

UniPoly gcd(UniPoly a, UniPoly b);
UniPoly pow(const UniPoly& p, int e);

std::ostream& operator<<(std::ostream& os, const UniPoly& p);

}  // namespace quintic
