#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "quintic/rational.hpp"
#include "quintic/unipoly.hpp"

namespace quintic {

/// Sparse multivariate polynomial over Q in at most kMaxVars variables.
/// Variables are addressed by index; names are only used for printing.
class MPoly {
 public:
  static constexpr int kMaxVars = 6;
  using Exponents = std::array<std::uint8_t, kMaxVars>;

  MPoly() = default;
  explicit MPoly(int nvars) : nvars_(nvars) {}
  static MPoly constant(int nvars, const Rational& c);
  static MPoly variable(int nvars, int index);
  /// c * prod x_i^e_i
  static MPoly term(int nvars, const Rational& c, std::initializer_list<int> exps);

  int nvars() const { return nvars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;
  /// -1 when zero or not homogeneous.
  int homogeneous_degree() const;
  int degree_in(int var) const;
  Rational coeff(const Exponents& e) const;

  Rational eval(std::span<const Rational> x) const;
  /// Replace variable `var` by `value` (a polynomial in the same variables).
  MPoly substitute(int var, const MPoly& value) const;
  /// Evaluate some variables at rationals, keeping the others symbolic.
  MPoly partial_eval(int var, const Rational& value) const;
  /// Coefficients of powers of `var`: result[k] is the coefficient of var^k.
  std::vector<MPoly> coefficients_in(int var) const;
  /// Exact division by var^k (throws if not divisible).
  MPoly divide_by_variable(int var, int k = 1) const;
  /// Drops variable `var` (must not occur) and renumbers the rest.
  MPoly drop_variable(int var) const;
  /// Univariate view when only `var` occurs.
  UniPoly to_univariate(int var) const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Rational& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const MPoly& b) { return a *= b; }
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
  friend MPoly operator-(MPoly a) { return a *= Rational(-1); }
  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Some c with *this == c * other, if one exists.
  bool proportional_to(const MPoly& other, Rational* ratio = nullptr) const;

  std::string str(const std::vector<std::string>& names) const;

 private:
  void add_term(const Exponents& e, const Rational& c);
  int nvars_ = 0;
  std::map<Exponents, Rational> terms_;
};

MPoly pow(const MPoly& p, int e);

/// Resultant with respect to `var` via the Sylvester determinant (cofactor
/// expansion; intended for small degrees in `var`).
MPoly resultant_in(int var, const MPoly& p, const MPoly& q);

}  // namespace quintic
