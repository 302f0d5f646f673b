#pragma once

#include <utility>
#include <vector>

#include "quintic/rational.hpp"

namespace quintic {

/// Prime factorization of |n| (n != 0): ascending (prime, exponent) pairs.
/// Trial division up to 10^5, then Pollard rho on composite cofactors.
std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n);

/// Canonical representative of x modulo nonzero rational fifth powers: the
/// positive integer whose prime exponents are those of x reduced into 0..4.
/// Since -1 = (-1)^5, the sign of x is absorbed. Throws UndefinedInput for 0.
Integer fifth_power_class(const Rational& x);

/// Squarefree integer d with x = d * (rational square); sign kept.
/// Throws UndefinedInput for 0.
Integer squarefree_class(const Rational& x);

/// True when x is the square of a rational.
bool is_rational_square(const Rational& x);

}  // namespace quintic
