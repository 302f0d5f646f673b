#pragma once

#include "quintic/unipoly.hpp"

namespace quintic {

/// Res(p, q) = lc(p)^deg q * prod over roots r of p of q(r).
/// Throws UndefinedInput when both inputs are zero; a single zero input
/// against a nonconstant polynomial gives 0.
Rational resultant(const UniPoly& p, const UniPoly& q);

/// (-1)^(n(n-1)/2) Res(p, p') / lc(p). Throws UndefinedInput for constants.
Rational discriminant(const UniPoly& p);

}  // namespace quintic
