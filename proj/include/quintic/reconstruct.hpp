#pragma once

#include <optional>

#include "quintic/ball.hpp"

namespace quintic {

/// Rational with the smallest denominator in [lo, hi] (lo <= hi), found by
/// continued-fraction descent.
Rational simplest_rational_between(Rational lo, Rational hi);

/// The unique p/q with q <= denominator_bound in [lo, hi]; nullopt when there
/// is none or more than one.
std::optional<Rational> reconstruct_interval(const Rational& lo, const Rational& hi,
                                             const Integer& denominator_bound);

/// Lifts a numerical value to an exact rational. Requires the ball to meet
/// the real axis (else nullopt) and applies reconstruct_interval to its real
/// projection.
std::optional<Rational> rational_reconstruct(const ComplexBall& x,
                                             const Integer& denominator_bound);

}  // namespace quintic
