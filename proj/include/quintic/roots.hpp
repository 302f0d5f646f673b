#pragma once

#include <vector>

#include "quintic/ball.hpp"
#include "quintic/unipoly.hpp"

namespace quintic {

/// Certified isolation of all complex roots of a squarefree polynomial.
///
/// Returns deg(p) pairwise disjoint balls, each containing exactly one root,
/// with radius at most 2^-precision_bits * max(1, |root|). Order: real roots
/// ascending (imaginary midpoint exactly 0), then conjugate pairs sorted by
/// the imaginary part of the upper member, each pair listed upper first. The
/// lower member is the exact conjugate of the upper one.
///
/// Approximations come from Aberth iteration; each disk is the inclusion
/// disk of radius n |p(z_i) / prod_{j != i} (z_i - z_j)|, which is rigorous
/// once the disks are pairwise disjoint. Working precision is doubled until
/// that holds; PrecisionExhausted is thrown otherwise (e.g. repeated roots).
std::vector<ComplexBall> complex_roots(const UniPoly& p, long precision_bits);

/// Ball enclosure of p(z).
ComplexBall eval_ball(const UniPoly& p, const ComplexBall& z);

}  // namespace quintic
