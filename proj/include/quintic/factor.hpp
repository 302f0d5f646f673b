#pragma once

#include <utility>
#include <vector>

#include "quintic/unipoly.hpp"

namespace quintic {

/// unit * prod(factor^multiplicity) == input, factors monic irreducible over Q.
struct Factorization {
  Rational unit;
  std::vector<std::pair<UniPoly, int>> factors;

  UniPoly expand() const;
  bool has_repeated_factor() const;
  /// Exactly one factor of multiplicity one.
  bool is_irreducible() const;
};

/// Complete factorization over Q. Factors are ordered by degree, then by
/// their ascending coefficient lists compared lexicographically.
/// Throws UndefinedInput for constant input.
Factorization factor_over_Q(const UniPoly& p);

bool is_irreducible(const UniPoly& p);

/// Yun's squarefree decomposition of a monic polynomial: (part, multiplicity)
/// with pairwise coprime squarefree parts.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);

/// Factors a primitive squarefree integer polynomial of degree >= 1 over Z
/// (Zassenhaus: factor mod a good prime, Hensel-lift, recombine).
/// Returned factors are primitive with positive leading coefficient.
std::vector<std::vector<Integer>> factor_squarefree_integer(const std::vector<Integer>& f);

}  // namespace quintic
