#pragma once

#include <map>
#include <string>
#include <vector>

#include "quintic/trinomial.hpp"

namespace quintic {

/// Transitive subgroups of S5 up to conjugacy.
enum class GaloisGroup { C5, D10, F20, A5, S5 };

const char* to_string(GaloisGroup g);

/// Factorization degree pattern of f mod p, descending (e.g. {4, 1}).
using CycleType = std::vector<int>;

struct GaloisEvidence {
  bool discriminant_is_square = false;
  long prime_bound = 0;
  int good_primes = 0;
  /// How often each cycle type was seen among good primes.
  std::map<CycleType, int> cycle_types;
};

/// Identification labelled heuristic: the smallest group compatible with the
/// discriminant square class and the observed Frobenius cycle types. It is a
/// lower bound that becomes reliable only as prime_bound grows.
struct GaloisGuess {
  GaloisGroup group = GaloisGroup::S5;
  GaloisEvidence evidence;
  static constexpr bool heuristic = true;
};

/// Cycle types of Frobenius over good primes p <= prime_bound (p not
/// dividing the leading coefficient or the discriminant of the primitive
/// integer model).
std::map<CycleType, int> cycle_type_census(const UniPoly& f, long prime_bound, int* good_primes = nullptr);

/// Whether a group of the given kind contains elements of this cycle type.
bool group_has_cycle_type(GaloisGroup g, const CycleType& t);

/// Throws UsageError when f is reducible over Q.
GaloisGuess galois_type_heuristic(const UniPoly& f, long prime_bound);
GaloisGuess galois_type_heuristic(const Trinomial& f, long prime_bound);

std::string cycle_type_str(const CycleType& t);

}  // namespace quintic
