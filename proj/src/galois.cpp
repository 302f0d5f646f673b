#include "quintic/galois.hpp"

#include <algorithm>

#include "quintic/factor.hpp"
#include "quintic/integer_factor.hpp"
#include "quintic/modpoly.hpp"
#include "quintic/resultant.hpp"

namespace quintic {

const char* to_string(GaloisGroup g) {
  switch (g) {
    case GaloisGroup::C5: return "C5";
    case GaloisGroup::D10: return "D10";
    case GaloisGroup::F20: return "F20";
    case GaloisGroup::A5: return "A5";
    case GaloisGroup::S5: return "S5";
  }
  return "?";
}

std::string cycle_type_str(const CycleType& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return "(" + s + ")";
}

std::map<CycleType, int> cycle_type_census(const UniPoly& f, long prime_bound, int* good_primes) {
  std::vector<Integer> z = f.primitive_integer();
  std::map<CycleType, int> census;
  int good = 0;
  for (long p = 2; p <= prime_bound; ++p) {
    if (!is_prime_u64(static_cast<std::uint64_t>(p))) continue;
    if (mpz_divisible_ui_p(z.back().get_mpz_t(), static_cast<unsigned long>(p))) continue;
    ModPoly fm = ModPoly::from_integers(static_cast<std::uint64_t>(p), z);
    if (!is_squarefree_mod(fm)) continue;
    CycleType t = factor_degrees_mod(fm);
    std::sort(t.rbegin(), t.rend());
    ++census[t];
    ++good;
  }
  if (good_primes) *good_primes = good;
  return census;
}

bool group_has_cycle_type(GaloisGroup g, const CycleType& t) {
  const CycleType id{1, 1, 1, 1, 1}, five{5}, dbl{2, 2, 1}, four{4, 1}, three{3, 1, 1},
      six{3, 2}, two{2, 1, 1, 1};
  auto in = [&](std::initializer_list<CycleType> xs) {
    return std::find(xs.begin(), xs.end(), t) != xs.end();
  };
  switch (g) {
    case GaloisGroup::C5: return in({id, five});
    case GaloisGroup::D10: return in({id, five, dbl});
    case GaloisGroup::F20: return in({id, five, dbl, four});
    case GaloisGroup::A5: return in({id, five, dbl, three});
    case GaloisGroup::S5: return in({id, five, dbl, four, three, six, two});
  }
  return false;
}

GaloisGuess galois_type_heuristic(const UniPoly& f, long prime_bound) {
  if (f.degree() != 5) throw UsageError("galois_type_heuristic expects a quintic");
  if (!is_irreducible(f)) throw UsageError("galois_type_heuristic: reducible input " + f.str());
  GaloisGuess g;
  g.evidence.prime_bound = prime_bound;
  g.evidence.discriminant_is_square = is_rational_square(discriminant(f));
  g.evidence.cycle_types = cycle_type_census(f, prime_bound, &g.evidence.good_primes);
  auto all_in = [&](GaloisGroup grp) {
    return std::all_of(g.evidence.cycle_types.begin(), g.evidence.cycle_types.end(),
                       [&](const auto& kv) { return group_has_cycle_type(grp, kv.first); });
  };
  // Even groups: C5 < D10 < A5. Groups with odd permutations: F20 < S5.
  const auto order = g.evidence.discriminant_is_square
                         ? std::vector<GaloisGroup>{GaloisGroup::C5, GaloisGroup::D10, GaloisGroup::A5}
                         : std::vector<GaloisGroup>{GaloisGroup::F20, GaloisGroup::S5};
  g.group = order.back();
  for (GaloisGroup grp : order)
    if (all_in(grp)) {
      g.group = grp;
      break;
    }
  return g;
}

GaloisGuess galois_type_heuristic(const Trinomial& f, long prime_bound) {
  return galois_type_heuristic(f.poly(), prime_bound);
}

}  // namespace quintic
