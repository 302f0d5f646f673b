#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "quintic/rational.hpp"

namespace quintic {

/// Dense polynomial over Z/p for a word-sized prime p. Coefficients are kept
/// in [0, p) and trimmed.
class ModPoly {
 public:
  ModPoly(std::uint64_t p) : p_(p) {}  // NOLINT
  ModPoly(std::uint64_t p, std::vector<std::uint64_t> c);
  /// Reduces integer coefficients modulo p.
  static ModPoly from_integers(std::uint64_t p, const std::vector<Integer>& c);
  static ModPoly x_power(std::uint64_t p, int k);

  std::uint64_t modulus() const { return p_; }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  std::uint64_t lc() const { return c_.empty() ? 0 : c_.back(); }

  ModPoly monic() const;
  ModPoly derivative() const;

  ModPoly operator+(const ModPoly& o) const;
  ModPoly operator-(const ModPoly& o) const;
  ModPoly operator*(const ModPoly& o) const;
  ModPoly operator%(const ModPoly& d) const;
  ModPoly operator/(const ModPoly& d) const;
  bool operator==(const ModPoly& o) const { return p_ == o.p_ && c_ == o.c_; }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t inv(std::uint64_t a) const;

 private:
  void trim();
  void divmod(const ModPoly& d, ModPoly* q, ModPoly* r) const;
  std::uint64_t p_;
  std::vector<std::uint64_t> c_;
};

ModPoly gcd(ModPoly a, ModPoly b);
/// base^e mod m.
ModPoly powmod(ModPoly base, const Integer& e, const ModPoly& m);
/// Extended gcd: returns g = gcd(a, b) monic, with s a + t b = g.
ModPoly xgcd(const ModPoly& a, const ModPoly& b, ModPoly& s, ModPoly& t);

/// True when f (nonzero, degree >= 1) has no repeated factor over F_p.
bool is_squarefree_mod(const ModPoly& f);

/// Distinct-degree factorization of a monic squarefree polynomial: pairs of
/// (product of all irreducible factors of degree d, d).
std::vector<std::pair<ModPoly, int>> distinct_degree_factor(const ModPoly& f);

/// Complete factorization of a monic squarefree polynomial over F_p (p odd)
/// into monic irreducibles, sorted by degree then coefficients. Splitting is
/// Cantor-Zassenhaus driven by the supplied generator.
std::vector<ModPoly> factor_squarefree_mod(const ModPoly& f, std::mt19937_64& rng);

/// Degrees of the irreducible factors of a squarefree f over F_p, ascending.
/// This is the cycle type of Frobenius at p for a good prime.
std::vector<int> factor_degrees_mod(const ModPoly& f);

bool is_prime_u64(std::uint64_t n);

}  // namespace quintic
