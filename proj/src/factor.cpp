#include "quintic/factor.hpp"

#include <algorithm>
#include <random>

#include "quintic/errors.hpp"
#include "quintic/modpoly.hpp"

namespace quintic {

namespace {

using ZPoly = std::vector<Integer>;

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

void zreduce(ZPoly& a, const Integer& m) {
  for (auto& x : a) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  ztrim(a);
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  zreduce(r, m);
  return r;
}

ZPoly zadd(const ZPoly& a, const ZPoly& b, const Integer& m, int sign = 1) {
  ZPoly r(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += sign * b[i];
  zreduce(r, m);
  return r;
}

/// Division by a monic divisor modulo m.
void zdivmod_monic(const ZPoly& a, const ZPoly& d, const Integer& m, ZPoly& q, ZPoly& r) {
  r = a;
  zreduce(r, m);
  q.clear();
  if (r.size() < d.size()) return;
  const std::size_t dd = d.size() - 1;
  q.assign(r.size() - dd, Integer(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    Integer c = r[k + dd];
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) r[k + j] -= c * d[j];
  }
  r.resize(dd);
  zreduce(r, m);
  ztrim(q);
}

ZPoly from_mod(const ModPoly& a) {
  ZPoly r;
  for (auto c : a.coeffs()) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

/// Quadratic Hensel lifting of f = g*h (mod p) with h monic, `doublings`
/// times, so that the result holds modulo p^(2^doublings). The leading
/// coefficient of f must be a unit mod p.
void hensel_two(const ZPoly& f, ModPoly g0, ModPoly h0, int doublings, ZPoly& g_out,
                ZPoly& h_out) {
  const std::uint64_t p = g0.modulus();
  ModPoly s0(p), t0(p);
  xgcd(g0, h0, s0, t0);
  ZPoly g = from_mod(g0), h = from_mod(h0), s = from_mod(s0), t = from_mod(t0);
  Integer m(static_cast<unsigned long>(p));
  for (int i = 0; i < doublings; ++i) {
    m *= m;
    ZPoly e = zadd(f, zmul(g, h, m), m, -1);
    ZPoly q, r;
    zdivmod_monic(zmul(s, e, m), h, m, q, r);
    ZPoly g1 = zadd(zadd(g, zmul(t, e, m), m), zmul(q, g, m), m);
    ZPoly h1 = zadd(h, r, m);
    ZPoly b = zadd(zadd(zmul(s, g1, m), zmul(t, h1, m), m), ZPoly{Integer(1)}, m, -1);
    ZPoly c, d;
    zdivmod_monic(zmul(s, b, m), h1, m, c, d);
    s = zadd(s, d, m, -1);
    t = zadd(zadd(t, zmul(t, b, m), m, -1), zmul(c, g1, m), m, -1);
    g = std::move(g1);
    h = std::move(h1);
  }
  g_out = std::move(g);
  h_out = std::move(h);
}

/// Lifts f == lc(f) * prod(factors) (mod p) to monic factors modulo
/// p^(2^doublings).
void hensel_multi(const ZPoly& f, const std::vector<ModPoly>& factors, int doublings,
                  const Integer& modulus, std::vector<ZPoly>& out) {
  const std::uint64_t p = factors.front().modulus();
  if (factors.size() == 1) {
    // Monic associate of f modulo the final modulus.
    Integer inv;
    mpz_invert(inv.get_mpz_t(), f.back().get_mpz_t(), modulus.get_mpz_t());
    ZPoly r = f;
    for (auto& c : r) c *= inv;
    zreduce(r, modulus);
    out.push_back(std::move(r));
    return;
  }
  const std::size_t half = factors.size() / 2;
  std::vector<ModPoly> left(factors.begin(), factors.begin() + static_cast<long>(half));
  std::vector<ModPoly> right(factors.begin() + static_cast<long>(half), factors.end());
  ModPoly fm = ModPoly::from_integers(p, f);
  ModPoly h0(p, {1});
  for (const auto& r : right) h0 = h0 * r;
  ModPoly g0 = ModPoly(p, {fm.lc()});
  for (const auto& l : left) g0 = g0 * l;
  ZPoly g, h;
  hensel_two(f, g0, h0, doublings, g, h);
  hensel_multi(g, left, doublings, modulus, out);
  hensel_multi(h, right, doublings, modulus, out);
}

ZPoly symmetric(ZPoly a, const Integer& m) {
  Integer half = m / 2;
  for (auto& c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  ztrim(a);
  return a;
}

ZPoly primitive_part(ZPoly a) {
  Integer g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0) return a;
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

/// Exact division test over Z; on success stores the quotient.
bool zdivides(const ZPoly& d, const ZPoly& f, ZPoly& quotient) {
  auto [q, r] = UniPoly::from_integers(f).divmod(UniPoly::from_integers(d));
  if (!r.is_zero()) return false;
  quotient.clear();
  for (const auto& c : q.coeffs()) {
    if (!c.is_integer()) return false;
    quotient.push_back(c.num());
  }
  return true;
}

bool less_coeffs(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(),
                                      b.coeffs().end());
}

}  // namespace

std::vector<ZPoly> factor_squarefree_integer(const ZPoly& f_in) {
  ZPoly f = primitive_part(f_in);
  const int n = static_cast<int>(f.size()) - 1;
  if (n < 1) throw UndefinedInput("factoring a constant");
  if (n == 1) return {f};

  // Pick among a few good primes the one giving the fewest modular factors.
  std::uint64_t best_p = 0;
  std::size_t best_count = 0;
  int good_seen = 0;
  for (std::uint64_t p = 3; good_seen < 5 && p < 100000; p += 2) {
    if (!is_prime_u64(p)) continue;
    if (mpz_divisible_ui_p(f.back().get_mpz_t(), static_cast<unsigned long>(p))) continue;
    ModPoly fm = ModPoly::from_integers(p, f);
    if (!is_squarefree_mod(fm)) continue;
    ++good_seen;
    std::size_t count = factor_degrees_mod(fm).size();
    if (best_p == 0 || count < best_count) {
      best_p = p;
      best_count = count;
    }
    if (count == 1) break;
  }
  if (best_p == 0) throw Error("no good prime found for factorization");
  if (best_count == 1) return {f};

  std::mt19937_64 rng(0x5eed5eedULL ^ best_p);
  ModPoly fm = ModPoly::from_integers(best_p, f);
  std::vector<ModPoly> modular = factor_squarefree_mod(fm.monic(), rng);

  // Coefficient bound for any factor scaled by lc(f): |lc| * 2^n * ||f||_2.
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  Integer bound = abs(f.back()) * ipow(Integer(2), static_cast<unsigned long>(n)) * norm;
  Integer pz(static_cast<unsigned long>(best_p));
  Integer modulus = pz;
  int doublings = 0;
  while (modulus <= 2 * bound) {
    modulus *= modulus;
    ++doublings;
  }

  std::vector<ZPoly> lifted;
  hensel_multi(f, modular, doublings, modulus, lifted);

  std::vector<ZPoly> result;
  std::vector<ZPoly> remaining = lifted;
  ZPoly current = f;
  std::size_t s = 1;
  while (2 * s <= remaining.size()) {
    bool found = false;
    const std::size_t r = remaining.size();
    std::vector<int> pick(r, 0);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(s), 1);
    do {
      ZPoly g{current.back()};
      for (std::size_t i = 0; i < r; ++i)
        if (pick[i]) g = zmul(g, remaining[i], modulus);
      ZPoly cand = primitive_part(symmetric(g, modulus));
      ZPoly quotient;
      if (cand.size() > 1 && zdivides(cand, current, quotient)) {
        result.push_back(cand);
        current = primitive_part(quotient);
        std::vector<ZPoly> rest;
        for (std::size_t i = 0; i < r; ++i)
          if (!pick[i]) rest.push_back(remaining[i]);
        remaining = std::move(rest);
        found = true;
        break;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    if (!found) ++s;
  }
  result.push_back(current);
  return result;
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p0) {
  std::vector<std::pair<UniPoly, int>> out;
  UniPoly p = p0.monic();
  if (p.degree() < 1) return out;
  UniPoly dp = p.derivative();
  UniPoly b = gcd(p, dp);
  UniPoly c = p / b;
  UniPoly d = dp / b - c.derivative();
  int i = 1;
  while (c.degree() > 0) {
    UniPoly a = gcd(c, d);
    if (a.degree() > 0) out.emplace_back(a, i);
    c = c / a;
    d = d / a - c.derivative();
    ++i;
  }
  return out;
}

Factorization factor_over_Q(const UniPoly& p) {
  if (p.degree() < 1) throw UndefinedInput("factor_over_Q of a constant polynomial");
  Factorization out;
  out.unit = p.lc();
  for (const auto& [part, mult] : squarefree_decomposition(p)) {
    for (const auto& z : factor_squarefree_integer(part.primitive_integer()))
      out.factors.emplace_back(UniPoly::from_integers(z).monic(), mult);
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (a.first == b.first) return a.second < b.second;
    return less_coeffs(a.first, b.first);
  });
  return out;
}

UniPoly Factorization::expand() const {
  UniPoly r = UniPoly::constant(unit);
  for (const auto& [f, m] : factors) r *= pow(f, m);
  return r;
}

bool Factorization::has_repeated_factor() const {
  return std::any_of(factors.begin(), factors.end(), [](const auto& f) { return f.second > 1; });
}

bool Factorization::is_irreducible() const { return factors.size() == 1 && factors[0].second == 1; }

bool is_irreducible(const UniPoly& p) { return factor_over_Q(p).is_irreducible(); }

}  // namespace quintic
