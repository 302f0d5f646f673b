#include "quintic/modpoly.hpp"

#include <algorithm>

#include "quintic/errors.hpp"

namespace quintic {

ModPoly::ModPoly(std::uint64_t p, std::vector<std::uint64_t> c) : p_(p), c_(std::move(c)) {
  for (auto& x : c_) x %= p_;
  trim();
}

ModPoly ModPoly::from_integers(std::uint64_t p, const std::vector<Integer>& c) {
  std::vector<std::uint64_t> v(c.size());
  Integer r, mp(static_cast<unsigned long>(p));
  for (std::size_t i = 0; i < c.size(); ++i) {
    mpz_fdiv_r(r.get_mpz_t(), c[i].get_mpz_t(), mp.get_mpz_t());
    v[i] = r.get_ui();
  }
  return ModPoly(p, std::move(v));
}

ModPoly ModPoly::x_power(std::uint64_t p, int k) {
  std::vector<std::uint64_t> v(static_cast<std::size_t>(k) + 1, 0);
  v.back() = 1;
  return ModPoly(p, std::move(v));
}

void ModPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::uint64_t ModPoly::mul(std::uint64_t a, std::uint64_t b) const {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p_);
}

std::uint64_t ModPoly::inv(std::uint64_t a) const {
  // Fermat; p is prime.
  std::uint64_t r = 1, b = a % p_, e = p_ - 2;
  if (b == 0) throw UndefinedInput("inverse of zero mod p");
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

ModPoly ModPoly::monic() const {
  if (c_.empty()) return *this;
  std::uint64_t i = inv(lc());
  ModPoly r = *this;
  for (auto& x : r.c_) x = mul(x, i);
  return r;
}

ModPoly ModPoly::derivative() const {
  ModPoly r(p_);
  if (c_.size() <= 1) return r;
  r.c_.resize(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = mul(c_[i], i % p_);
  r.trim();
  return r;
}

ModPoly ModPoly::operator+(const ModPoly& o) const {
  ModPoly r(p_);
  r.c_.assign(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.c_.size(); ++i) {
    std::uint64_t a = i < c_.size() ? c_[i] : 0, b = i < o.c_.size() ? o.c_[i] : 0;
    std::uint64_t s = a + b;
    r.c_[i] = s >= p_ ? s - p_ : s;
  }
  r.trim();
  return r;
}

ModPoly ModPoly::operator-(const ModPoly& o) const {
  ModPoly r(p_);
  r.c_.assign(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.c_.size(); ++i) {
    std::uint64_t a = i < c_.size() ? c_[i] : 0, b = i < o.c_.size() ? o.c_[i] : 0;
    r.c_[i] = a >= b ? a - b : a + (p_ - b);
  }
  r.trim();
  return r;
}

ModPoly ModPoly::operator*(const ModPoly& o) const {
  ModPoly r(p_);
  if (c_.empty() || o.c_.empty()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      std::uint64_t s = r.c_[i + j] + mul(c_[i], o.c_[j]);
      r.c_[i + j] = s >= p_ ? s - p_ : s;
    }
  r.trim();
  return r;
}

void ModPoly::divmod(const ModPoly& d, ModPoly* q, ModPoly* r) const {
  if (d.is_zero()) throw UndefinedInput("division by zero polynomial mod p");
  std::vector<std::uint64_t> rem = c_;
  std::vector<std::uint64_t> quo;
  if (rem.size() >= d.c_.size()) {
    const std::size_t dd = d.c_.size() - 1;
    quo.assign(rem.size() - dd, 0);
    std::uint64_t il = inv(d.lc());
    for (std::size_t k = quo.size(); k-- > 0;) {
      std::uint64_t c = mul(rem[k + dd], il);
      quo[k] = c;
      if (!c) continue;
      for (std::size_t j = 0; j <= dd; ++j) {
        std::uint64_t s = mul(c, d.c_[j]);
        std::uint64_t& t = rem[k + j];
        t = t >= s ? t - s : t + (p_ - s);
      }
    }
    rem.resize(dd);
  }
  if (q) *q = ModPoly(p_, std::move(quo));
  if (r) *r = ModPoly(p_, std::move(rem));
}

ModPoly ModPoly::operator%(const ModPoly& d) const {
  ModPoly r(p_);
  divmod(d, nullptr, &r);
  return r;
}

ModPoly ModPoly::operator/(const ModPoly& d) const {
  ModPoly q(p_);
  divmod(d, &q, nullptr);
  return q;
}

ModPoly gcd(ModPoly a, ModPoly b) {
  while (!b.is_zero()) {
    ModPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ModPoly xgcd(const ModPoly& a, const ModPoly& b, ModPoly& s, ModPoly& t) {
  const std::uint64_t p = a.modulus();
  ModPoly r0 = a, r1 = b;
  ModPoly s0(p, {1}), s1(p), t0(p), t1(p, {1});
  while (!r1.is_zero()) {
    ModPoly q = r0 / r1;
    ModPoly r2 = r0 - q * r1;
    ModPoly s2 = s0 - q * s1;
    ModPoly t2 = t0 - q * t1;
    r0 = std::move(r1); r1 = std::move(r2);
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  std::uint64_t il = r0.inv(r0.lc());
  ModPoly unit(p, {il});
  s = s0 * unit;
  t = t0 * unit;
  return r0 * unit;
}

ModPoly powmod(ModPoly base, const Integer& e, const ModPoly& m) {
  const std::uint64_t p = m.modulus();
  ModPoly result(p, {1});
  base = base % m;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % m;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * base) % m;
  }
  return result;
}

bool is_squarefree_mod(const ModPoly& f) {
  if (f.degree() < 1) return true;
  ModPoly d = f.derivative();
  if (d.is_zero()) return false;
  return gcd(f, d).degree() == 0;
}

std::vector<std::pair<ModPoly, int>> distinct_degree_factor(const ModPoly& f0) {
  const std::uint64_t p = f0.modulus();
  std::vector<std::pair<ModPoly, int>> out;
  ModPoly f = f0.monic();
  ModPoly x = ModPoly::x_power(p, 1);
  ModPoly h = x % f;
  Integer pz(static_cast<unsigned long>(p));
  int d = 0;
  while (f.degree() >= 2 * (d + 1)) {
    ++d;
    h = powmod(h, pz, f);
    ModPoly g = gcd(f, h - x);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f, f.degree());
  return out;
}

namespace {

void equal_degree_split(const ModPoly& f, int d, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const std::uint64_t p = f.modulus();
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
  while (true) {
    std::vector<std::uint64_t> r(static_cast<std::size_t>(f.degree()));
    for (auto& c : r) c = coeff(rng);
    ModPoly a(p, std::move(r));
    if (a.degree() < 1) continue;
    ModPoly g = gcd(f, a);
    if (g.degree() == 0) {
      ModPoly b = powmod(a, e, f) - ModPoly(p, {1});
      g = gcd(f, b);
    }
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(f / g, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<ModPoly> factor_squarefree_mod(const ModPoly& f, std::mt19937_64& rng) {
  if (f.modulus() == 2) throw UsageError("factor_squarefree_mod needs an odd prime");
  std::vector<ModPoly> out;
  for (auto& [g, d] : distinct_degree_factor(f)) equal_degree_split(g.monic(), d, rng, out);
  std::sort(out.begin(), out.end(), [](const ModPoly& a, const ModPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.coeffs() < b.coeffs();
  });
  return out;
}

std::vector<int> factor_degrees_mod(const ModPoly& f) {
  std::vector<int> degs;
  for (auto& [g, d] : distinct_degree_factor(f))
    for (int k = 0; k < g.degree() / d; ++k) degs.push_back(d);
  std::sort(degs.begin(), degs.end());
  return degs;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n && q < 1000; ++q)
    if (n % q == 0) return n == q;
  Integer z(static_cast<unsigned long>(n));
  return mpz_probab_prime_p(z.get_mpz_t(), 30) > 0;
}

}  // namespace quintic
