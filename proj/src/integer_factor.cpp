#include "quintic/integer_factor.hpp"

#include <algorithm>
#include <map>

#include "quintic/errors.hpp"

namespace quintic {

namespace {

constexpr unsigned long kTrialLimit = 100000;

Integer pollard_rho(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return Integer(2);
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1;
    auto step = [&](Integer& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    while (d == 1) {
      step(x);
      step(y);
      step(y);
      Integer diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void split(const Integer& n, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40) > 0) {
    ++out[n];
    return;
  }
  Integer d = pollard_rho(n);
  split(d, out);
  split(n / d, out);
}

}  // namespace

std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n0) {
  if (n0 == 0) throw UndefinedInput("factoring zero");
  Integer n = abs(n0);
  std::map<Integer, unsigned> found;
  for (unsigned long p = 2; p < kTrialLimit && n > 1; p += (p == 2 ? 1 : 2)) {
    if (static_cast<double>(p) * static_cast<double>(p) > n.get_d()) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      ++found[Integer(p)];
    }
  }
  if (n > 1) split(n, found);
  return {found.begin(), found.end()};
}

Integer fifth_power_class(const Rational& x) {
  if (x.is_zero()) throw UndefinedInput("fifth_power_class(0)");
  Integer rep = 1;
  for (const auto& [p, e] : factor_integer(x.num())) rep *= ipow(p, e % 5);
  for (const auto& [p, e] : factor_integer(x.den())) rep *= ipow(p, (5 - e % 5) % 5);
  return rep;
}

Integer squarefree_class(const Rational& x) {
  if (x.is_zero()) throw UndefinedInput("squarefree_class(0)");
  Integer rep = x.sign();
  for (const auto& [p, e] : factor_integer(x.num() * x.den()))
    if (e % 2) rep *= p;
  return rep;
}

bool is_rational_square(const Rational& x) {
  if (x.sign() < 0) return false;
  if (x.is_zero()) return true;
  return mpz_perfect_square_p(x.num().get_mpz_t()) && mpz_perfect_square_p(x.den().get_mpz_t());
}

}  // namespace quintic
