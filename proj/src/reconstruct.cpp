#include "quintic/reconstruct.hpp"

#include "quintic/errors.hpp"

namespace quintic {

namespace {

Integer floor_of(const Rational& x) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), x.get().get_num_mpz_t(), x.get().get_den_mpz_t());
  return f;
}

}  // namespace

Rational simplest_rational_between(Rational lo, Rational hi) {
  if (hi < lo) throw UsageError("empty interval");
  if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
  if (hi.sign() < 0) return -simplest_rational_between(-hi, -lo);
  // 0 < lo <= hi. Continued-fraction expansion with a shared prefix.
  std::vector<Integer> terms;
  while (true) {
    Integer fl = floor_of(lo);
    if (Rational(fl) == lo) {
      terms.push_back(fl);
      break;
    }
    if (Rational(Integer(fl + 1)) <= hi) {
      terms.push_back(Integer(fl + 1));
      break;
    }
    terms.push_back(fl);
    Rational nlo = (hi - Rational(fl)).inverse();
    Rational nhi = (lo - Rational(fl)).inverse();
    lo = nlo;
    hi = nhi;
  }
  Rational v(terms.back());
  for (std::size_t i = terms.size() - 1; i-- > 0;) v = Rational(terms[i]) + v.inverse();
  return v;
}

std::optional<Rational> reconstruct_interval(const Rational& lo, const Rational& hi,
                                             const Integer& bound) {
  if (hi < lo || bound < 1) return std::nullopt;
  Rational c = simplest_rational_between(lo, hi);
  const Integer p = c.num(), q = c.den();
  if (q > bound) return std::nullopt;
  // Any second fraction with denominator <= bound in a convex interval
  // containing c forces one of c's Farey neighbours of order `bound` in too.
  Integer inv;
  if (q == 1) {
    inv = 0;
  } else {
    Integer pm;
    mpz_fdiv_r(pm.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    mpz_invert(inv.get_mpz_t(), pm.get_mpz_t(), q.get_mpz_t());
  }
  auto largest_congruent = [&](const Integer& r0) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), r0.get_mpz_t(), q.get_mpz_t());
    if (r == 0) r = q;
    Integer k;
    mpz_fdiv_q(k.get_mpz_t(), Integer(bound - r).get_mpz_t(), q.get_mpz_t());
    return Integer(r + k * q);
  };
  // Right neighbour: p' q - p q' = 1, q' = -p^-1 mod q.
  Integer qr = largest_congruent(Integer(-inv));
  Rational right(Integer((1 + p * qr) / q), qr);
  // Left neighbour: p q'' - p'' q = 1, q'' = p^-1 mod q.
  Integer ql = largest_congruent(inv);
  Rational left(Integer((p * ql - 1) / q), ql);
  if (right <= hi || left >= lo) return std::nullopt;
  return c;
}

std::optional<Rational> rational_reconstruct(const ComplexBall& x, const Integer& bound) {
  if (!x.meets_real_axis()) return std::nullopt;
  return reconstruct_interval(x.real_lower(), x.real_upper(), bound);
}

}  // namespace quintic
