#include "quintic/elliptic.hpp"

#include "quintic/integer_factor.hpp"

namespace quintic {

Rational WeierstrassCurve::b2() const { return a1 * a1 + Rational(4) * a2; }
Rational WeierstrassCurve::b4() const { return Rational(2) * a4 + a1 * a3; }
Rational WeierstrassCurve::b6() const { return a3 * a3 + Rational(4) * a6; }
Rational WeierstrassCurve::b8() const {
  return a1 * a1 * a6 + Rational(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
}
Rational WeierstrassCurve::c4() const { return b2() * b2() - Rational(24) * b4(); }
Rational WeierstrassCurve::c6() const {
  const Rational x = b2();
  return -x * x * x + Rational(36) * x * b4() - Rational(216) * b6();
}
Rational WeierstrassCurve::discriminant() const {
  const Rational B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
  return -B2 * B2 * B8 - Rational(8) * B4 * B4 * B4 - Rational(27) * B6 * B6 + Rational(9) * B2 * B4 * B6;
}

std::string WeierstrassCurve::str() const {
  return "[" + a1.str() + "," + a2.str() + "," + a3.str() + "," + a4.str() + "," + a6.str() + "]";
}

Rational j_invariant(const WeierstrassCurve& e) {
  const Rational disc = e.discriminant();
  if (disc.is_zero()) throw DomainError("j_invariant: singular curve " + e.str());
  return e.c4().pow(3) / disc;
}

WeierstrassCurve quadratic_twist(const WeierstrassCurve& e, const Rational& d) {
  if (d.is_zero()) throw DomainError("quadratic_twist: d = 0");
  return WeierstrassCurve::short_form(Rational(-27) * e.c4() * d * d, Rational(-54) * e.c6() * d * d * d);
}

namespace {

// r = u^k for some rational u, k even.
bool is_even_power(const Rational& r, unsigned long k) {
  if (r.sign() <= 0) return false;
  Integer n = r.num(), d = r.den();
  return mpz_root(n.get_mpz_t(), n.get_mpz_t(), k) && mpz_root(d.get_mpz_t(), d.get_mpz_t(), k);
}

}  // namespace

bool isomorphic_over_Q(const WeierstrassCurve& e1, const WeierstrassCurve& e2) {
  // c4' = u^4 c4 and c6' = u^6 c6 for some rational u != 0.
  const Rational p4 = e1.c4(), p6 = e1.c6(), q4 = e2.c4(), q6 = e2.c6();
  if (p4.is_zero() != q4.is_zero() || p6.is_zero() != q6.is_zero()) return false;
  if (p4.is_zero()) return is_even_power(q6 / p6, 6);
  if (p6.is_zero()) return is_even_power(q4 / p4, 4);
  const Rational u2 = (q6 / p6) / (q4 / p4);
  return q4 / p4 == u2 * u2 && is_rational_square(u2);
}

std::optional<Integer> quadratic_twist_factor(const WeierstrassCurve& e1, const WeierstrassCurve& e2) {
  const Rational j1 = j_invariant(e1), j2 = j_invariant(e2);
  if (j1.is_zero() || j1 == Rational(1728))
    throw UnsupportedJ("quadratic_twist_factor: j = " + j1.str() + " admits higher-order twists");
  if (j1 != j2) return std::nullopt;
  const Rational d = (e2.c6() / e1.c6()) * (e1.c4() / e2.c4());
  const Integer cls = squarefree_class(d);
  if (!isomorphic_over_Q(quadratic_twist(e1, Rational(cls)), e2))
    throw DomainError("quadratic_twist_factor: twist verification failed");
  return cls;
}

std::string ECPoint::str() const { return infinity ? "O" : "(" + x.str() + ", " + y.str() + ")"; }

bool on_curve(const WeierstrassCurve& e, const ECPoint& p) {
  if (p.infinity) return true;
  const Rational& x = p.x;
  const Rational& y = p.y;
  return y * y + e.a1 * x * y + e.a3 * y == x * x * x + e.a2 * x * x + e.a4 * x + e.a6;
}

namespace {
void require_on(const WeierstrassCurve& e, const ECPoint& p) {
  if (!on_curve(e, p)) throw UsageError("point " + p.str() + " is not on " + e.str());
}
}  // namespace

ECPoint negate(const WeierstrassCurve& e, const ECPoint& p) {
  require_on(e, p);
  if (p.infinity) return p;
  return ECPoint::affine(p.x, -p.y - e.a1 * p.x - e.a3);
}

ECPoint add(const WeierstrassCurve& e, const ECPoint& p, const ECPoint& q) {
  require_on(e, p);
  require_on(e, q);
  if (p.infinity) return q;
  if (q.infinity) return p;
  if (p.x == q.x && p.y + q.y + e.a1 * q.x + e.a3 == Rational(0)) return ECPoint::at_infinity();
  Rational lambda, nu;
  if (p.x != q.x) {
    const Rational dx = q.x - p.x;
    lambda = (q.y - p.y) / dx;
    nu = (p.y * q.x - q.y * p.x) / dx;
  } else {
    const Rational den = Rational(2) * p.y + e.a1 * p.x + e.a3;
    lambda = (Rational(3) * p.x * p.x + Rational(2) * e.a2 * p.x + e.a4 - e.a1 * p.y) / den;
    nu = (-p.x * p.x * p.x + e.a4 * p.x + Rational(2) * e.a6 - e.a3 * p.y) / den;
  }
  const Rational x3 = lambda * lambda + e.a1 * lambda - e.a2 - p.x - q.x;
  return ECPoint::affine(x3, -(lambda + e.a1) * x3 - nu - e.a3);
}

ECPoint scalar_mul(const WeierstrassCurve& e, long n, const ECPoint& p) {
  require_on(e, p);
  ECPoint base = n < 0 ? negate(e, p) : p;
  unsigned long k = n < 0 ? 0UL - static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
  ECPoint acc = ECPoint::at_infinity();
  for (; k; k >>= 1) {
    if (k & 1) acc = add(e, acc, base);
    base = add(e, base, base);
  }
  return acc;
}

}  // namespace quintic
