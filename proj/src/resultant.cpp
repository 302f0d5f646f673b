#include "quintic/resultant.hpp"

#include "quintic/errors.hpp"

namespace quintic {

Rational resultant(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() && q.is_zero()) throw UndefinedInput("resultant of two zero polynomials");
  if (p.is_zero()) return q.degree() == 0 ? Rational(1) : Rational(0);
  if (q.is_zero()) return p.degree() == 0 ? Rational(1) : Rational(0);

  // Euclidean remainder sequence over Q, tracking the sign and leading
  // coefficient powers picked up at each step.
  Rational acc(1);
  UniPoly a = p, b = q;
  while (true) {
    const int m = a.degree(), n = b.degree();
    if (n == 0) return acc * b.lc().pow(m);
    if (m == 0) return acc * a.lc().pow(n);
    UniPoly r = a % b;
    if (r.is_zero()) return Rational(0);
    if ((static_cast<long>(m) * n) % 2 == 1) acc = -acc;
    acc *= b.lc().pow(m - r.degree());
    a = std::move(b);
    b = std::move(r);
  }
}

Rational discriminant(const UniPoly& p) {
  const int n = p.degree();
  if (n < 1) throw UndefinedInput("discriminant of a constant polynomial");
  Rational r = resultant(p, p.derivative()) / p.lc();
  return ((static_cast<long>(n) * (n - 1) / 2) % 2 == 1) ? -r : r;
}

}  // namespace quintic
