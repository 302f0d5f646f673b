#include "quintic/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "quintic/errors.hpp"

namespace quintic {

namespace {

ComplexBall point(const ComplexBall& z) { return z.with_radius(BigFloat(64)); }

ComplexBall point_from_double(std::complex<double> z, mpfr_prec_t prec) {
  return ComplexBall(BigFloat::from_double(z.real(), prec), BigFloat::from_double(z.imag(), prec),
                     BigFloat(64));
}

struct Coeffs {
  std::vector<ComplexBall> c;  // monic, ascending
};

Coeffs ball_coeffs(const UniPoly& monic, mpfr_prec_t prec) {
  Coeffs out;
  for (const auto& q : monic.coeffs()) out.c.push_back(ComplexBall::from_rational(q, prec));
  return out;
}

ComplexBall horner(const Coeffs& k, const ComplexBall& z) {
  ComplexBall acc = k.c.back();
  for (std::size_t i = k.c.size() - 1; i-- > 0;) acc = acc * z + k.c[i];
  return acc;
}

/// p(z) and p'(z) by Horner on midpoints only.
void horner_mid(const Coeffs& k, const ComplexBall& z, ComplexBall& v, ComplexBall& dv) {
  v = point(k.c.back());
  dv = ComplexBall(z.prec());
  for (std::size_t i = k.c.size() - 1; i-- > 0;) {
    dv = point(dv * z + v);
    v = point(v * z + point(k.c[i]));
  }
}

std::vector<std::complex<double>> initial_guesses(const UniPoly& monic) {
  const int n = monic.degree();
  // Fujiwara-style radius estimate.
  double r = 0;
  for (int i = 0; i < n; ++i) {
    double c = std::abs(monic.coeff(i).to_double());
    if (c > 0) r = std::max(r, std::pow(c, 1.0 / (n - i)));
  }
  r = std::max(2 * r, 1e-3);
  if (!std::isfinite(r)) r = 1e100;
  std::vector<std::complex<double>> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k)
    z[static_cast<std::size_t>(k)] =
        std::polar(r, 2 * std::numbers::pi * k / n + 0.4);
  return z;
}

bool is_exact_zero(const ComplexBall& z) { return z.re().is_zero() && z.im().is_zero(); }

/// Gauss-Seidel Aberth iteration on midpoints. Stops once every correction
/// is below 2^-target_bits relative to max(1, |z|).
bool aberth(const Coeffs& k, std::vector<ComplexBall>& z, long target_bits, int max_iter) {
  const std::size_t n = z.size();
  const mpfr_prec_t prec = z[0].prec();
  const ComplexBall one = ComplexBall::from_rational(Rational(1), prec);
  for (int it = 0; it < max_iter; ++it) {
    bool converged = true;
    for (std::size_t i = 0; i < n; ++i) {
      ComplexBall v(prec), dv(prec);
      horner_mid(k, z[i], v, dv);
      if (is_exact_zero(v)) continue;
      if (is_exact_zero(dv)) {
        converged = false;
        continue;
      }
      ComplexBall s(prec);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        ComplexBall d = point(z[i] - z[j]);
        if (!is_exact_zero(d)) s = point(s + point(d.inverse()));
      }
      ComplexBall w = point(v * point(dv.inverse()));
      ComplexBall denom = point(one - point(w * s));
      if (is_exact_zero(denom)) {
        converged = false;
        continue;
      }
      ComplexBall delta = point(w * point(denom.inverse()));
      z[i] = point(z[i] - delta);
      if (is_exact_zero(delta)) continue;
      long e_delta = mpfr_get_exp(delta.abs_upper().get());
      long e_z = std::max<long>(1, mpfr_get_exp(z[i].abs_upper().get()));
      if (e_delta > e_z - target_bits) converged = false;
    }
    if (converged) return true;
  }
  return false;
}

struct Certified {
  std::vector<ComplexBall> balls;
  bool ok = false;
};

BigFloat dist_lower(const ComplexBall& a, const ComplexBall& b) {
  return point(point(a) - point(b)).abs_lower();
}

Certified certify(const Coeffs& k, const std::vector<ComplexBall>& z,
                  long precision_bits) {
  Certified out;
  const std::size_t n = z.size();
  std::vector<BigFloat> rho;
  for (std::size_t i = 0; i < n; ++i) {
    ComplexBall num = horner(k, point(z[i]));
    ComplexBall den = ComplexBall::from_rational(Rational(1), z[i].prec());
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) den = den * (point(z[i]) - point(z[j]));
    if (den.may_contain_zero()) return out;
    ComplexBall w = num / den;
    rho.push_back(bound::mul(w.abs_upper(), BigFloat::from_double(static_cast<double>(n), 64)));
  }
  // Radius target.
  for (std::size_t i = 0; i < n; ++i) {
    BigFloat scale = z[i].abs_upper();
    if (mpfr_cmp_ui(scale.get(), 1) < 0) mpfr_set_ui(scale.get(), 1, MPFR_RNDU);
    BigFloat lim(64);
    mpfr_mul_2si(lim.get(), scale.get(), -precision_bits, MPFR_RNDD);
    if (mpfr_cmp(rho[i].get(), lim.get()) > 0) return out;
  }
  // Pairwise disjoint disks.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (mpfr_cmp(dist_lower(z[i], z[j]).get(), bound::add(rho[i], rho[j]).get()) <= 0) return out;

  // Real / conjugate classification.
  std::vector<int> kind(n, 0);  // 1 real, 2 upper, 3 lower
  std::vector<std::size_t> partner(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    ComplexBall mirror = point(z[i]).conj();
    std::vector<std::size_t> hits;
    for (std::size_t j = 0; j < n; ++j)
      if (mpfr_cmp(dist_lower(mirror, z[j]).get(), bound::add(rho[i], rho[j]).get()) <= 0)
        hits.push_back(j);
    if (hits.size() != 1) return out;
    if (hits[0] == i) {
      kind[i] = 1;
    } else {
      if (z[i].with_radius(rho[i]).meets_real_axis()) return out;
      partner[i] = hits[0];
      kind[i] = z[i].im().sign() > 0 ? 2 : 3;
    }
  }
  std::vector<ComplexBall> reals, uppers;
  for (std::size_t i = 0; i < n; ++i) {
    if (kind[i] == 1) reals.push_back(z[i].with_radius(rho[i]).real_projection());
    if (kind[i] == 2) {
      if (kind[partner[i]] != 3 || partner[partner[i]] != i) return out;
      uppers.push_back(z[i].with_radius(rho[i]));
    }
  }
  if (reals.size() + 2 * uppers.size() != n) return out;
  auto by_re = [](const ComplexBall& a, const ComplexBall& b) {
    return mpfr_less_p(a.re().get(), b.re().get()) != 0;
  };
  std::sort(reals.begin(), reals.end(), by_re);
  std::sort(uppers.begin(), uppers.end(), [&](const ComplexBall& a, const ComplexBall& b) {
    int c = mpfr_cmp(a.im().get(), b.im().get());
    if (c != 0) return c < 0;
    return by_re(a, b);
  });
  out.balls = std::move(reals);
  for (const auto& u : uppers) {
    out.balls.push_back(u);
    out.balls.push_back(u.conj());
  }
  out.ok = true;
  return out;
}

}  // namespace

ComplexBall eval_ball(const UniPoly& p, const ComplexBall& z) {
  if (p.is_zero()) return ComplexBall(z.prec());
  return horner(ball_coeffs(p, z.prec()), z);
}

std::vector<ComplexBall> complex_roots(const UniPoly& p, long precision_bits) {
  if (p.degree() < 1) throw UndefinedInput("complex_roots of a constant polynomial");
  if (precision_bits < 8) precision_bits = 8;
  UniPoly monic = p.monic();
  const int n = monic.degree();
  if (n == 1) {
    Rational r = -monic.coeff(0);
    ComplexBall b = ComplexBall::from_rational(r, precision_bits + 64);
    return {b.real_projection()};
  }
  auto guesses = initial_guesses(monic);
  std::vector<ComplexBall> z;
  mpfr_prec_t wp = static_cast<mpfr_prec_t>(precision_bits) + 64;
  for (auto g : guesses) z.push_back(point_from_double(g, wp));
  const mpfr_prec_t cap = static_cast<mpfr_prec_t>(16 * precision_bits + 4096);
  while (wp <= cap) {
    Coeffs k = ball_coeffs(monic, wp);
    aberth(k, z, wp - 16, 2000);
    Certified c = certify(k, z, precision_bits);
    if (c.ok) return c.balls;
    wp *= 2;
    std::vector<ComplexBall> up;
    for (const auto& zi : z)
      up.emplace_back(BigFloat::from_rational(zi.re().to_rational(), wp),
                      BigFloat::from_rational(zi.im().to_rational(), wp), BigFloat(64));
    z = std::move(up);
  }
  throw PrecisionExhausted("could not separate the roots of " + p.str() +
                           " (repeated roots or precision cap reached)");
}

}  // namespace quintic
