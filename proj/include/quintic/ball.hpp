#pragma once

#include <mpfr.h>

#include <complex>
#include <string>

#include "quintic/rational.hpp"

namespace quintic {

/// RAII owner of an mpfr_t.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 64);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  static BigFloat from_rational(const Rational& q, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);
  static BigFloat from_double(double d, mpfr_prec_t prec);

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Exact value (every finite binary float is a dyadic rational).
  Rational to_rational() const;
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

 private:
  mpfr_t v_;
};

/// Rectangular-midpoint complex ball: the disk of radius `radius` around
/// (re + i im). Midpoints carry the working precision; the radius is a
/// 64-bit float rounded upward. Every arithmetic operation returns a ball
/// containing all exact results for inputs drawn from the operand balls.
class ComplexBall {
 public:
  explicit ComplexBall(mpfr_prec_t prec = 128);
  ComplexBall(BigFloat re, BigFloat im, BigFloat radius);

  /// Ball containing q (radius covers the rounding of q to `prec` bits).
  static ComplexBall from_rational(const Rational& q, mpfr_prec_t prec);
  static ComplexBall from_rational(const Rational& re, const Rational& im, const Rational& radius,
                                   mpfr_prec_t prec);

  mpfr_prec_t prec() const { return re_.prec(); }
  const BigFloat& re() const { return re_; }
  const BigFloat& im() const { return im_; }
  const BigFloat& radius() const { return rad_; }

  /// True when 0 may lie in the ball (conservative).
  bool may_contain_zero() const;
  /// True when the ball meets the real axis (|im| <= radius).
  bool meets_real_axis() const;
  /// Upper bound of |z| over the ball.
  BigFloat abs_upper() const;
  /// Lower bound of |z| over the ball (0 if the ball may contain 0).
  BigFloat abs_lower() const;

  /// Exact endpoints of the projection onto the real axis.
  Rational real_lower() const;
  Rational real_upper() const;

  ComplexBall conj() const;
  ComplexBall inverse() const;
  ComplexBall with_radius(const BigFloat& r) const;
  /// Same midpoint with the imaginary part set to 0; valid when the caller
  /// knows the contained value is real.
  ComplexBall real_projection() const;

  std::complex<double> approx() const { return {re_.to_double(), im_.to_double()}; }
  std::string str(int digits = 20) const;

  friend ComplexBall operator+(const ComplexBall& a, const ComplexBall& b);
  friend ComplexBall operator-(const ComplexBall& a, const ComplexBall& b);
  friend ComplexBall operator*(const ComplexBall& a, const ComplexBall& b);
  friend ComplexBall operator/(const ComplexBall& a, const ComplexBall& b);
  friend ComplexBall operator-(const ComplexBall& a);

 private:
  BigFloat re_, im_, rad_;
};

/// Upper-bound helpers on 64-bit nonnegative floats (round toward +inf).
namespace bound {
BigFloat add(const BigFloat& a, const BigFloat& b);
BigFloat mul(const BigFloat& a, const BigFloat& b);
/// |x| rounded up.
BigFloat abs(const BigFloat& x);
/// 2^e
BigFloat pow2(long e);
}  // namespace bound

}  // namespace quintic
