#include "quintic/ball.hpp"

#include <algorithm>
#include <sstream>

#include "quintic/errors.hpp"

namespace quintic {

namespace {
constexpr mpfr_prec_t kRadPrec = 64;
}

BigFloat::BigFloat(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, o.prec());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, o.prec());
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::from_rational(const Rational& q, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  BigFloat r(prec);
  mpfr_set_q(r.v_, q.get().get_mpq_t(), rnd);
  return r;
}

BigFloat BigFloat::from_double(double d, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_d(r.v_, d, MPFR_RNDN);
  return r;
}

Rational BigFloat::to_rational() const {
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), v_);
  return Rational(q);
}

namespace bound {

BigFloat add(const BigFloat& a, const BigFloat& b) {
  BigFloat r(kRadPrec);
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

BigFloat mul(const BigFloat& a, const BigFloat& b) {
  BigFloat r(kRadPrec);
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

BigFloat abs(const BigFloat& x) {
  BigFloat r(kRadPrec);
  mpfr_abs(r.get(), x.get(), MPFR_RNDU);
  return r;
}

BigFloat pow2(long e) {
  BigFloat r(kRadPrec);
  mpfr_set_ui_2exp(r.get(), 1, e, MPFR_RNDU);
  return r;
}

}  // namespace bound

namespace {

/// Upper bound on the error of a round-to-nearest result v at precision p:
/// 2^(1-p) |v|.
BigFloat rounding_error(const BigFloat& v) {
  return bound::mul(bound::abs(v), bound::pow2(1 - static_cast<long>(v.prec())));
}

BigFloat hypot_up(const BigFloat& a, const BigFloat& b) {
  BigFloat r(kRadPrec);
  mpfr_hypot(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

BigFloat hypot_down(const BigFloat& a, const BigFloat& b) {
  BigFloat r(kRadPrec);
  mpfr_hypot(r.get(), a.get(), b.get(), MPFR_RNDD);
  return r;
}

}  // namespace

ComplexBall::ComplexBall(mpfr_prec_t prec) : re_(prec), im_(prec), rad_(kRadPrec) {}

ComplexBall::ComplexBall(BigFloat re, BigFloat im, BigFloat radius)
    : re_(std::move(re)), im_(std::move(im)), rad_(kRadPrec) {
  if (radius.sign() < 0) throw UsageError("negative ball radius");
  mpfr_set(rad_.get(), radius.get(), MPFR_RNDU);
}

ComplexBall ComplexBall::from_rational(const Rational& q, mpfr_prec_t prec) {
  BigFloat re = BigFloat::from_rational(q, prec);
  BigFloat err = rounding_error(re);
  return ComplexBall(std::move(re), BigFloat(prec), std::move(err));
}

ComplexBall ComplexBall::from_rational(const Rational& re, const Rational& im,
                                       const Rational& radius, mpfr_prec_t prec) {
  BigFloat r = BigFloat::from_rational(re, prec), i = BigFloat::from_rational(im, prec);
  BigFloat rad = BigFloat::from_rational(radius, kRadPrec, MPFR_RNDU);
  rad = bound::add(rad, bound::add(rounding_error(r), rounding_error(i)));
  return ComplexBall(std::move(r), std::move(i), std::move(rad));
}

bool ComplexBall::may_contain_zero() const {
  BigFloat lo = hypot_down(re_, im_);
  return mpfr_cmp(lo.get(), rad_.get()) <= 0;
}

bool ComplexBall::meets_real_axis() const {
  return mpfr_cmpabs(im_.get(), rad_.get()) <= 0;
}

BigFloat ComplexBall::abs_upper() const { return bound::add(hypot_up(re_, im_), rad_); }

BigFloat ComplexBall::abs_lower() const {
  BigFloat lo = hypot_down(re_, im_);
  BigFloat r(kRadPrec);
  mpfr_sub(r.get(), lo.get(), rad_.get(), MPFR_RNDD);
  if (r.sign() < 0) mpfr_set_zero(r.get(), 1);
  return r;
}

Rational ComplexBall::real_lower() const { return re_.to_rational() - rad_.to_rational(); }
Rational ComplexBall::real_upper() const { return re_.to_rational() + rad_.to_rational(); }

ComplexBall ComplexBall::conj() const {
  ComplexBall r = *this;
  mpfr_neg(r.im_.get(), im_.get(), MPFR_RNDN);
  return r;
}

ComplexBall ComplexBall::with_radius(const BigFloat& rad) const {
  ComplexBall r = *this;
  mpfr_set(r.rad_.get(), rad.get(), MPFR_RNDU);
  return r;
}

ComplexBall ComplexBall::real_projection() const {
  ComplexBall r = *this;
  mpfr_set_zero(r.im_.get(), 1);
  return r;
}

std::string ComplexBall::str(int digits) const {
  std::ostringstream os;
  char buf[256];
  mpfr_snprintf(buf, sizeof buf, "%.*Rg", digits, re_.get());
  os << buf;
  mpfr_snprintf(buf, sizeof buf, "%+.*Rg", digits, im_.get());
  os << " " << buf << "i";
  mpfr_snprintf(buf, sizeof buf, "%.3Re", rad_.get());
  os << " +/- " << buf;
  return os.str();
}

ComplexBall operator+(const ComplexBall& a, const ComplexBall& b) {
  const mpfr_prec_t p = std::max(a.prec(), b.prec());
  BigFloat re(p), im(p);
  mpfr_add(re.get(), a.re_.get(), b.re_.get(), MPFR_RNDN);
  mpfr_add(im.get(), a.im_.get(), b.im_.get(), MPFR_RNDN);
  BigFloat rad = bound::add(bound::add(a.rad_, b.rad_),
                            bound::add(rounding_error(re), rounding_error(im)));
  return ComplexBall(std::move(re), std::move(im), std::move(rad));
}

ComplexBall operator-(const ComplexBall& a) {
  ComplexBall r = a;
  mpfr_neg(r.re_.get(), a.re_.get(), MPFR_RNDN);
  mpfr_neg(r.im_.get(), a.im_.get(), MPFR_RNDN);
  return r;
}

ComplexBall operator-(const ComplexBall& a, const ComplexBall& b) { return a + (-b); }

ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) {
  const mpfr_prec_t p = std::max(a.prec(), b.prec());
  BigFloat ac(p), bd(p), ad(p), bc(p), re(p), im(p);
  mpfr_mul(ac.get(), a.re_.get(), b.re_.get(), MPFR_RNDN);
  mpfr_mul(bd.get(), a.im_.get(), b.im_.get(), MPFR_RNDN);
  mpfr_mul(ad.get(), a.re_.get(), b.im_.get(), MPFR_RNDN);
  mpfr_mul(bc.get(), a.im_.get(), b.re_.get(), MPFR_RNDN);
  mpfr_sub(re.get(), ac.get(), bd.get(), MPFR_RNDN);
  mpfr_add(im.get(), ad.get(), bc.get(), MPFR_RNDN);
  BigFloat err = bound::add(bound::add(rounding_error(ac), rounding_error(bd)),
                            bound::add(rounding_error(ad), rounding_error(bc)));
  err = bound::add(err, bound::add(rounding_error(re), rounding_error(im)));
  // |xy - mx my| <= |mx| ry + |my| rx + rx ry
  BigFloat ma = hypot_up(a.re_, a.im_), mb = hypot_up(b.re_, b.im_);
  BigFloat prop = bound::add(bound::add(bound::mul(ma, b.rad_), bound::mul(mb, a.rad_)),
                             bound::mul(a.rad_, b.rad_));
  return ComplexBall(std::move(re), std::move(im), bound::add(err, prop));
}

ComplexBall ComplexBall::inverse() const {
  BigFloat lo = hypot_down(re_, im_);
  if (mpfr_cmp(lo.get(), rad_.get()) <= 0)
    throw PrecisionExhausted("inverse of a ball that may contain zero");
  const mpfr_prec_t p = prec();
  BigFloat n(p), re(p), im(p);
  mpfr_sqr(n.get(), re_.get(), MPFR_RNDN);
  BigFloat t(p);
  mpfr_sqr(t.get(), im_.get(), MPFR_RNDN);
  mpfr_add(n.get(), n.get(), t.get(), MPFR_RNDN);
  mpfr_div(re.get(), re_.get(), n.get(), MPFR_RNDN);
  mpfr_div(im.get(), im_.get(), n.get(), MPFR_RNDN);
  mpfr_neg(im.get(), im.get(), MPFR_RNDN);
  // Midpoint error <= 16 u / |m|; propagated radius r / (|m| (|m| - r)).
  BigFloat inv_lo(kRadPrec);
  mpfr_ui_div(inv_lo.get(), 1, lo.get(), MPFR_RNDU);
  BigFloat err = bound::mul(inv_lo, bound::pow2(5 - static_cast<long>(p)));
  BigFloat gap(kRadPrec);
  mpfr_sub(gap.get(), lo.get(), rad_.get(), MPFR_RNDD);
  BigFloat prop(kRadPrec);
  mpfr_div(prop.get(), rad_.get(), gap.get(), MPFR_RNDU);
  prop = bound::mul(prop, inv_lo);
  return ComplexBall(std::move(re), std::move(im), bound::add(err, prop));
}

ComplexBall operator/(const ComplexBall& a, const ComplexBall& b) { return a * b.inverse(); }

}  // namespace quintic
