#include "quintic/rational.hpp"

#include <cctype>
#include <ostream>

#include "quintic/errors.hpp"

namespace quintic {

namespace {

bool parse_integer(std::string_view s, Integer& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') i = 1;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  std::string digits(s.substr(s[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw UndefinedInput("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  Integer n, d = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(s, n)) throw ParseError("malformed rational: '" + std::string(text) + "'");
  } else {
    std::string_view den = s.substr(slash + 1);
    if (!parse_integer(s.substr(0, slash), n) || den.empty() || den[0] == '-' || den[0] == '+' ||
        !parse_integer(den, d))
      throw ParseError("malformed rational: '" + std::string(text) + "'");
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(n, d);
}

Rational Rational::inverse() const {
  if (is_zero()) throw UndefinedInput("inverse of zero");
  return Rational(mpq_class(1) / q_);
}

Rational Rational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw UndefinedInput("division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace quintic
