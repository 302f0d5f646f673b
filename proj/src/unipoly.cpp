#include "quintic/unipoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "quintic/errors.hpp"

namespace quintic {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }

UniPoly UniPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::linear_root(const Rational& root) { return UniPoly({-root, Rational(1)}); }

UniPoly UniPoly::parse_coeffs(const std::string& text) {
  std::vector<Rational> v;
  std::string s = text;
  std::replace(s.begin(), s.end(), '[', ' ');
  std::replace(s.begin(), s.end(), ']', ' ');
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto first = item.find_first_not_of(" \t\"");
    auto last = item.find_last_not_of(" \t\"");
    if (first == std::string::npos) throw ParseError("empty coefficient in '" + text + "'");
    v.push_back(Rational::parse(item.substr(first, last - first + 1)));
  }
  if (v.empty()) throw ParseError("empty coefficient list");
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
  return c_[static_cast<std::size_t>(i)];
}

Rational UniPoly::lc() const { return c_.empty() ? Rational(0) : c_.back(); }

Rational UniPoly::eval(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  return scaled(lc().inverse());
}

UniPoly UniPoly::scaled(const Rational& s) const {
  std::vector<Rational> v = c_;
  for (auto& x : v) x *= s;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::compose_scale(const Rational& s) const {
  std::vector<Rational> v = c_;
  Rational p(1);
  for (auto& x : v) {
    x *= p;
    p *= s;
  }
  return UniPoly(std::move(v));
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
  if (d.is_zero()) throw UndefinedInput("polynomial division by zero");
  if (degree() < d.degree()) return {UniPoly(), *this};
  std::vector<Rational> rem = c_;
  std::vector<Rational> quo(c_.size() - d.c_.size() + 1);
  Rational inv = d.lc().inverse();
  const std::size_t dd = d.c_.size() - 1;
  for (std::size_t k = quo.size(); k-- > 0;) {
    Rational q = rem[k + dd] * inv;
    quo[k] = q;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= q * d.c_[j];
  }
  rem.resize(dd);
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

std::vector<Integer> UniPoly::primitive_integer(Rational* content) const {
  if (is_zero()) {
    if (content) *content = Rational(0);
    return {};
  }
  Integer l = 1;
  for (const auto& x : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
  std::vector<Integer> z(c_.size());
  Integer g = 0;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    z[i] = c_[i].num() * (l / c_[i].den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[i].get_mpz_t());
  }
  if (z.back() < 0) g = -g;
  for (auto& x : z) x /= g;
  if (content) *content = Rational(g, l);
  return z;
}

UniPoly UniPoly::from_integers(const std::vector<Integer>& c) {
  std::vector<Rational> v;
  v.reserve(c.size());
  for (const auto& x : c) v.emplace_back(x);
  return UniPoly(std::move(v));
}

std::string UniPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == Rational(1);
    if (i == 0) {
      os << mag;
    } else {
      if (!unit) os << (mag.is_integer() ? mag.str() : "(" + mag.str() + ")") << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::string UniPoly::coeff_str() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ",";
    s += c_[i].str();
  }
  return s;
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UniPoly pow(const UniPoly& p, int e) {
  UniPoly r = UniPoly::constant(Rational(1));
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.str(); }

}  // namespace quintic
