#include "quintic/mpoly.hpp"

#include <algorithm>
#include <sstream>

#include "quintic/errors.hpp"

namespace quintic {

MPoly MPoly::constant(int nvars, const Rational& c) {
  MPoly p(nvars);
  p.add_term(Exponents{}, c);
  return p;
}

MPoly MPoly::variable(int nvars, int index) {
  MPoly p(nvars);
  Exponents e{};
  e[static_cast<std::size_t>(index)] = 1;
  p.add_term(e, Rational(1));
  return p;
}

MPoly MPoly::term(int nvars, const Rational& c, std::initializer_list<int> exps) {
  MPoly p(nvars);
  Exponents e{};
  std::size_t i = 0;
  for (int x : exps) e[i++] = static_cast<std::uint8_t>(x);
  p.add_term(e, c);
  return p;
}

void MPoly::add_term(const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int i = 0; i < nvars_; ++i) s += e[static_cast<std::size_t>(i)];
    d = std::max(d, s);
  }
  return d;
}

int MPoly::homogeneous_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int i = 0; i < nvars_; ++i) s += e[static_cast<std::size_t>(i)];
    if (d >= 0 && s != d) return -1;
    d = s;
  }
  return d;
}

int MPoly::degree_in(int var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[static_cast<std::size_t>(var)]));
  return d;
}

Rational MPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MPoly::eval(std::span<const Rational> x) const {
  if (static_cast<int>(x.size()) < nvars_) throw UsageError("MPoly::eval: too few values");
  Rational acc;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < nvars_; ++i)
      if (e[static_cast<std::size_t>(i)]) t *= x[static_cast<std::size_t>(i)].pow(e[static_cast<std::size_t>(i)]);
    acc += t;
  }
  return acc;
}

MPoly MPoly::substitute(int var, const MPoly& value) const {
  const int maxd = std::max(0, degree_in(var));
  std::vector<MPoly> powers{MPoly::constant(nvars_, Rational(1))};
  for (int k = 1; k <= maxd; ++k) powers.push_back(powers.back() * value);
  MPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    int k = rest[static_cast<std::size_t>(var)];
    rest[static_cast<std::size_t>(var)] = 0;
    MPoly mono(nvars_);
    mono.add_term(rest, c);
    out += mono * powers[static_cast<std::size_t>(k)];
  }
  return out;
}

MPoly MPoly::partial_eval(int var, const Rational& value) const {
  return substitute(var, MPoly::constant(nvars_, value));
}

std::vector<MPoly> MPoly::coefficients_in(int var) const {
  std::vector<MPoly> out(static_cast<std::size_t>(std::max(0, degree_in(var) + 1)), MPoly(nvars_));
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    int k = rest[static_cast<std::size_t>(var)];
    rest[static_cast<std::size_t>(var)] = 0;
    out[static_cast<std::size_t>(k)].add_term(rest, c);
  }
  return out;
}

MPoly MPoly::divide_by_variable(int var, int k) const {
  MPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[static_cast<std::size_t>(var)] < k) throw UsageError("MPoly: not divisible by variable");
    Exponents f = e;
    f[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(f[static_cast<std::size_t>(var)] - k);
    out.add_term(f, c);
  }
  return out;
}

MPoly MPoly::drop_variable(int var) const {
  MPoly out(nvars_ - 1);
  for (const auto& [e, c] : terms_) {
    if (e[static_cast<std::size_t>(var)] != 0) throw UsageError("MPoly::drop_variable: variable occurs");
    Exponents f{};
    int j = 0;
    for (int i = 0; i < nvars_; ++i)
      if (i != var) f[static_cast<std::size_t>(j++)] = e[static_cast<std::size_t>(i)];
    out.add_term(f, c);
  }
  return out;
}

UniPoly MPoly::to_univariate(int var) const {
  std::vector<Rational> c(static_cast<std::size_t>(std::max(0, degree_in(var) + 1)));
  for (const auto& [e, v] : terms_) {
    for (int i = 0; i < nvars_; ++i)
      if (i != var && e[static_cast<std::size_t>(i)] != 0)
        throw UsageError("MPoly::to_univariate: other variables occur");
    c[e[static_cast<std::size_t>(var)]] += v;
  }
  return UniPoly(std::move(c));
}

MPoly& MPoly::operator+=(const MPoly& o) {
  nvars_ = std::max(nvars_, o.nvars_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  nvars_ = std::max(nvars_, o.nvars_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& o) {
  MPoly out(std::max(nvars_, o.nvars_));
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exponents e{};
      for (int i = 0; i < kMaxVars; ++i)
        e[static_cast<std::size_t>(i)] =
            static_cast<std::uint8_t>(e1[static_cast<std::size_t>(i)] + e2[static_cast<std::size_t>(i)]);
      out.add_term(e, c1 * c2);
    }
  *this = std::move(out);
  return *this;
}

MPoly& MPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

bool MPoly::proportional_to(const MPoly& other, Rational* ratio) const {
  if (is_zero() || other.is_zero()) {
    if (ratio) *ratio = Rational(0);
    return is_zero();
  }
  if (terms_.size() != other.terms_.size()) return false;
  const auto& [e0, c0] = *other.terms_.begin();
  auto it = terms_.find(e0);
  if (it == terms_.end()) return false;
  Rational r = it->second / c0;
  if (!(*this == other * r)) return false;
  if (ratio) *ratio = r;
  return true;
}

std::string MPoly::str(const std::vector<std::string>& names) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first, then reverse lexicographic exponents.
  std::vector<std::pair<Exponents, Rational>> v(terms_.begin(), terms_.end());
  std::stable_sort(v.begin(), v.end(), [this](const auto& a, const auto& b) {
    int da = 0, db = 0;
    for (int i = 0; i < nvars_; ++i) {
      da += a.first[static_cast<std::size_t>(i)];
      db += b.first[static_cast<std::size_t>(i)];
    }
    if (da != db) return da > db;
    return a.first > b.first;
  });
  for (const auto& [e, c] : v) {
    Rational mag = c.abs();
    os << (first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + "));
    first = false;
    bool constant_term = true;
    for (int i = 0; i < nvars_; ++i) constant_term = constant_term && e[static_cast<std::size_t>(i)] == 0;
    bool wrote = false;
    if (mag != Rational(1) || constant_term) {
      os << (mag.is_integer() ? mag.str() : "(" + mag.str() + ")");
      wrote = true;
    }
    for (int i = 0; i < nvars_; ++i) {
      int k = e[static_cast<std::size_t>(i)];
      if (!k) continue;
      if (wrote) os << "*";
      os << names.at(static_cast<std::size_t>(i));
      if (k > 1) os << "^" << k;
      wrote = true;
    }
  }
  return os.str();
}

MPoly pow(const MPoly& p, int e) {
  MPoly r = MPoly::constant(p.nvars(), Rational(1));
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

namespace {

MPoly det(const std::vector<std::vector<MPoly>>& m, int nvars) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  MPoly acc(nvars);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<MPoly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<MPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    MPoly t = m[0][j] * det(minor, nvars);
    if (j % 2) acc -= t;
    else acc += t;
  }
  return acc;
}

}  // namespace

MPoly resultant_in(int var, const MPoly& p, const MPoly& q) {
  const int m = p.degree_in(var), n = q.degree_in(var);
  if (m < 0 || n < 0) throw UndefinedInput("resultant_in: zero polynomial");
  if (m + n == 0) return MPoly::constant(std::max(p.nvars(), q.nvars()), Rational(1));
  const int nv = std::max(p.nvars(), q.nvars());
  auto pc = p.coefficients_in(var), qc = q.coefficients_in(var);
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<MPoly>> s(size, std::vector<MPoly>(size, MPoly(nv)));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k)
      s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = pc[static_cast<std::size_t>(m - k)];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k)
      s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + k)] = qc[static_cast<std::size_t>(n - k)];
  return det(s, nv);
}

}  // namespace quintic
