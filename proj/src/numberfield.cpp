#include "quintic/numberfield.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "quintic/errors.hpp"
#include "quintic/factor.hpp"
#include "quintic/integer_factor.hpp"
#include "quintic/reconstruct.hpp"
#include "quintic/resultant.hpp"
#include "quintic/roots.hpp"

namespace quintic {

namespace {

constexpr std::size_t N = kFieldDegree;

UniPoly check_quintic(const UniPoly& g) {
  if (g.degree() != kFieldDegree)
    throw UsageError("defining polynomial must have degree 5, got " + g.str());
  return g.monic();
}

}  // namespace

NumberField::NumberField(UniPoly g, bool is_field, long precision)
    : g_(std::move(g)), is_field_(is_field), precision_(precision) {
  // alpha^k for k < 5 are basis vectors; alpha^5 = -(g0 + ... + g4 alpha^4).
  for (std::size_t k = 0; k < N; ++k) {
    Coords c{};
    c[k] = Rational(1);
    alpha_powers_[k] = c;
  }
  for (std::size_t k = N; k < alpha_powers_.size(); ++k) {
    const Coords& prev = alpha_powers_[k - 1];
    Coords c{};
    for (std::size_t i = 1; i < N; ++i) c[i] = prev[i - 1];
    for (std::size_t i = 0; i < N; ++i) c[i] -= prev[N - 1] * g_.coeff(static_cast<int>(i));
    alpha_powers_[k] = c;
  }
  // Power sums of the roots via Newton's identities on the monic g.
  power_traces_[0] = Rational(static_cast<long>(N));
  for (std::size_t k = 1; k < power_traces_.size(); ++k) {
    Rational s;
    for (std::size_t i = 1; i < k && i <= N; ++i) s += g_.coeff(static_cast<int>(N - i)) * power_traces_[k - i];
    if (k <= N) s += Rational(static_cast<long>(k)) * g_.coeff(static_cast<int>(N - k));
    power_traces_[k] = -s;
  }
}

std::shared_ptr<const NumberField> NumberField::create(const UniPoly& g, long precision_bits) {
  UniPoly m = check_quintic(g);
  if (!is_irreducible(m)) throw UsageError("defining polynomial is reducible over Q: " + m.str());
  auto f = std::shared_ptr<NumberField>(new NumberField(m, true, precision_bits));
  f->embeddings_ = complex_roots(m, precision_bits);
  return f;
}

std::shared_ptr<const NumberField> NumberField::algebra(const UniPoly& g) {
  UniPoly m = check_quintic(g);
  return std::shared_ptr<NumberField>(new NumberField(m, false, 0));
}

int NumberField::real_embedding_count() const {
  return static_cast<int>(std::count_if(embeddings_.begin(), embeddings_.end(),
                                        [](const ComplexBall& b) { return b.im().is_zero(); }));
}

FieldElement NumberField::alpha() const { return element(alpha_powers_[1]); }

FieldElement NumberField::element(const Coords& c) const {
  return FieldElement(shared_from_this(), c);
}

FieldElement NumberField::from_rational(const Rational& q) const {
  Coords c{};
  c[0] = q;
  return element(c);
}

bool FieldElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x.is_zero(); });
}

bool FieldElement::is_rational() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& x) { return x.is_zero(); });
}

void FieldElement::check_same(const FieldElement& o) const {
  if (!field_->same_as(*o.field_)) throw UsageError("field elements from different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  Coords c = c_;
  for (std::size_t i = 0; i < N; ++i) c[i] += o.c_[i];
  return FieldElement(field_, c);
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  Coords c = c_;
  for (std::size_t i = 0; i < N; ++i) c[i] -= o.c_[i];
  return FieldElement(field_, c);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  std::array<Rational, 2 * N - 1> prod{};
  for (std::size_t i = 0; i < N; ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < N; ++j) prod[i + j] += c_[i] * o.c_[j];
  }
  Coords c{};
  for (std::size_t k = 0; k < prod.size(); ++k) {
    if (prod[k].is_zero()) continue;
    const Coords& ak = field_->alpha_power(static_cast<int>(k));
    for (std::size_t i = 0; i < N; ++i)
      if (!ak[i].is_zero()) c[i] += prod[k] * ak[i];
  }
  return FieldElement(field_, c);
}

FieldElement FieldElement::operator*(const Rational& s) const {
  Coords c = c_;
  for (auto& x : c) x *= s;
  return FieldElement(field_, c);
}

FieldElement FieldElement::pow(int e) const {
  if (e < 0) throw UsageError("negative power of a field element");
  FieldElement r = field_->from_rational(Rational(1));
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

bool FieldElement::operator==(const FieldElement& o) const {
  return field_->same_as(*o.field_) && c_ == o.c_;
}

Rational FieldElement::trace() const {
  Rational t;
  for (std::size_t i = 0; i < N; ++i) t += c_[i] * field_->power_trace(static_cast<int>(i));
  return t;
}

ComplexBall FieldElement::embed(std::size_t i) const {
  const auto& emb = field_->embeddings();
  if (i >= emb.size()) throw UsageError("embedding index out of range");
  const mpfr_prec_t prec = emb[i].prec();
  ComplexBall acc = ComplexBall::from_rational(c_[N - 1], prec);
  for (std::size_t k = N - 1; k-- > 0;) acc = acc * emb[i] + ComplexBall::from_rational(c_[k], prec);
  return acc;
}

std::string FieldElement::str() const {
  std::vector<Rational> v(c_.begin(), c_.end());
  std::string s = UniPoly(v).str();
  std::replace(s.begin(), s.end(), 'x', 'a');
  return s;
}

Matrix5 multiplication_matrix(const FieldElement& beta) {
  Matrix5 m{};
  const FieldPtr& k = beta.field();
  for (std::size_t j = 0; j < N; ++j) {
    FieldElement col = beta * k->element(k->alpha_power(static_cast<int>(j)));
    for (std::size_t i = 0; i < N; ++i) m[i][j] = col.coords()[i];
  }
  return m;
}

UniPoly char_poly(const Matrix5& a) {
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
  std::vector<Rational> c(N + 1);
  c[N] = Rational(1);
  Matrix5 m{};  // M_0 = 0
  for (std::size_t k = 1; k <= N; ++k) {
    Matrix5 next{};
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) {
        Rational s;
        for (std::size_t l = 0; l < N; ++l) s += a[i][l] * m[l][j];
        next[i][j] = s;
      }
    for (std::size_t i = 0; i < N; ++i) next[i][i] += c[N - k + 1];
    m = next;
    Rational tr;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t l = 0; l < N; ++l) tr += a[i][l] * m[l][i];
    c[N - k] = -tr / Rational(static_cast<long>(k));
  }
  return UniPoly(std::move(c));
}

UniPoly char_poly(const FieldElement& beta) { return char_poly(multiplication_matrix(beta)); }

FieldElement evaluate(const UniPoly& f, const FieldElement& beta) {
  const FieldPtr& k = beta.field();
  FieldElement acc = k->from_rational(Rational(0));
  for (int i = f.degree(); i >= 0; --i) acc = acc * beta + k->from_rational(f.coeff(i));
  return acc;
}

const char* to_string(RootStatus s) {
  switch (s) {
    case RootStatus::Certificate: return "certificate";
    case RootStatus::ProvenAbsent: return "proven-absent";
    case RootStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

using BallMatrix = std::vector<std::vector<ComplexBall>>;

/// Inverse of the embedding Vandermonde matrix V[i][k] = root_i^k by
/// Gauss-Jordan elimination on balls. Throws PrecisionExhausted when a
/// pivot cannot be separated from zero.
BallMatrix vandermonde_inverse(const std::vector<ComplexBall>& roots) {
  const std::size_t n = roots.size();
  const mpfr_prec_t prec = roots[0].prec();
  BallMatrix a(n, std::vector<ComplexBall>(2 * n, ComplexBall(prec)));
  for (std::size_t i = 0; i < n; ++i) {
    ComplexBall p = ComplexBall::from_rational(Rational(1), prec);
    for (std::size_t k = 0; k < n; ++k) {
      a[i][k] = p;
      p = p * roots[i];
    }
    a[i][n + i] = ComplexBall::from_rational(Rational(1), prec);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (mpfr_cmp(a[r][col].abs_lower().get(), a[piv][col].abs_lower().get()) > 0) piv = r;
    std::swap(a[piv], a[col]);
    ComplexBall inv = a[col][col].inverse();
    for (auto& x : a[col]) x = x * inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      ComplexBall f = a[r][col];
      for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] = a[r][k] - f * a[col][k];
    }
  }
  BallMatrix inv(n, std::vector<ComplexBall>(n, ComplexBall(prec)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) inv[i][k] = a[i][n + k];
  return inv;
}

struct RootShape {
  std::vector<std::size_t> reals;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (upper, lower)
};

/// Relies on the canonical order from complex_roots: reals, then (upper, lower).
RootShape shape_of(const std::vector<ComplexBall>& roots) {
  RootShape s;
  std::size_t i = 0;
  while (i < roots.size() && roots[i].im().is_zero()) s.reals.push_back(i++);
  for (; i + 1 < roots.size(); i += 2) s.pairs.emplace_back(i, i + 1);
  return s;
}

}  // namespace

RootSearchResult has_root_in_field(const UniPoly& f_in, const FieldPtr& field, long precision_bits,
                                   const Integer& denominator_bound) {
  if (!field->is_field()) throw UsageError("has_root_in_field needs a field, not a bare algebra");
  if (f_in.degree() < 1 || f_in.degree() > 5)
    throw UsageError("has_root_in_field accepts polynomials of degree 1..5");
  RootSearchResult res;
  res.precision_bits = precision_bits;
  res.denominator_bound = denominator_bound;
  const UniPoly f = f_in.monic();

  Factorization fac = factor_over_Q(f);
  for (const auto& [factor, mult] : fac.factors) {
    if (factor.degree() == 1) {
      FieldElement beta = field->from_rational(-factor.coeff(0));
      if (!evaluate(f, beta).is_zero()) throw Error("internal: rational root failed verification");
      res.status = RootStatus::Certificate;
      res.root = beta;
      res.reason = "rational root";
      return res;
    }
  }
  const UniPoly* quintic = nullptr;
  for (const auto& [factor, mult] : fac.factors)
    if (factor.degree() == 5) quintic = &factor;
  if (!quintic) {
    res.status = RootStatus::ProvenAbsent;
    res.reason = "no factor of degree 1 or 5 over Q";
    return res;
  }
  const UniPoly& h = *quintic;

  // Q[x]/(h) must be isomorphic to K: equal discriminants up to squares.
  if (!is_rational_square(discriminant(h) / discriminant(field->defining_poly()))) {
    res.status = RootStatus::ProvenAbsent;
    res.reason = "discriminant ratio is not a square";
    return res;
  }

  std::vector<ComplexBall> emb;
  std::vector<ComplexBall> froots;
  try {
    emb = precision_bits <= field->precision() ? field->embeddings()
                                               : complex_roots(field->defining_poly(), precision_bits);
    froots = complex_roots(h, precision_bits);
  } catch (const PrecisionExhausted& e) {
    res.reason = std::string("root isolation failed: ") + e.what();
    return res;
  }
  RootShape gs = shape_of(emb), fs = shape_of(froots);
  if (gs.reals.size() != fs.reals.size()) {
    res.status = RootStatus::ProvenAbsent;
    res.reason = "different numbers of real roots";
    return res;
  }

  BallMatrix vinv;
  try {
    vinv = vandermonde_inverse(emb);
  } catch (const PrecisionExhausted& e) {
    res.reason = std::string("embedding matrix inversion failed: ") + e.what();
    return res;
  }

  std::vector<std::size_t> rperm(fs.reals.size()), pperm(fs.pairs.size());
  std::iota(rperm.begin(), rperm.end(), 0);
  bool all_excluded = true;
  const std::size_t npairs = fs.pairs.size();
  do {
    std::iota(pperm.begin(), pperm.end(), 0);
    do {
      for (unsigned mask = 0; mask < (1u << npairs); ++mask) {
        ++res.matchings_tried;
        std::vector<ComplexBall> target(N, ComplexBall(emb[0].prec()));
        for (std::size_t i = 0; i < gs.reals.size(); ++i)
          target[gs.reals[i]] = froots[fs.reals[rperm[i]]];
        for (std::size_t k = 0; k < npairs; ++k) {
          auto [fu, fl] = fs.pairs[pperm[k]];
          bool flip = (mask >> k) & 1u;
          target[gs.pairs[k].first] = froots[flip ? fl : fu];
          target[gs.pairs[k].second] = froots[flip ? fu : fl];
        }
        Coords c{};
        bool excluded = false, lifted = true;
        for (std::size_t k = 0; k < N && !excluded; ++k) {
          ComplexBall acc(emb[0].prec());
          for (std::size_t i = 0; i < N; ++i) acc = acc + vinv[k][i] * target[i];
          if (!acc.meets_real_axis()) {
            excluded = true;
            break;
          }
          auto q = rational_reconstruct(acc, denominator_bound);
          if (!q) {
            lifted = false;
          } else {
            c[k] = *q;
          }
        }
        if (excluded) continue;
        all_excluded = false;
        if (!lifted) continue;
        FieldElement beta = field->element(c);
        if (evaluate(f, beta).is_zero()) {
          res.status = RootStatus::Certificate;
          res.root = beta;
          res.reason = "lifted from embedding matching and verified exactly";
          return res;
        }
      }
    } while (std::next_permutation(pperm.begin(), pperm.end()));
  } while (std::next_permutation(rperm.begin(), rperm.end()));

  if (all_excluded) {
    res.status = RootStatus::ProvenAbsent;
    res.reason = "every embedding matching forces a non-real coordinate";
  } else {
    res.reason = "no matching lifted to an exact root at this precision and denominator bound";
  }
  return res;
}

}  // namespace quintic
