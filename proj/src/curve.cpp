#include "quintic/curve.hpp"

#include <sstream>

#include "quintic/errors.hpp"
#include "quintic/factor.hpp"

namespace quintic {

namespace {

using SymCoords = std::array<MPoly, kCoordVars>;

SymCoords generic_beta() {
  SymCoords b;
  for (int i = 0; i < kCoordVars; ++i) b[static_cast<std::size_t>(i)] = MPoly::variable(kCoordVars, i);
  return b;
}

SymCoords sym_mul(const NumberField& k, const SymCoords& u, const SymCoords& v) {
  SymCoords w;
  for (auto& x : w) x = MPoly(kCoordVars);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      if (u[i].is_zero() || v[j].is_zero()) continue;
      MPoly uv = u[i] * v[j];
      const Coords& p = k.alpha_power(static_cast<int>(i + j));
      for (std::size_t m = 0; m < 5; ++m)
        if (!p[m].is_zero()) w[m] += uv * p[m];
    }
  return w;
}

MPoly sym_trace(const NumberField& k, const SymCoords& u) {
  MPoly t(kCoordVars);
  for (std::size_t i = 0; i < 5; ++i) t += u[i] * k.power_trace(static_cast<int>(i));
  return t;
}

// x^4, x^3, x^2 coefficients of the char poly of the generic beta.
void char_poly_conditions(const NumberField& k, CurveCK& c) {
  SymCoords b = generic_beta();
  SymCoords b2 = sym_mul(k, b, b);
  SymCoords b3 = sym_mul(k, b2, b);
  MPoly p1 = sym_trace(k, b), p2 = sym_trace(k, b2), p3 = sym_trace(k, b3);
  const Rational half(1, 2), sixth(1, 6);
  c.linear5 = -p1;
  c.quadric5 = (p1 * p1 - p2) * half;
  c.cubic5 = -((p1 * p1 * p1 - Rational(3) * p1 * p2 + Rational(2) * p3) * sixth);
}

void eliminate(CurveCK& c, int var, const MPoly& value) {
  c.eliminated = var;
  c.elimination = value;
  int j = 0;
  for (int i = 0; i < kCoordVars; ++i)
    if (i != var) c.free_vars[static_cast<std::size_t>(j++)] = i;
}

FieldPtr field_or_algebra(const UniPoly& g) {
  return is_irreducible(g) ? NumberField::create(g) : NumberField::algebra(g);
}

}  // namespace

const std::vector<std::string>& coord_names() {
  static const std::vector<std::string> names{"a", "b", "c", "d", "e"};
  return names;
}

std::vector<std::string> CurveCK::free_names() const {
  std::vector<std::string> n;
  for (int v : free_vars) n.push_back(coord_names()[static_cast<std::size_t>(v)]);
  return n;
}

Coords CurveCK::lift(const std::array<Rational, 4>& p) const {
  std::array<Rational, kCoordVars> full{};
  for (std::size_t i = 0; i < 4; ++i) full[static_cast<std::size_t>(free_vars[i])] = p[i];
  full[static_cast<std::size_t>(eliminated)] = elimination.eval(full);
  Coords out;
  for (std::size_t i = 0; i < 5; ++i) out[i] = full[i];
  return out;
}

bool CurveCK::contains(const std::array<Rational, 4>& p) const {
  return quadric.eval(p).is_zero() && cubic.eval(p).is_zero();
}

CurvePoint CurvePoint::from_rationals(const std::array<Rational, 4>& p) {
  Integer l = 1;
  for (const auto& x : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
  CurvePoint out;
  Integer g = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    out.coords[i] = (p[i] * Rational(l)).num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.coords[i].get_mpz_t());
  }
  if (g == 0) throw UsageError("the zero tuple is not a projective point");
  int sign = 0;
  for (const auto& x : out.coords)
    if (x != 0) {
      sign = sgn(x);
      break;
    }
  for (auto& x : out.coords) x = x / g * sign;
  return out;
}

std::array<Rational, 4> CurvePoint::rationals() const {
  return {Rational(coords[0]), Rational(coords[1]), Rational(coords[2]), Rational(coords[3])};
}

Integer CurvePoint::height() const {
  Integer h = 0;
  for (const auto& x : coords) h = std::max<Integer>(h, abs(x));
  return h;
}

std::string CurvePoint::str() const {
  std::ostringstream os;
  os << "(" << coords[0] << ":" << coords[1] << ":" << coords[2] << ":" << coords[3] << ")";
  return os.str();
}

bool operator<(const CurvePoint& x, const CurvePoint& y) {
  Integer hx = x.height(), hy = y.height();
  if (hx != hy) return hx < hy;
  return x.coords < y.coords;
}

std::pair<MPoly, MPoly> t_curve_forms() {
  auto m = [](long k, std::initializer_list<int> e) { return MPoly::term(5, Rational(k), e); };
  MPoly quadric = m(-5, {2}) + m(50, {1, 1}) + m(32, {0, 1, 0, 1, 1}) + m(16, {0, 0, 2, 0, 1}) +
                  m(40, {0, 0, 1, 1, 1});
  MPoly cubic = m(-10, {3}) + m(25, {2, 1}) + m(-125, {2, 0, 1}) + m(-160, {1, 0, 1, 1, 1}) +
                m(-100, {1, 0, 0, 2, 1}) + m(64, {0, 2, 1, 0, 1}) + m(80, {0, 2, 0, 1, 1}) +
                m(80, {0, 1, 2, 0, 1}) + m(-64, {0, 0, 1, 2, 2}) + m(-48, {0, 0, 0, 3, 2});
  return {quadric, cubic};
}

CurveCK curve_from_t(const Rational& t) {
  if (t.is_zero()) throw DomainError("curve_from_t: t = 0 makes the elimination degenerate");
  if (t == Rational(-3125, 256)) throw DomainError("curve_from_t: x^5 + t x + t is reducible at t = -3125/256");
  CurveCK c;
  c.t = t;
  c.field = field_or_algebra(t_form(t).poly());
  char_poly_conditions(*c.field, c);
  eliminate(c, kE, MPoly::term(kCoordVars, Rational(5) / (Rational(4) * t), {1}));

  auto [quadric, cubic] = t_curve_forms();
  c.quadric = quadric.partial_eval(4, t).drop_variable(4);
  c.cubic = cubic.partial_eval(4, t).drop_variable(4);
  return c;
}

CurveCK curve_from_field(const UniPoly& g, std::optional<int> eliminate_var) {
  CurveCK c;
  c.field = NumberField::create(g);
  char_poly_conditions(*c.field, c);
  std::array<Rational, kCoordVars> lin{};
  for (const auto& [e, k] : c.linear5.terms())
    for (int i = 0; i < kCoordVars; ++i)
      if (e[static_cast<std::size_t>(i)] == 1) lin[static_cast<std::size_t>(i)] = k;
  int var = 0;
  if (eliminate_var) {
    var = *eliminate_var;
    if (var < 0 || var >= kCoordVars || lin[static_cast<std::size_t>(var)].is_zero())
      throw UsageError("curve_from_field: cannot eliminate that coordinate");
  } else {
    for (int i = 1; i < kCoordVars; ++i)
      if (lin[static_cast<std::size_t>(i)].abs() >= lin[static_cast<std::size_t>(var)].abs()) var = i;
  }
  const Rational inv = -lin[static_cast<std::size_t>(var)].inverse();
  MPoly value(kCoordVars);
  for (int i = 0; i < kCoordVars; ++i)
    if (i != var) value += MPoly::variable(kCoordVars, i) * (lin[static_cast<std::size_t>(i)] * inv);
  eliminate(c, var, value);
  c.quadric = c.quadric5.substitute(var, value).drop_variable(var);
  c.cubic = c.cubic5.substitute(var, value).drop_variable(var);
  return c;
}

PointImage point_to_trinomial(const CurveCK& C, const CurvePoint& P) {
  auto r = P.rationals();
  if (!C.contains(r)) throw UsageError("point " + P.str() + " is not on the curve");
  FieldElement beta = C.field->element(C.lift(r));
  if (beta.is_rational()) throw DegeneratePoint("point " + P.str() + " gives a rational beta");
  Trinomial tri = Trinomial::from_poly(char_poly(beta));
  PointImage out{beta, tri, equiv_class(tri), {}};
  const Rational g5 = tri.a.pow(5), d4 = tri.b.pow(4);
  if (d4.is_zero()) {
    out.rho = {Integer(1), Integer(0)};
  } else {
    const Rational q = g5 / d4;
    out.rho = {q.num(), q.den()};
  }
  return out;
}

CurvePoint trinomial_to_point(const CurveCK& C, const FieldElement& beta) {
  if (!beta.field()->same_as(*C.field)) throw UsageError("beta lives in a different field");
  UniPoly cp = char_poly(beta);
  if (!cp.coeff(4).is_zero() || !cp.coeff(3).is_zero() || !cp.coeff(2).is_zero())
    throw UsageError("char_poly(beta) = " + cp.str() + " is not a trinomial x^5 + r x + s");
  std::array<Rational, 4> p;
  for (std::size_t i = 0; i < 4; ++i) p[i] = beta.coords()[static_cast<std::size_t>(C.free_vars[i])];
  return CurvePoint::from_rationals(p);
}

UniPoly field_L_polynomial(const Rational& t) {
  if (t.is_zero()) throw DomainError("field_L_polynomial: t = 0");
  std::vector<Rational> c(11);
  const Rational t2 = t * t;
  c[10] = Rational(1);
  c[6] = Rational(-3) * t;
  c[5] = Rational(-11) * t;
  c[2] = Rational(-4) * t2;
  c[1] = Rational(4) * t2;
  c[0] = -t2;
  return UniPoly(c);
}

}  // namespace quintic
