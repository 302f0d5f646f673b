#include "quintic/surface.hpp"

#include "quintic/errors.hpp"

namespace quintic {

namespace {

struct Term {
  long c;
  int a, b, cc, d;
};

// 30 terms, each of total degree 6.
constexpr Term kForm[] = {
    {20, 3, 0, 1, 2},     {15, 3, 0, 0, 3},     {128, 2, 2, 0, 2},    {128, 2, 1, 2, 1},
    {240, 2, 1, 1, 2},    {-100, 2, 1, 0, 3},   {32, 2, 0, 4, 0},     {320, 2, 0, 3, 1},
    {700, 2, 0, 2, 2},    {250, 2, 0, 1, 3},    {-128, 1, 3, 1, 1},   {-480, 1, 3, 0, 2},
    {-64, 1, 2, 3, 0},    {-720, 1, 2, 2, 1},   {-600, 1, 2, 1, 2},   {-500, 1, 2, 0, 3},
    {-160, 1, 1, 4, 0},   {-600, 1, 1, 3, 1},   {-1500, 1, 1, 2, 2},  {-2500, 1, 1, 1, 3},
    {400, 1, 0, 5, 0},    {2000, 1, 0, 4, 1},   {2500, 1, 0, 3, 2},   {1280, 0, 4, 1, 1},
    {1600, 0, 4, 0, 2},   {640, 0, 3, 3, 0},    {4000, 0, 3, 2, 1},   {2000, 0, 3, 1, 2},
    {800, 0, 2, 4, 0},    {2000, 0, 2, 3, 1},
};

const Rational kBadT(-3125, 256);

}  // namespace

const MPoly& surface_form() {
  static const MPoly form = [] {
    MPoly f(4);
    for (const Term& t : kForm) f += MPoly::term(4, Rational(t.c), {t.a, t.b, t.cc, t.d});
    return f;
  }();
  return form;
}

bool on_surface(const std::array<Rational, 4>& p) { return surface_form().eval(p).is_zero(); }
bool on_surface(const SurfacePoint& p) { return on_surface(p.rationals()); }

std::optional<Rational> recover_t(const std::array<Rational, 4>& p) {
  if (!on_surface(p)) throw UsageError("recover_t: point is not on the surface");
  const auto& [a, b, c, d] = p;
  const Rational den = Rational(32) * b * d + Rational(16) * c * c + Rational(40) * c * d;
  if (den.is_zero()) return std::nullopt;
  return (Rational(5) * a * a - Rational(50) * a * b) / den;
}

std::optional<Rational> recover_t(const SurfacePoint& p) { return recover_t(p.rationals()); }

std::array<Rational, 4> rational_curve_point(RationalCurve name, const Rational& s) {
  const Rational s2 = s * s, s3 = s2 * s, s4 = s3 * s;
  auto q = [](long n, long d) { return Rational(n, d); };
  std::array<Rational, 4> p;
  switch (name) {
    case RationalCurve::R1:
      p = {q(-3, 100) * s4 - q(1, 5) * s3 + s2, q(3, 100) * s3 + q(1, 5) * s2 - s, Rational(0),
           q(32, 125) * s2 + q(24, 25) * s + q(16, 5)};
      break;
    case RationalCurve::R2: {
      const Rational d = q(8, 625) * s2 + q(2, 125) * s - q(4, 25);
      p = {q(7, 2000) * s4 + q(1, 100) * s3 + q(1, 4) * s2 + s,
           q(-7, 2000) * s3 - q(1, 100) * s2 - q(1, 4) * s - Rational(1), q(-5, 2) * d, d};
      break;
    }
    case RationalCurve::R3: {
      const Rational d = q(-32, 625) * s + q(16, 125);
      p = {q(-1, 250) * s3 + q(2, 25) * s2 - q(1, 2) * s + Rational(1), q(-1, 250) * s2 + q(1, 10),
           q(-5, 4) * d, d};
      break;
    }
    case RationalCurve::R4:
      p = {Rational(0), q(-1, 2) * s2 - q(5, 4) * s, s, Rational(1)};
      break;
    case RationalCurve::R5:
      p = {Rational(-5) * s2 - q(25, 2) * s, q(-1, 2) * s2 - q(5, 4) * s, s, Rational(1)};
      break;
  }
  bool zero = true;
  for (const auto& x : p) zero = zero && x.is_zero();
  if (zero) throw UndefinedInput(std::string("rational curve ") + to_string(name) + " is undefined at s = " + s.str());
  return p;
}

SurfacePoint rational_curve(RationalCurve name, const Rational& s) {
  return SurfacePoint::from_rationals(rational_curve_point(name, s));
}

RationalCurve parse_rational_curve(const std::string& name) {
  for (auto c : {RationalCurve::R1, RationalCurve::R2, RationalCurve::R3, RationalCurve::R4, RationalCurve::R5})
    if (name == to_string(c)) return c;
  throw UsageError("unknown rational curve '" + name + "' (expected R1..R5)");
}

const char* to_string(RationalCurve c) {
  static const char* names[] = {"R1", "R2", "R3", "R4", "R5"};
  return names[static_cast<int>(c)];
}

const LineInfo& line_info(SurfaceLine l) {
  static const LineInfo info[] = {
      {"a = 10b, c = -3b/5", "0", false},
      {"a = b = 0", "", false},
      {"b = 21d/32, c = -3d/4", "inf", false},
      {"a = 125d/16, c = -5d/4", "-3125/256", false},
      {"c = d = 0", "", true},
  };
  return info[static_cast<int>(l)];
}

std::array<Rational, 4> line_point(SurfaceLine l, const Rational& u, const Rational& v) {
  switch (l) {
    case SurfaceLine::L1: return {Rational(10) * u, u, Rational(-3, 5) * u, v};
    case SurfaceLine::L2: return {Rational(0), Rational(0), u, v};
    case SurfaceLine::L3: return {u, Rational(21, 32) * v, Rational(-3, 4) * v, v};
    case SurfaceLine::L4: return {Rational(125, 16) * v, u, Rational(-5, 4) * v, v};
    case SurfaceLine::L5: return {u, v, Rational(0), Rational(0)};
  }
  return {};
}

std::optional<CurveMatch> consistency_with_curve(const SurfacePoint& p) {
  std::optional<Rational> t = recover_t(p);
  if (!t || t->is_zero() || *t == kBadT) return std::nullopt;
  CurveCK c = curve_from_t(*t);
  return CurveMatch{*t, p, c.contains(p.rationals())};
}

MPoly t_eliminant() {
  auto [quadric, cubic] = t_curve_forms();
  return resultant_in(4, quadric, cubic).drop_variable(4);
}

}  // namespace quintic
