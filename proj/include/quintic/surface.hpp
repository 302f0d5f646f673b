#pragma once

#include <array>
#include <optional>
#include <string>

#include "quintic/curve.hpp"
#include "quintic/mpoly.hpp"

namespace quintic {

/// Same normalization as a curve point: primitive, first nonzero entry positive.
using SurfacePoint = CurvePoint;

/// The degree-6 form in (a, b, c, d) whose zero set is the surface X of
/// pairs (t, point of the t-curve) with t eliminated.
const MPoly& surface_form();

bool on_surface(const std::array<Rational, 4>& p);
bool on_surface(const SurfacePoint& p);

/// t = (5a^2 - 50ab) / (32bd + 16c^2 + 40cd); nullopt when the denominator
/// vanishes (the t = infinity line, and 0/0 points). Throws UsageError off X.
std::optional<Rational> recover_t(const std::array<Rational, 4>& p);
std::optional<Rational> recover_t(const SurfacePoint& p);

enum class RationalCurve { R1, R2, R3, R4, R5 };
/// Parameter-s curves on X; R3 is the one carrying the two-trinomial family.
/// Throws UndefinedInput when all four coordinates vanish at s.
std::array<Rational, 4> rational_curve_point(RationalCurve name, const Rational& s);
SurfacePoint rational_curve(RationalCurve name, const Rational& s);
RationalCurve parse_rational_curve(const std::string& name);
const char* to_string(RationalCurve c);

enum class SurfaceLine { L1, L2, L3, L4, L5 };
struct LineInfo {
  const char* equations;
  /// Value of t along the line; "inf" for the t = infinity line, empty when
  /// the line carries no single t.
  const char* t;
  bool singular;
};
const LineInfo& line_info(SurfaceLine l);
/// The point of line l with free parameters (u, v).
std::array<Rational, 4> line_point(SurfaceLine l, const Rational& u, const Rational& v);

struct CurveMatch {
  Rational t;
  CurvePoint point;
  /// Both t-curve forms vanish at the point.
  bool on_curve = false;
};

/// nullopt for degenerate points: t undefined, 0 or -3125/256.
/// Throws UsageError off X.
std::optional<CurveMatch> consistency_with_curve(const SurfacePoint& p);

/// Res_t of the t-curve quadric and cubic, t kept symbolic.
MPoly t_eliminant();

}  // namespace quintic
