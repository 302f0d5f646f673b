#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quintic/mpoly.hpp"
#include "quintic/numberfield.hpp"
#include "quintic/trinomial.hpp"

namespace quintic {

/// Coordinates of beta = a + b*alpha + c*alpha^2 + d*alpha^3 + e*alpha^4.
enum CoordVar { kA = 0, kB, kC, kD, kE };
inline constexpr int kCoordVars = 5;

const std::vector<std::string>& coord_names();

/// The curve of beta in K whose characteristic polynomial has vanishing
/// x^4, x^3 and x^2 coefficients, as a subvariety of P^4 cut by the trace
/// hyperplane and then projected to the four surviving coordinates.
struct CurveCK {
  FieldPtr field;
  /// Set when the curve was built for x^5 + t x + t.
  std::optional<Rational> t;

  /// Char-poly coefficient conditions in all five coordinates.
  MPoly linear5;
  MPoly quadric5;
  MPoly cubic5;

  /// Coordinate removed through the linear condition and its value as a
  /// linear form in the remaining ones (5-variable ring, no occurrence of
  /// the eliminated variable).
  int eliminated = kE;
  MPoly elimination;

  /// The four surviving coordinates in increasing order, and the quadric
  /// and cubic as 4-variable forms in them.
  std::array<int, 4> free_vars{kA, kB, kC, kD};
  MPoly quadric;
  MPoly cubic;

  std::vector<std::string> free_names() const;
  /// Full beta coordinates for a point given in the free variables.
  Coords lift(const std::array<Rational, 4>& p) const;
  bool contains(const std::array<Rational, 4>& p) const;
};

/// Primitive integer projective point, first nonzero coordinate positive.
struct CurvePoint {
  std::array<Integer, 4> coords;

  /// Scales a nonzero rational 4-tuple to its normalized primitive form.
  static CurvePoint from_rationals(const std::array<Rational, 4>& p);
  std::array<Rational, 4> rationals() const;
  Integer height() const;
  std::string str() const;
  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

/// Height first, then lexicographic.
bool operator<(const CurvePoint& x, const CurvePoint& y);

/// The t-curve quadric and cubic in (a, b, c, d, t).
std::pair<MPoly, MPoly> t_curve_forms();

/// Forms for K = Q[x]/(x^5 + t x + t), eliminating e = 5a/(4t).
/// Throws DomainError for t = 0 and t = -3125/256.
CurveCK curve_from_t(const Rational& t);

/// Generic construction from traces of the symbolic beta. The eliminated
/// variable is the one whose trace coefficient is largest in absolute value
/// (ties go to the later coordinate) unless `eliminate` forces one.
/// Throws UsageError for reducible g.
CurveCK curve_from_field(const UniPoly& g, std::optional<int> eliminate = std::nullopt);

/// A point with beta in Q (reported instead of a trinomial).
class DegeneratePoint : public DomainError {
 public:
  using DomainError::DomainError;
};

struct PointImage {
  FieldElement beta;
  Trinomial trinomial;
  EquivClass cls;
  /// (gamma^5 : delta^4) as a primitive integer pair, second entry >= 0.
  std::pair<Integer, Integer> rho;
};

/// Throws UsageError when P is not on C, DegeneratePoint when beta is rational.
PointImage point_to_trinomial(const CurveCK& C, const CurvePoint& P);

/// Throws UsageError when char_poly(beta) is not x^5 + r x + s.
CurvePoint trinomial_to_point(const CurveCK& C, const FieldElement& beta);

/// x^10 - 3t x^6 - 11t x^5 - 4t^2 x^2 + 4t^2 x - t^2. Throws DomainError for t = 0.
UniPoly field_L_polynomial(const Rational& t);

struct SearchOptions {
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
  /// Restrict the three enumerated coordinates to [lo, hi] each (inclusive);
  /// the union over a partition of [-H, H]^3 equals the full search.
  std::optional<std::array<std::pair<long, long>, 3>> box;
};

struct SearchResult {
  /// Solved coordinate (index into free_vars) and the enumerated ones.
  int solved = 0;
  std::vector<CurvePoint> points;
  std::vector<CurvePoint> degenerate;
};

/// All primitive points of height <= height_bound, sorted.
SearchResult point_search(const CurveCK& C, long height_bound, const SearchOptions& opts = {});

}  // namespace quintic
