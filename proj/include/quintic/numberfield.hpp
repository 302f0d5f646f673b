#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "quintic/ball.hpp"
#include "quintic/unipoly.hpp"

namespace quintic {

class FieldElement;

inline constexpr int kFieldDegree = 5;
using Coords = std::array<Rational, kFieldDegree>;
/// Row-major 5x5 rational matrix.
using Matrix5 = std::array<std::array<Rational, kFieldDegree>, kFieldDegree>;

/// K = Q[x]/(g) for a monic quintic g, with basis 1, alpha, ..., alpha^4.
///
/// Instances are immutable and shared through shared_ptr so that elements
/// can refer back to their field cheaply. `create` insists on an irreducible
/// g and precomputes the five complex embeddings; `algebra` accepts any
/// squarefree-or-not quintic and builds only the ring structure (useful for
/// identities that should hold even when g happens to factor).
class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  static constexpr long kDefaultPrecision = 512;

  static std::shared_ptr<const NumberField> create(const UniPoly& g,
                                                   long precision_bits = kDefaultPrecision);
  static std::shared_ptr<const NumberField> algebra(const UniPoly& g);

  const UniPoly& defining_poly() const { return g_; }
  bool is_field() const { return is_field_; }
  long precision() const { return precision_; }
  /// Embeddings alpha -> root_i in canonical root order (empty for algebras).
  const std::vector<ComplexBall>& embeddings() const { return embeddings_; }
  int real_embedding_count() const;

  FieldElement alpha() const;
  FieldElement element(const Coords& c) const;
  FieldElement from_rational(const Rational& q) const;

  /// Coordinates of alpha^k for 0 <= k <= 8.
  const Coords& alpha_power(int k) const { return alpha_powers_[static_cast<std::size_t>(k)]; }
  /// Tr(alpha^k) for 0 <= k <= 8.
  const Rational& power_trace(int k) const { return power_traces_[static_cast<std::size_t>(k)]; }

  bool same_as(const NumberField& o) const { return this == &o || g_ == o.g_; }

 private:
  NumberField(UniPoly g, bool is_field, long precision);
  UniPoly g_;
  bool is_field_;
  long precision_;
  std::vector<ComplexBall> embeddings_;
  std::array<Coords, 9> alpha_powers_;
  std::array<Rational, 9> power_traces_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// c0 + c1 alpha + ... + c4 alpha^4.
class FieldElement {
 public:
  FieldElement(FieldPtr field, const Coords& c) : field_(std::move(field)), c_(c) {}

  const FieldPtr& field() const { return field_; }
  const Coords& coords() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  /// Throws UsageError when the operands live in different fields.
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator*(const Rational& s) const;
  FieldElement pow(int e) const;
  bool operator==(const FieldElement& o) const;

  Rational trace() const;
  /// Image under the i-th embedding (fields only).
  ComplexBall embed(std::size_t i) const;

  /// e.g. "2 + 3*a - a^4" (a = alpha).
  std::string str() const;

 private:
  void check_same(const FieldElement& o) const;
  FieldPtr field_;
  Coords c_;
};

/// Column j holds the coordinates of beta * alpha^j.
Matrix5 multiplication_matrix(const FieldElement& beta);

/// Characteristic polynomial of a rational 5x5 matrix (Faddeev-LeVerrier).
UniPoly char_poly(const Matrix5& m);

/// Monic degree-5 characteristic polynomial of multiplication by beta.
UniPoly char_poly(const FieldElement& beta);

/// f(beta) computed in K.
FieldElement evaluate(const UniPoly& f, const FieldElement& beta);

enum class RootStatus { Certificate, ProvenAbsent, Inconclusive };

struct RootSearchResult {
  RootStatus status = RootStatus::Inconclusive;
  std::optional<FieldElement> root;  // set iff Certificate; f(root) == 0 exactly
  std::string reason;
  long precision_bits = 0;
  Integer denominator_bound;
  /// Number of conjugation-respecting embedding matchings examined.
  int matchings_tried = 0;
};

/// Looks for beta in K with f(beta) = 0.
///
/// Every certificate is verified by exact evaluation. ProvenAbsent is only
/// returned for exact obstructions: no linear or quintic factor over Q, a
/// signature or discriminant-square mismatch, or every embedding matching
/// forcing a non-real coordinate. Anything else is Inconclusive.
RootSearchResult has_root_in_field(const UniPoly& f, const FieldPtr& field,
                                   long precision_bits = NumberField::kDefaultPrecision,
                                   const Integer& denominator_bound = Integer("1000000000000"));

const char* to_string(RootStatus s);

}  // namespace quintic
