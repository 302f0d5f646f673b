#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "quintic/curve.hpp"
#include "quintic/elliptic.hpp"
#include "quintic/factor.hpp"
#include "quintic/galois.hpp"
#include "quintic/numberfield.hpp"
#include "quintic/trinomial.hpp"

namespace quintic::json {

using nlohmann::ordered_json;

/// Rationals travel as "p/q" strings; integers as decimal strings.
ordered_json rational(const Rational& q);
ordered_json integer(const Integer& z);
/// Accepts a string "p/q" or an integer JSON number. Throws ParseError.
Rational parse_rational(const ordered_json& j);

ordered_json poly(const UniPoly& p);
ordered_json mpoly(const MPoly& p, const std::vector<std::string>& names);
ordered_json trinomial(const Trinomial& t);
ordered_json scaled_trinomial(const ScaledTrinomial& t);
ordered_json equiv_class(const EquivClass& c);
ordered_json factorization(const Factorization& f);
ordered_json galois(const GaloisGuess& g);
ordered_json coords(const Coords& c);
ordered_json point(const CurvePoint& p);
ordered_json curve(const CurveCK& c);
/// {"point": [...], "trinomial": {...}, "class": {...}, "rho": [...]}.
ordered_json search_record(const CurvePoint& p, const PointImage& im);
ordered_json root_search(const RootSearchResult& r);
ordered_json weierstrass(const WeierstrassCurve& e);
ordered_json ec_point(const ECPoint& p);

}  // namespace quintic::json
