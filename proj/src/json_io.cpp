#include "quintic/json_io.hpp"

namespace quintic::json {

ordered_json rational(const Rational& q) { return q.str(); }
ordered_json integer(const Integer& z) { return z.get_str(); }

Rational parse_rational(const ordered_json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("expected a rational string \"p/q\", got " + j.dump());
}

ordered_json poly(const UniPoly& p) {
  ordered_json c = ordered_json::array();
  for (int i = 0; i <= p.degree(); ++i) c.push_back(rational(p.coeff(i)));
  return {{"str", p.str()}, {"coeffs", c}};
}

ordered_json mpoly(const MPoly& p, const std::vector<std::string>& names) {
  ordered_json terms = ordered_json::array();
  // Descending exponent order reads like the printed form.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    ordered_json e = ordered_json::array();
    for (int i = 0; i < p.nvars(); ++i) e.push_back(it->first[static_cast<std::size_t>(i)]);
    terms.push_back({{"coeff", rational(it->second)}, {"exponents", e}});
  }
  return {{"str", p.str(names)}, {"vars", names}, {"terms", terms}};
}

ordered_json trinomial(const Trinomial& t) {
  return {{"a", rational(t.a)}, {"b", rational(t.b)}};
}

ordered_json scaled_trinomial(const ScaledTrinomial& t) {
  return {{"lead", rational(t.lead)}, {"a", rational(t.a)}, {"b", rational(t.b)}, {"str", t.str()}};
}

ordered_json equiv_class(const EquivClass& c) {
  return {{"kind", c.kind_name()}, {"value", rational(c.value)}};
}

ordered_json factorization(const Factorization& f) {
  ordered_json fs = ordered_json::array();
  for (const auto& [p, m] : f.factors) fs.push_back({{"factor", p.str()}, {"multiplicity", m}});
  return {{"unit", rational(f.unit)}, {"factors", fs}};
}

ordered_json galois(const GaloisGuess& g) {
  ordered_json census = ordered_json::object();
  for (const auto& [t, n] : g.evidence.cycle_types) census[cycle_type_str(t)] = n;
  return {{"group", to_string(g.group)},
          {"heuristic", true},
          {"discriminant_is_square", g.evidence.discriminant_is_square},
          {"prime_bound", g.evidence.prime_bound},
          {"good_primes", g.evidence.good_primes},
          {"cycle_types", census}};
}

ordered_json coords(const Coords& c) {
  ordered_json a = ordered_json::array();
  for (const auto& x : c) a.push_back(rational(x));
  return a;
}

ordered_json point(const CurvePoint& p) {
  ordered_json a = ordered_json::array();
  for (const auto& x : p.coords) a.push_back(integer(x));
  return a;
}

ordered_json curve(const CurveCK& c) {
  const auto& names = coord_names();
  ordered_json j;
  j["field"] = poly(c.field->defining_poly());
  if (c.t) j["t"] = rational(*c.t);
  j["eliminated"] = names[static_cast<std::size_t>(c.eliminated)];
  j["elimination"] = mpoly(c.elimination, names);
  j["variables"] = c.free_names();
  j["quadric"] = mpoly(c.quadric, c.free_names());
  j["cubic"] = mpoly(c.cubic, c.free_names());
  j["trace_form"] = mpoly(c.linear5, names);
  j["quadric5"] = mpoly(c.quadric5, names);
  j["cubic5"] = mpoly(c.cubic5, names);
  return j;
}

ordered_json search_record(const CurvePoint& p, const PointImage& im) {
  return {{"point", point(p)},
          {"trinomial", trinomial(im.trinomial)},
          {"class", equiv_class(im.cls)},
          {"rho", {integer(im.rho.first), integer(im.rho.second)}}};
}

ordered_json root_search(const RootSearchResult& r) {
  ordered_json j;
  j["status"] = to_string(r.status);
  if (r.root) {
    j["root"] = coords(r.root->coords());
    j["root_str"] = r.root->str();
  }
  j["reason"] = r.reason;
  j["precision_bits"] = r.precision_bits;
  j["denominator_bound"] = integer(r.denominator_bound);
  j["matchings_tried"] = r.matchings_tried;
  return j;
}

ordered_json weierstrass(const WeierstrassCurve& e) {
  return {{"a1", rational(e.a1)}, {"a2", rational(e.a2)}, {"a3", rational(e.a3)},
          {"a4", rational(e.a4)}, {"a6", rational(e.a6)}};
}

ordered_json ec_point(const ECPoint& p) {
  if (p.infinity) return "O";
  return {rational(p.x), rational(p.y)};
}

}  // namespace quintic::json
