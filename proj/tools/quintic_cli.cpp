// quintic: command-line front end. Rationals are "p/q" strings everywhere;
// coefficient lists are comma-separated and ascending (constant first).

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "quintic/curve.hpp"
#include "quintic/elliptic.hpp"
#include "quintic/factor.hpp"
#include "quintic/families.hpp"
#include "quintic/galois.hpp"
#include "quintic/json_io.hpp"
#include "quintic/reference_suite.hpp"
#include "quintic/resultant.hpp"
#include "quintic/surface.hpp"

using namespace quintic;
using quintic::json::ordered_json;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

struct RunConfig {
  long height_bound = 200;
  long precision_bits = 512;
  std::string denominator_bound = "1000000000000";
  long prime_bound = 500;
  unsigned threads = 0;
  std::string output;

  void validate() const {
    if (height_bound < 1 || precision_bits < 1 || prime_bound < 2)
      throw UsageError("bounds must be positive");
    if (Integer(denominator_bound) < 1) throw UsageError("denominator bound must be positive");
  }
  unsigned thread_count() const { return threads ? threads : std::max(1u, std::thread::hardware_concurrency()); }
};

std::vector<Rational> parse_list(const std::string& text, std::size_t expected, const char* what) {
  std::vector<Rational> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(Rational::parse(item));
  if (expected && v.size() != expected)
    throw ParseError(std::string(what) + " needs " + std::to_string(expected) + " comma-separated rationals");
  return v;
}

WeierstrassCurve parse_curve(const std::string& text) {
  auto v = parse_list(text, 0, "curve");
  if (v.size() == 2) return WeierstrassCurve::short_form(v[0], v[1]);
  if (v.size() != 5) throw ParseError("curve needs a1,a2,a3,a4,a6 or a4,a6");
  return {v[0], v[1], v[2], v[3], v[4]};
}

std::string t_string(const std::optional<Rational>& t) { return t ? t->str() : "inf"; }

class Cli {
 public:
  explicit Cli(std::ostream& out) : out_(out) {}

  void emit(const ordered_json& j) { out_ << j.dump(2) << "\n"; }
  void line(const ordered_json& j) { out_ << j.dump() << "\n"; }

  int classify(const std::string& a, const std::string& b, const RunConfig& cfg) {
    Trinomial f{Rational::parse(a), Rational::parse(b)};
    EquivClass cls = equiv_class(f);
    ordered_json j;
    j["trinomial"] = json::trinomial(f);
    j["poly"] = f.str();
    j["class"] = json::equiv_class(cls);
    if (cls.kind == ClassKind::Generic) j["t"] = json::rational(cls.value);
    j["discriminant"] = json::rational(trinomial_disc(f));
    Factorization fac = factor_over_Q(f.poly());
    j["irreducible"] = fac.is_irreducible();
    j["factorization"] = json::factorization(fac);
    j["galois"] = fac.is_irreducible() ? json::galois(galois_type_heuristic(f, cfg.prime_bound)) : ordered_json(nullptr);
    emit(j);
    return 0;
  }

  static CurveCK build_curve(const std::string& t, const std::string& g, const std::string& elim) {
    if (t.empty() == g.empty()) throw UsageError("give exactly one of --t or --g");
    if (!t.empty()) return curve_from_t(Rational::parse(t));
    std::optional<int> var;
    if (!elim.empty()) {
      const auto& names = coord_names();
      auto it = std::find(names.begin(), names.end(), elim);
      if (it == names.end()) throw UsageError("--eliminate expects one of a, b, c, d, e");
      var = static_cast<int>(it - names.begin());
    }
    return curve_from_field(UniPoly::parse_coeffs(g), var);
  }

  int curve(const std::string& t, const std::string& g, const std::string& elim) {
    emit(json::curve(build_curve(t, g, elim)));
    return 0;
  }

  int search(const std::string& t, const std::string& g, const std::string& elim, const RunConfig& cfg) {
    CurveCK c = build_curve(t, g, elim);
    SearchOptions so;
    so.threads = cfg.thread_count();
    SearchResult r = point_search(c, cfg.height_bound, so);
    for (const auto& p : r.points) line(json::search_record(p, point_to_trinomial(c, p)));
    for (const auto& p : r.degenerate) line({{"point", json::point(p)}, {"degenerate", true}});
    return 0;
  }

  int root_in_field(const std::string& g, const std::string& f, const RunConfig& cfg) {
    FieldPtr k = NumberField::create(UniPoly::parse_coeffs(g), cfg.precision_bits);
    RootSearchResult r =
        has_root_in_field(UniPoly::parse_coeffs(f), k, cfg.precision_bits, Integer(cfg.denominator_bound));
    ordered_json j;
    j["field"] = k->defining_poly().str();
    j["f"] = UniPoly::parse_coeffs(f).str();
    j["result"] = json::root_search(r);
    emit(j);
    return r.status == RootStatus::Inconclusive ? kExitInconclusive : 0;
  }

  int family(const std::string& name, const std::string& param) {
    const Rational p = Rational::parse(param);
    ordered_json j;
    j["family"] = name;
    j["param"] = json::rational(p);
    auto add_trinomial = [&](const Trinomial& f) {
      j["trinomial"] = json::trinomial(f);
      j["poly"] = f.str();
      j["class"] = json::equiv_class(equiv_class(f));
      j["irreducible"] = is_irreducible(f.poly());
    };
    if (name == "weber") {
      j["scaled"] = json::scaled_trinomial(weber_family_scaled(p));
      add_trinomial(weber_family(p));
    } else if (name == "dihedral") {
      add_trinomial(dihedral_family(p));
    } else if (name == "sw2") {
      RadicalFamilyMember m = sw2_family(p);
      j["radicand"] = json::rational(m.radicand);
      add_trinomial(m.trinomial);
    } else {
      TrinomialPair pr = two_trinomial_family(p);
      j["f"] = json::scaled_trinomial(pr.f);
      j["h"] = json::scaled_trinomial(pr.h);
      j["root"] = json::coords(pr.root);
      j["f_irreducible"] = pr.f_irreducible;
      const bool ok = verify_pair(pr);
      j["verified"] = ok;
      emit(j);
      return ok ? 0 : kExitFailure;
    }
    emit(j);
    return 0;
  }

  void surface_point(ordered_json& j, const std::array<Rational, 4>& p) {
    SurfacePoint sp = SurfacePoint::from_rationals(p);
    j["point"] = json::point(sp);
    const bool on = on_surface(sp);
    j["on_surface"] = on;
    j["t"] = on ? ordered_json(t_string(recover_t(sp))) : ordered_json(nullptr);
  }

  int surface_check(const std::string& point) {
    auto v = parse_list(point, 4, "--point");
    ordered_json j;
    surface_point(j, {v[0], v[1], v[2], v[3]});
    emit(j);
    return 0;
  }

  int surface_curve(const std::string& name, const std::string& s) {
    RationalCurve c = parse_rational_curve(name);
    const Rational sv = Rational::parse(s);
    ordered_json j;
    j["name"] = to_string(c);
    j["s"] = json::rational(sv);
    surface_point(j, rational_curve_point(c, sv));
    emit(j);
    return 0;
  }

  int elliptic_info(const std::string& curve) {
    WeierstrassCurve e = parse_curve(curve);
    ordered_json j;
    j["curve"] = json::weierstrass(e);
    for (auto [k, v] : {std::pair{"b2", e.b2()}, {"b4", e.b4()}, {"b6", e.b6()}, {"b8", e.b8()},
                        {"c4", e.c4()}, {"c6", e.c6()}, {"discriminant", e.discriminant()}})
      j[k] = json::rational(v);
    j["j"] = json::rational(j_invariant(e));
    emit(j);
    return 0;
  }

  int elliptic_twist(const std::string& curve, const std::string& other, const std::string& d) {
    WeierstrassCurve e = parse_curve(curve);
    if (other.empty() == d.empty()) throw UsageError("give exactly one of --other or --d");
    ordered_json j;
    j["curve"] = json::weierstrass(e);
    if (!d.empty()) {
      const Rational dv = Rational::parse(d);
      WeierstrassCurve t = quadratic_twist(e, dv);
      j["d"] = json::rational(dv);
      j["twist"] = json::weierstrass(t);
      j["j"] = json::rational(j_invariant(t));
    } else {
      WeierstrassCurve o = parse_curve(other);
      auto f = quadratic_twist_factor(e, o);
      j["other"] = json::weierstrass(o);
      j["twist_factor"] = f ? json::integer(*f) : ordered_json(nullptr);
    }
    emit(j);
    return 0;
  }

  int verify(const RunConfig& cfg) {
    SuiteOptions so;
    so.height_bound = cfg.height_bound;
    so.precision_bits = cfg.precision_bits;
    so.denominator_bound = Integer(cfg.denominator_bound);
    so.prime_bound = cfg.prime_bound;
    so.threads = cfg.thread_count();
    auto rows = run_reference_suite(so);
    out_ << render_report(rows);
    for (const auto& r : rows)
      if (!r.passed) return kExitFailure;
    return 0;
  }

 private:
  std::ostream& out_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quintic: trinomials x^5 + a x + b with a root in a quintic field"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key = value file with run settings");

  RunConfig cfg;
  app.add_option("--height-bound,--height", cfg.height_bound, "height bound for point search")->capture_default_str();
  app.add_option("--precision-bits", cfg.precision_bits, "working precision in bits")->capture_default_str();
  app.add_option("--denominator-bound", cfg.denominator_bound, "rational reconstruction bound")->capture_default_str();
  app.add_option("--prime-bound", cfg.prime_bound, "largest prime for cycle types")->capture_default_str();
  app.add_option("--threads", cfg.threads, "worker threads (0 = hardware)")->envname("QUINTIC_THREADS");
  app.add_option("--output,-o", cfg.output, "write to this file instead of stdout");

  std::string a, b, t, g, f, elim, param, point, name, s, curve, other, d;
  std::string family_name;

  auto* classify = app.add_subcommand("classify", "equivalence class, discriminant, Galois heuristic");
  classify->add_option("--a", a)->required();
  classify->add_option("--b", b)->required();

  auto* curve_cmd = app.add_subcommand("curve", "curve forms for a t-form or general quintic field");
  auto* search = app.add_subcommand("search", "rational points up to the height bound, one JSON line each");
  for (auto* sub : {curve_cmd, search}) {
    sub->add_option("--t", t, "t of x^5 + t x + t");
    sub->add_option("--g", g, "defining polynomial, ascending coefficients");
    sub->add_option("--eliminate", elim, "coordinate removed by the trace condition (with --g)");
  }

  auto* rif = app.add_subcommand("root-in-field", "root of f in Q[x]/(g), exactly verified");
  rif->add_option("--g", g)->required();
  rif->add_option("--f", f)->required();

  auto* family = app.add_subcommand("family", "explicit trinomial families");
  family->add_option("kind", family_name)->required()->check(CLI::IsMember({"weber", "dihedral", "sw2", "pair"}));
  family->add_option("--param", param)->required();

  auto* surface = app.add_subcommand("surface", "the degree-6 surface");
  surface->require_subcommand(1);
  auto* s_check = surface->add_subcommand("check", "membership and t of a point");
  s_check->add_option("--point", point, "a,b,c,d")->required();
  auto* s_curve = surface->add_subcommand("curve", "a point on one of R1..R5");
  s_curve->add_option("--name", name)->required();
  s_curve->add_option("--s", s)->required();

  auto* elliptic = app.add_subcommand("elliptic", "Weierstrass curve invariants and twists");
  elliptic->require_subcommand(1);
  auto* e_info = elliptic->add_subcommand("info", "invariants of a1,a2,a3,a4,a6 (or a4,a6)");
  e_info->add_option("--curve", curve)->required();
  auto* e_twist = elliptic->add_subcommand("twist", "twist by --d, or twist factor against --other");
  e_twist->add_option("--curve", curve)->required();
  e_twist->add_option("--other", other);
  e_twist->add_option("--d", d);

  auto* verify = app.add_subcommand("verify", "bundled reproduction suite");
  verify->require_subcommand(1);
  auto* v_paper = verify->add_subcommand("paper", "run all acceptance criteria");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    cfg.validate();
    std::ofstream file;
    if (!cfg.output.empty()) {
      file.open(cfg.output);
      if (!file) throw UsageError("cannot open " + cfg.output);
    }
    Cli cli(cfg.output.empty() ? std::cout : file);
    if (*classify) return cli.classify(a, b, cfg);
    if (*curve_cmd) return cli.curve(t, g, elim);
    if (*search) return cli.search(t, g, elim, cfg);
    if (*rif) return cli.root_in_field(g, f, cfg);
    if (*family) return cli.family(family_name, param);
    if (*s_check) return cli.surface_check(point);
    if (*s_curve) return cli.surface_curve(name, s);
    if (*e_info) return cli.elliptic_info(curve);
    if (*e_twist) return cli.elliptic_twist(curve, other, d);
    if (*v_paper) return cli.verify(cfg);
  } catch (const PrecisionExhausted& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
  }
  return kExitFailure;
}
