#include "quintic/reference_suite.hpp"

#include <random>
#include <sstream>

#include "quintic/curve.hpp"
#include "quintic/elliptic.hpp"
#include "quintic/factor.hpp"
#include "quintic/families.hpp"
#include "quintic/galois.hpp"
#include "quintic/integer_factor.hpp"
#include "quintic/resultant.hpp"
#include "quintic/surface.hpp"

namespace quintic {

namespace {

using Rng = std::mt19937_64;

Rational random_rational(Rng& rng, long num_bound, long den_bound) {
  std::uniform_int_distribution<long> n(-num_bound, num_bound), d(1, den_bound);
  const long num = n(rng);
  return Rational(num, d(rng));
}

Rational random_nonzero(Rng& rng, long num_bound, long den_bound) {
  for (;;) {
    Rational r = random_rational(rng, num_bound, den_bound);
    if (!r.is_zero()) return r;
  }
}

UniPoly monic_trinomial(long a, long b) { return Trinomial{Rational(a), Rational(b)}.poly(); }

// Failures replace the summary in the rendered detail.
struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  std::string failures;
  void fail(const std::string& why) {
    failures += (ok ? "" : "; ") + why;
    ok = false;
  }
};

CriterionResult finish(int id, const char* name, Outcome& o) {
  return {id, name, o.ok, o.ok ? o.detail.str() : o.failures};
}

CriterionResult c1(const SuiteOptions& opts) {
  Outcome o;
  const Trinomial f{Rational(-5), Rational(12)};
  const EquivClass cls = equiv_class(f);
  const Rational t(-3125, 20736);
  GaloisGuess g = galois_type_heuristic(f, opts.prime_bound);
  o.detail << "x^5 - 5x + 12: class " << cls.str() << ", heuristic " << to_string(g.group);
  if (!(cls.kind == ClassKind::Generic && cls.value == t)) o.fail("class " + cls.str() + " != generic(-3125/20736)");
  return finish(1, "equivalence parameter", o);
}

struct ExpectedPoint {
  std::array<Rational, 4> p;
  Trinomial tri;
};

std::vector<ExpectedPoint> pure_field_points() {
  auto q = [](long n, long d) { return Rational(n, d); };
  const Rational t(6, 5);
  return {
      {{q(0, 1), q(1, 1), q(0, 1), q(0, 1)}, t_form(t)},
      {{q(-168, 55), q(9, 11), q(19, 11), q(1, 1)}, {Rational(0), Rational(-18)}},
      {{q(36, 35), q(-30, 7), q(24, 7), q(1, 1)}, {Rational(0), Rational(-432)}},
      {{q(-22, 15), q(-7, 6), q(-5, 4), q(1, 1)}, {Rational(0), Rational(-324)}},
      {{q(-8, 65), q(20, 39), q(-16, 39), q(1, 1)}, {Rational(0), Rational(-24)}},
  };
}

CriterionResult c2(const SuiteOptions& opts) {
  Outcome o;
  const CurveCK c = curve_from_t(Rational(6, 5));
  SearchOptions so;
  so.threads = opts.threads;
  SearchResult res = point_search(c, opts.height_bound, so);
  o.detail << res.points.size() << " points up to height " << opts.height_bound << ":";
  for (const auto& e : pure_field_points()) {
    CurvePoint p = CurvePoint::from_rationals(e.p);
    const EquivClass want = equiv_class(e.tri);
    o.detail << " " << p.str() << "->" << want.str();
    if (std::find(res.points.begin(), res.points.end(), p) == res.points.end()) {
      o.fail("missing " + p.str());
      continue;
    }
    const EquivClass got = point_to_trinomial(c, p).cls;
    if (!(got == want)) o.fail(p.str() + " maps to " + got.str() + ", expected " + want.str());
  }
  return finish(2, "point recovery for t = 6/5", o);
}

CriterionResult c3(const SuiteOptions& opts) {
  Outcome o;
  int certified = 0;
  auto run = [&](const FieldPtr& k, const UniPoly& f) {
    RootSearchResult r = has_root_in_field(f, k, opts.precision_bits, opts.denominator_bound);
    if (r.status != RootStatus::Certificate || !r.root) {
      o.fail(f.str() + ": " + to_string(r.status));
      return;
    }
    if (!evaluate(f, *r.root).is_zero()) {
      o.fail(f.str() + ": certificate does not re-verify");
      return;
    }
    ++certified;
  };
  FieldPtr k18 = NumberField::create(monic_trinomial(0, -18), opts.precision_bits);
  for (const auto& e : pure_field_points()) run(k18, e.tri.poly());
  const long f1_family[8][2] = {{75, 105},       {-75, 465},       {-1125, 3825},  {-2025, 65205},
                             {2025, 10665},   {-10125, 83025},  {28125, -39375}, {-3410625, 86685375}};
  FieldPtr k1 = NumberField::create(monic_trinomial(f1_family[0][0], f1_family[0][1]), opts.precision_bits);
  for (const auto& ab : f1_family) run(k1, monic_trinomial(ab[0], ab[1]));
  o.detail << certified << "/13 certificates verified exactly";
  return finish(3, "root certificates", o);
}

CriterionResult c4(const SuiteOptions& opts) {
  Outcome o;
  Rng rng(opts.seed ^ 4);
  TrinomialPair two = two_trinomial_family(Rational(2));
  if (!(two.f == ScaledTrinomial{Rational(40), Rational(-10), Rational(-4)}) ||
      !(two.h == ScaledTrinomial{Rational(20), Rational(145), Rational(-394)}))
    o.fail("a = 2 gives " + two.f.str() + " / " + two.h.str());
  int checked = 0;
  std::vector<Rational> params{Rational(2)};
  while (params.size() < 26) {
    Rational a = random_rational(rng, 60, 12);
    if (a.is_zero() || a == Rational(1) || a == Rational(-8)) continue;
    params.push_back(a);
  }
  for (const auto& a : params) {
    if (!verify_pair(two_trinomial_family(a))) o.fail("identity fails at a = " + a.str());
    ++checked;
  }
  o.detail << "h(beta) = 0 exactly for " << checked << " parameters incl. a = 2 (" << two.f.str() << " -> "
                     << two.h.str() << ")";
  return finish(4, "two-trinomial identity", o);
}

CriterionResult c5(const SuiteOptions& opts) {
  Outcome o;
  Rng rng(opts.seed ^ 5);
  for (int i = 0; i < 200; ++i) {
    Trinomial f{random_rational(rng, 1000, 50), random_rational(rng, 1000, 50)};
    if (trinomial_disc(f) != discriminant(f.poly())) o.fail("mismatch at " + f.str());
  }
  const Trinomial bad = t_form(Rational(-3125, 256));
  if (!trinomial_disc(bad).is_zero() || !discriminant(bad.poly()).is_zero())
    o.fail("discriminant nonzero at a = b = -3125/256");
  o.detail << "256a^5 + 3125b^4 = resultant discriminant on 200 trinomials; zero at a = b = -3125/256";
  return finish(5, "discriminant closed form", o);
}

CriterionResult c6(const SuiteOptions& opts) {
  Outcome o;
  Rng rng(opts.seed ^ 6);
  const long bound = std::min(opts.prime_bound, 499L);
  int weber = 0, dihedral = 0;
  while (weber < 10) {
    Trinomial f = weber_family(random_rational(rng, 40, 9));
    if (!is_irreducible(f.poly())) continue;
    ++weber;
    for (const auto& [t, n] : cycle_type_census(f.poly(), bound))
      if (!group_has_cycle_type(GaloisGroup::F20, t)) o.fail(f.str() + " has cycle type " + cycle_type_str(t));
  }
  while (dihedral < 10) {
    Rational s = random_nonzero(rng, 40, 9);
    Trinomial f = dihedral_family(s);
    if (!is_irreducible(f.poly())) continue;
    ++dihedral;
    for (const auto& [t, n] : cycle_type_census(f.poly(), bound))
      if (!group_has_cycle_type(GaloisGroup::D10, t)) o.fail(f.str() + " has cycle type " + cycle_type_str(t));
    if (!is_rational_square(discriminant(f.poly()))) o.fail(f.str() + " has non-square discriminant");
  }
  o.detail << "10 Weber members within F20 cycle types, 10 dihedral members within D10 with square discriminant";
  return finish(6, "family cycle types", o);
}

CriterionResult c7(const SuiteOptions& opts) {
  Outcome o;
  Rng rng(opts.seed ^ 7);
  int samples = 0;
  for (auto l : {SurfaceLine::L1, SurfaceLine::L2, SurfaceLine::L3, SurfaceLine::L4, SurfaceLine::L5})
    for (int i = 0; i < 50; ++i) {
      auto p = line_point(l, random_nonzero(rng, 100, 20), random_nonzero(rng, 100, 20));
      ++samples;
      if (!on_surface(p)) {
        o.fail(std::string("line ") + line_info(l).equations + " leaves the surface");
        break;
      }
      const std::string want = line_info(l).t;
      if (want.empty() || l == SurfaceLine::L5) continue;
      const Rational den = Rational(32) * p[1] * p[3] + Rational(16) * p[2] * p[2] + Rational(40) * p[2] * p[3];
      const Rational num = Rational(5) * p[0] * p[0] - Rational(50) * p[0] * p[1];
      if (den.is_zero() && num.is_zero()) continue;  // base point of the pencil
      auto t = recover_t(p);
      const std::string got = t ? t->str() : "inf";
      if (got != want) o.fail(std::string("line ") + line_info(l).equations + " gives t = " + got);
    }
  for (auto c : {RationalCurve::R1, RationalCurve::R2, RationalCurve::R3, RationalCurve::R4, RationalCurve::R5}) {
    int n = 0;
    while (n < 50) {
      Rational s = random_rational(rng, 200, 30);
      std::array<Rational, 4> p;
      try {
        p = rational_curve_point(c, s);
      } catch (const UndefinedInput&) {
        continue;
      }
      ++n;
      ++samples;
      if (!on_surface(p)) {
        o.fail(std::string(to_string(c)) + " leaves the surface at s = " + s.str());
        break;
      }
    }
  }
  const MPoly e = t_eliminant();
  Rational unit;
  if (!e.divide_by_variable(0).proportional_to(surface_form(), &unit))
    o.fail("t-eliminant is not a * unit * form");
  o.detail << samples << " exact samples on X; t = 0, inf, -3125/256 on the annotated lines; Res_t = "
             << unit.str() << " * a * form";
  return finish(7, "surface", o);
}

CriterionResult c8(const SuiteOptions&) {
  Outcome o;
  const auto e0 = WeierstrassCurve::short_form(Rational(-675), Rational(-79650));
  const WeierstrassCurve e{0, -1, 0, -833, 109537};
  const Rational j = j_invariant(e0);
  auto d = quadratic_twist_factor(e0, e);
  o.detail << "j(E0) = " << j.str() << ", twist factor " << (d ? d->get_str() : "none");
  if (j != Rational(-25, 2)) o.fail("j(E0) = " + j.str());
  if (!d || *d != -10) o.fail("twist factor is not -10");
  return finish(8, "elliptic facts", o);
}

CriterionResult c9(const SuiteOptions& opts) {
  Outcome o;
  SearchOptions so;
  so.threads = opts.threads;
  struct Job {
    CurveCK curve;
    long height;
    std::string label;
  };
  std::vector<Job> jobs;
  jobs.push_back({curve_from_t(Rational(6, 5)), opts.height_bound, "t = 6/5"});
  jobs.push_back({curve_from_t(Rational(-3125, 20736)), std::min(opts.height_bound, 100L), "t = -3125/20736"});
  jobs.push_back({curve_from_field(monic_trinomial(0, -18)), 12, "x^5 - 18"});
  jobs.push_back({curve_from_field(monic_trinomial(75, 105)), 30, "x^5 + 75x + 105"});
  for (const auto& job : jobs) {
    SearchResult r = point_search(job.curve, job.height, so);
    o.detail << (&job != &jobs.front() ? ", " : "") << job.label << ": " << r.points.size();
    for (const auto& p : r.points) {
      UniPoly cp = char_poly(job.curve.field->element(job.curve.lift(p.rationals())));
      if (!cp.coeff(4).is_zero() || !cp.coeff(3).is_zero() || !cp.coeff(2).is_zero())
        o.fail(job.label + " " + p.str() + " has char poly " + cp.str());
    }
  }
  o.detail << " points, all with vanishing x^4, x^3, x^2 coefficients";
  return finish(9, "power-sum invariant of search output", o);
}

}  // namespace

CriterionResult run_criterion(int id, const SuiteOptions& opts) {
  switch (id) {
    case 1: return c1(opts);
    case 2: return c2(opts);
    case 3: return c3(opts);
    case 4: return c4(opts);
    case 5: return c5(opts);
    case 6: return c6(opts);
    case 7: return c7(opts);
    case 8: return c8(opts);
    case 9: return c9(opts);
    case 10: {
      std::vector<CriterionResult> a, b;
      for (int i = 1; i < kCriteria; ++i) a.push_back(run_criterion(i, opts));
      for (int i = 1; i < kCriteria; ++i) b.push_back(run_criterion(i, opts));
      const bool same = render_report(a) == render_report(b);
      return {10, "determinism", same, same ? "two runs rendered identically" : "reruns differ"};
    }
    default: throw UsageError("no criterion " + std::to_string(id));
  }
}

std::vector<CriterionResult> run_reference_suite(const SuiteOptions& opts) {
  std::vector<CriterionResult> rows;
  for (int i = 1; i < kCriteria; ++i) rows.push_back(run_criterion(i, opts));
  // The rerun is compared against the rows already produced.
  std::vector<CriterionResult> again;
  for (int i = 1; i < kCriteria; ++i) again.push_back(run_criterion(i, opts));
  const bool same = render_report(rows) == render_report(again);
  rows.push_back({10, "determinism", same, same ? "two runs rendered identically" : "reruns differ"});
  return rows;
}

std::string render_report(const std::vector<CriterionResult>& rows) {
  std::ostringstream os;
  int passed = 0;
  for (const auto& r : rows) {
    os << "C" << r.id << (r.id < 10 ? "  " : " ") << (r.passed ? "PASS" : "FAIL") << "  " << r.name << ": "
       << r.detail << "\n";
    passed += r.passed;
  }
  os << passed << "/" << rows.size() << " criteria passed\n";
  return os.str();
}

}  // namespace quintic
