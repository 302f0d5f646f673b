#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "quintic/curve.hpp"
#include "quintic/errors.hpp"

namespace quintic {

namespace {

using i128 = __int128;

bool exact_sqrt(i128 d, i128& root) {
  if (d < 0) return false;
  // Squares mod 64 occupy 12 residues.
  constexpr std::uint64_t kSq64 = 0x0202021202030213ULL;
  if (!((kSq64 >> static_cast<unsigned>(d & 63)) & 1)) return false;
  i128 r = static_cast<i128>(std::sqrt(static_cast<long double>(d)));
  while (r > 0 && r * r > d) --r;
  while ((r + 1) * (r + 1) <= d) ++r;
  root = r;
  return r * r == d;
}

bool exact_sqrt(const Integer& d, Integer& root) {
  if (d < 0 || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  mpz_sqrt(root.get_mpz_t(), d.get_mpz_t());
  return true;
}

Integer to_integer(i128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  Integer hi = static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64));
  Integer lo = static_cast<unsigned long>(static_cast<std::uint64_t>(u));
  Integer r = (hi << 64) + lo;
  return neg ? Integer(-r) : r;
}

Integer to_integer(const Integer& v) { return v; }

template <class T>
T from_integer(const Integer& v);
template <>
i128 from_integer<i128>(const Integer& v) {
  Integer a = abs(v);
  i128 r = 0;
  for (int shift = static_cast<int>(mpz_sizeinbase(a.get_mpz_t(), 2)) - 1; shift >= 0; --shift)
    r = (r << 1) | static_cast<i128>(mpz_tstbit(a.get_mpz_t(), static_cast<mp_bitcnt_t>(shift)));
  return v < 0 ? -r : r;
}
template <>
Integer from_integer<Integer>(const Integer& v) { return v; }

// Quadric as A v^2 + (sum B_j w_j) v + sum_{j<=k} C_jk w_j w_k, integer coefficients.
struct IntQuadric {
  int solved = 0;
  std::array<int, 3> others{};
  Integer A;
  std::array<Integer, 3> B;
  std::array<std::array<Integer, 3>, 3> C;  // upper triangle
};

IntQuadric integer_quadric(const MPoly& q) {
  IntQuadric iq;
  auto sq = [&](int i) {
    MPoly::Exponents e{};
    e[static_cast<std::size_t>(i)] = 2;
    return q.coeff(e);
  };
  int solved = -1;
  for (int i = 0; i < 4 && solved < 0; ++i)
    if (!sq(i).is_zero()) solved = i;
  for (int i = 0; i < 4 && solved < 0; ++i)
    if (q.degree_in(i) > 0) solved = i;
  if (solved < 0) throw DomainError("point_search: quadric vanishes identically");
  iq.solved = solved;
  int j = 0;
  for (int i = 0; i < 4; ++i)
    if (i != solved) iq.others[static_cast<std::size_t>(j++)] = i;

  Integer l = 1;
  for (const auto& [e, k] : q.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), k.den().get_mpz_t());
  auto co = [&](int x, int y) {
    MPoly::Exponents e{};
    ++e[static_cast<std::size_t>(x)];
    ++e[static_cast<std::size_t>(y)];
    return (q.coeff(e) * Rational(l)).num();
  };
  iq.A = co(solved, solved);
  for (std::size_t a = 0; a < 3; ++a) {
    iq.B[a] = co(solved, iq.others[a]);
    for (std::size_t b = a; b < 3; ++b) iq.C[a][b] = co(iq.others[a], iq.others[b]);
  }
  return iq;
}

bool fits_i128(const IntQuadric& q, long h) {
  Integer H = h, bmax = 0, cmax = 0;
  for (std::size_t a = 0; a < 3; ++a) {
    bmax += abs(q.B[a]) * H;
    for (std::size_t b = a; b < 3; ++b) cmax += abs(q.C[a][b]) * H * H;
  }
  Integer bound = bmax * bmax + 4 * abs(q.A) * cmax + 4 * abs(q.A) * H + bmax;
  return mpz_sizeinbase(bound.get_mpz_t(), 2) < 120;
}

struct Candidate {
  std::array<Integer, 4> p;
};

template <class T>
void scan_slice(const IntQuadric& iq, long h, long w0, std::pair<long, long> r1, std::pair<long, long> r2,
                std::vector<Candidate>& out) {
  const T A = from_integer<T>(iq.A);
  std::array<T, 3> B;
  std::array<std::array<T, 3>, 3> C{};
  for (std::size_t a = 0; a < 3; ++a) {
    B[a] = from_integer<T>(iq.B[a]);
    for (std::size_t b = a; b < 3; ++b) C[a][b] = from_integer<T>(iq.C[a][b]);
  }
  const T H = h;
  auto emit = [&](const T& v, long x1, long x2) {
    std::array<Integer, 4> p;
    p[static_cast<std::size_t>(iq.solved)] = to_integer(v);
    p[static_cast<std::size_t>(iq.others[0])] = w0;
    p[static_cast<std::size_t>(iq.others[1])] = x1;
    p[static_cast<std::size_t>(iq.others[2])] = x2;
    out.push_back({p});
  };
  const T W0 = w0;
  for (long x1 = r1.first; x1 <= r1.second; ++x1) {
    if (w0 == 0 && x1 < 0) continue;
    const T X1 = x1;
    const T b01 = B[0] * W0 + B[1] * X1;
    const T c01 = C[0][0] * W0 * W0 + C[0][1] * W0 * X1 + C[1][1] * X1 * X1;
    const T c2lin = C[0][2] * W0 + C[1][2] * X1;
    for (long x2 = r2.first; x2 <= r2.second; ++x2) {
      if (w0 == 0 && x1 == 0 && x2 <= 0) continue;
      const T X2 = x2;
      const T b = b01 + B[2] * X2;
      const T c = c01 + (c2lin + C[2][2] * X2) * X2;
      if (A != 0) {
        const T d = b * b - 4 * A * c;
        T s;
        if (!exact_sqrt(d, s)) continue;
        const T twoA = 2 * A;
        for (int sign : {1, -1}) {
          if (sign < 0 && s == 0) break;
          const T num = -b + (sign > 0 ? s : T(-s));
          if (num % twoA != 0) continue;
          const T v = num / twoA;
          if (v > H || v < -H) continue;
          emit(v, x1, x2);
        }
      } else if (b != 0) {
        if (c % b != 0) continue;
        const T v = -c / b;
        if (v > H || v < -H) continue;
        emit(v, x1, x2);
      } else if (c == 0) {
        for (long v = -h; v <= h; ++v) emit(T(v), x1, x2);
      }
    }
  }
}

}  // namespace

SearchResult point_search(const CurveCK& C, long height_bound, const SearchOptions& opts) {
  if (height_bound < 1) throw UsageError("point_search: height bound must be >= 1");
  const IntQuadric iq = integer_quadric(C.quadric);
  std::array<std::pair<long, long>, 3> ranges;
  ranges.fill({-height_bound, height_bound});
  if (opts.box)
    for (std::size_t i = 0; i < 3; ++i)
      ranges[i] = {std::max((*opts.box)[i].first, -height_bound), std::min((*opts.box)[i].second, height_bound)};

  // Only sign-normalized (w0, w1, w2) are scanned: w0 >= 0.
  const long lo0 = std::max(0L, ranges[0].first), hi0 = ranges[0].second;
  const long slices = hi0 >= lo0 ? hi0 - lo0 + 1 : 0;
  std::vector<std::vector<Candidate>> found(static_cast<std::size_t>(std::max(0L, slices)));
  const bool small = fits_i128(iq, height_bound);

  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<long>(threads, std::max(1L, slices)));
  std::atomic<long> next{0};
  auto worker = [&] {
    for (long i; (i = next.fetch_add(1)) < slices;) {
      auto& out = found[static_cast<std::size_t>(i)];
      if (small)
        scan_slice<i128>(iq, height_bound, lo0 + i, ranges[1], ranges[2], out);
      else
        scan_slice<Integer>(iq, height_bound, lo0 + i, ranges[1], ranges[2], out);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  SearchResult res;
  res.solved = iq.solved;
  for (const auto& slice : found)
    for (const auto& cand : slice) {
      Integer g = 0;
      for (const auto& x : cand.p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      if (g != 1) continue;
      std::array<Rational, 4> r{Rational(cand.p[0]), Rational(cand.p[1]), Rational(cand.p[2]), Rational(cand.p[3])};
      if (!C.cubic.eval(r).is_zero()) continue;
      CurvePoint pt = CurvePoint::from_rationals(r);
      if (C.field->element(C.lift(r)).is_rational())
        res.degenerate.push_back(pt);
      else
        res.points.push_back(pt);
    }
  for (auto* v : {&res.points, &res.degenerate}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  return res;
}

}  // namespace quintic
