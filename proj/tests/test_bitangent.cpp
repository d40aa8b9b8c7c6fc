#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hyperflex/bitangent.hpp"
#include "hyperflex/factor.hpp"

#include <random>

using namespace hfx;
using namespace hfx::bitangent;

namespace {
const QField Q{};

FamilyPoint member(long p2, long p5, long p6, long p8, long p9, long p12) {
  FamilyPoint b;
  b.v = {Int(p2), Int(p5), Int(p6), Int(p8), Int(p9), Int(p12)};
  return b;
}
const FamilyPoint kRef = member(0, 0, 0, -1, 1, 1);

ZPoly reference_resultant() {
  ZPoly f(28, Int(0));
  f[0] = 4096;
  f[1] = 12288;
  f[3] = -126976;
  f[6] = 110592;
  f[7] = -165888;
  f[9] = -40704;
  f[10] = 70656;
  f[11] = -34560;
  f[15] = 17280;
  f[18] = 1344;
  f[19] = 480;
  f[27] = 1;
  return f;
}

// G(x, y) = y^3 - P(x) y - Q(x) evaluated at rationals
Rat curve_eval(const FamilyPoint& b, const Rat& x, const Rat& y) {
  TrigonalAffineForm t = trigonal_affine_form(b);
  Rat pv = peval(Q, to_qpoly(t.P), x), qv = peval(Q, to_qpoly(t.Q), x);
  return y * y * y - pv * y - qv;
}

FqField::Elem fq_of_rat(const FqField& K, const Rat& r) {
  return K.mul(K.from_int(Int(r.get_num())), K.inv(K.from_int(Int(r.get_den()))));
}

PolyOf<FqField> reduce_qpoly(const FqField& K, const QPoly& f) {
  PolyOf<FqField> r(f.size());
  for (size_t i = 0; i < f.size(); ++i) r[i] = fq_of_rat(K, f[i]);
  ptrim(K, r);
  return r;
}
}  // namespace

TEST_CASE("substituted quartic agrees with direct substitution") {
  std::mt19937_64 rng(71);
  for (int t = 0; t < 12; ++t) {
    FamilyPoint b;
    for (int i = 0; i < 6; ++i) b[i] = Int((long)(rng() % 7) - 3);
    auto m = substituted_quartic(b);
    CHECK(bp_deg(m[4]) == 0);
    CHECK(bp_eval(m[4], Rat(0), Rat(0)) == 1);
    Rat a0((long)(rng() % 9) - 4, 1 + (long)(rng() % 3));
    Rat beta0((long)(rng() % 9) - 4, 1 + (long)(rng() % 3));
    Rat x0((long)(rng() % 9) - 4, 1 + (long)(rng() % 3));
    a0.canonicalize();
    beta0.canonicalize();
    x0.canonicalize();
    Rat quartic(0), xp(1);
    for (int i = 0; i <= 4; ++i) {
      quartic += bp_eval(m[i], a0, beta0) * xp;
      xp *= x0;
    }
    CHECK(quartic == -curve_eval(b, x0, a0 * x0 + beta0));
  }
}

TEST_CASE("completing the square leaves exactly r1 x + r2") {
  std::mt19937_64 rng(73);
  for (int t = 0; t < 12; ++t) {
    FamilyPoint b;
    for (int i = 0; i < 6; ++i) b[i] = Int((long)(rng() % 7) - 3);
    auto m = substituted_quartic(b);
    TangencySystem ts = tangency_system(b);
    CHECK(bp_deg(ts.r1) <= 2);
    CHECK(bp_deg(ts.r2) == 3);
    Rat a0((long)(rng() % 9) - 4), beta0((long)(rng() % 9) - 4), x0((long)(rng() % 9) - 4);
    Rat m3 = bp_eval(m[3], a0, beta0), m2 = bp_eval(m[2], a0, beta0);
    Rat m1 = bp_eval(m[1], a0, beta0), m0 = bp_eval(m[0], a0, beta0);
    Rat c = m3 / 2, d = (m2 - c * c) / 2;
    Rat quartic = ((x0 * x0 + c * x0 + d) * (x0 * x0 + c * x0 + d)) +
                  bp_eval(ts.r1, a0, beta0) * x0 + bp_eval(ts.r2, a0, beta0);
    Rat direct = x0 * x0 * x0 * x0 + m3 * x0 * x0 * x0 + m2 * x0 * x0 + m1 * x0 + m0;
    CHECK(quartic == direct);
  }
}

TEST_CASE("leading beta coefficients") {
  TangencySystem ts = tangency_system(kRef);
  REQUIRE(ts.r1.size() == 3);
  CHECK(ts.r1[2] == QPoly{Rat(0), Rat(-3)});  // -3a
  REQUIRE(ts.r2.size() == 4);
  CHECK(ts.r2[3] == QPoly{Rat(-1)});
}

TEST_CASE("reference resultant") {
  BitangentResultant r = bitangent_resultant(kRef);
  CHECK(r.degree == 27);
  CHECK(r.primitive == reference_resultant());
  CHECK(peq(Q, r.monic, to_qpoly(reference_resultant())));
  CHECK(peq(Q, pmonic(Q, r.monic), r.monic));
  CHECK(zprimitive(clear_denominators(r.raw).first) == r.primitive);
}

TEST_CASE("cusp member collapses every slope to zero") {
  // y^3 = x^4 has the single tangency datum (a, beta) = (0, 0): the quartic
  // x^4 = (x^2)^2 is already a perfect square, so r1 and r2 share that root
  // and the slope resultant is exactly a^27. Degree 27 is preserved, so the
  // degree-collapse guard must not fire.
  BitangentResultant r = bitangent_resultant(member(0, 0, 0, 0, 0, 0));
  REQUIRE(zdeg(r.primitive) == 27);
  for (int i = 0; i < 27; ++i) CHECK(r.primitive[i] == 0);
  CHECK(r.primitive[27] == 1);
  CHECK(peq(QField{}, r.monic, to_qpoly(r.primitive)));
}

TEST_CASE("factorization patterns at the frozen primes") {
  GaloisReport g =
      galois_pattern_report(kRef, {2, 3, 5, 7, 11, 13, 1009, 10007});
  REQUIRE(g.primes.size() == 8);
  for (const auto& pr : g.primes) {
    CHECK_FALSE(pr.degree_drop);  // leading coefficient is 1
    int degsum = 0;
    for (auto [d, m] : pr.pattern) degsum += d * m;
    CHECK(degsum == 27);
    bool small = pr.p == 2 || pr.p == 3;
    CHECK(pr.squarefree == !small);
    CHECK(pr.ramified == small);
    if (pr.p == 2) CHECK(pr.pattern == std::vector<std::pair<int, int>>{{1, 27}});
    if (pr.p == 3)
      CHECK(pr.pattern == std::vector<std::pair<int, int>>{{3, 3}, {6, 3}});
  }
  REQUIRE(g.has_two_adic);
  REQUIRE(g.two_adic.np.segments.size() == 1);
  CHECK(g.two_adic.np.segments[0].slope == Rat(-4, 9));
  CHECK(g.two_adic.np.segments[0].length == 27);
  CHECK(g.two_adic.degree_divisibility == std::vector<long>{9});
  FqField k2(2);
  REQUIRE(g.two_adic.residuals.size() == 1);
  CHECK(peq(k2, g.two_adic.residuals[0], PolyOf<FqField>{{1}, {1}, {}, {1}}));
}

TEST_CASE("resultant roots are exactly the tangency slopes mod 10007") {
  FqField K(10007);
  std::mt19937_64 rng(79);
  int tested = 0;
  for (int t = 0; t < 20 && tested < 3; ++t) {
    FamilyPoint b;
    for (int i = 0; i < 6; ++i) b[i] = Int((long)(rng() % 5) - 2);
    if (discriminant(b) == 0) continue;
    BitangentResultant R;
    try {
      R = bitangent_resultant(b);
    } catch (const DegenerateFamilyMember&) {
      continue;
    }
    PolyOf<FqField> red = reduce_zpoly(K, R.primitive);
    REQUIRE(pdeg(red) == 27);
    auto fac = factor_univariate(K, red);
    const PolyOf<FqField>& h = fac.factors[0].first;  // smallest-degree factor
    QuotField<FqField> L(K, h);
    // canonical representative of a root of h (gen() is unreduced for degree 1)
    auto a0 = pdeg(h) == 1 ? L.lift(K.neg(h[0])) : L.gen();

    TangencySystem ts = tangency_system(b);
    auto beta_poly_at = [&](const BPoly& f, const PolyOf<FqField>& pt) {
      PolyOf<QuotField<FqField>> out;
      for (const QPoly& ci : f) out.push_back(peval_ext(L, reduce_qpoly(K, ci), pt));
      while (!out.empty() && L.is_zero(out.back())) out.pop_back();
      return out;
    };

    // at a root of the resultant, r1 and r2 share a beta-root
    auto g_root = pgcd(L, beta_poly_at(ts.r1, a0), beta_poly_at(ts.r2, a0));
    CHECK(pdeg(g_root) >= 1);

    // at a non-root, they cannot (the beta-leading coefficient of r2 is a unit)
    PolyOf<FqField> a1 = a0;
    for (int shift = 1; shift <= 30; ++shift) {
      a1 = L.add(a1, L.one());
      if (!L.is_zero(peval_ext(L, red, a1))) break;
    }
    REQUIRE_FALSE(L.is_zero(peval_ext(L, red, a1)));
    auto g_non = pgcd(L, beta_poly_at(ts.r1, a1), beta_poly_at(ts.r2, a1));
    CHECK(pdeg(g_non) == 0);
    ++tested;
  }
  CHECK(tested == 3);
}
