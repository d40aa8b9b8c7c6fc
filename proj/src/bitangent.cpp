#include "hyperflex/bitangent.hpp"

#include "hyperflex/factor.hpp"

#include <algorithm>

namespace hfx::bitangent {

namespace {
const QField kQ{};
}  // namespace

BPoly bp_trim(BPoly f) {
  while (!f.empty() && f.back().empty()) f.pop_back();
  return f;
}

int bp_deg(const BPoly& f) { return (int)f.size() - 1; }

BPoly bp_add(const BPoly& f, const BPoly& g) {
  BPoly r(std::max(f.size(), g.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    QPoly s = i < f.size() ? f[i] : QPoly{};
    if (i < g.size()) s = padd(kQ, s, g[i]);
    r[i] = s;
  }
  return bp_trim(r);
}

BPoly bp_sub(const BPoly& f, const BPoly& g) {
  BPoly r(std::max(f.size(), g.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    QPoly s = i < f.size() ? f[i] : QPoly{};
    if (i < g.size()) s = psub(kQ, s, g[i]);
    r[i] = s;
  }
  return bp_trim(r);
}

BPoly bp_mul(const BPoly& f, const BPoly& g) {
  if (f.empty() || g.empty()) return {};
  BPoly r(f.size() + g.size() - 1);
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = 0; j < g.size(); ++j)
      r[i + j] = padd(kQ, r[i + j], pmul(kQ, f[i], g[j]));
  return bp_trim(r);
}

BPoly bp_scal(BPoly f, const Rat& s) {
  for (auto& c : f) c = pscal(kQ, c, s);
  return bp_trim(f);
}

QPoly bp_eval_beta(const BPoly& f, const Rat& t) {
  QPoly r;
  for (size_t i = f.size(); i-- > 0;) {
    r = pscal(kQ, r, t);
    r = padd(kQ, r, f[i]);
  }
  return r;
}

Rat bp_eval(const BPoly& f, const Rat& a0, const Rat& beta0) {
  return peval(kQ, bp_eval_beta(f, beta0), a0);
}

namespace {
QPoly qp(std::initializer_list<Rat> cs) {
  QPoly r(cs);
  ptrim(kQ, r);
  return r;
}
}  // namespace

std::array<BPoly, 5> substituted_quartic(const FamilyPoint& b) {
  const Rat p2(b[0]), p5(b[1]), p6(b[2]), p8(b[3]), p9(b[4]), p12(b[5]);
  // -(y^3 - P(x) y - Q(x)) at y = a x + β, collected in x:
  //   x^4 + m3 x^3 + m2 x^2 + m1 x + m0
  std::array<BPoly, 5> m;
  m[3] = bp_trim({qp({0, p2, 0, -1})});                       // a p2 - a^3
  m[2] = bp_trim({qp({p6, p5}), qp({p2, 0, -3})});            // p6 + a p5 + β(p2 - 3a^2)
  m[1] = bp_trim({qp({p9, p8}), qp({p5}), qp({0, -3})});      // p9 + a p8 + β p5 - 3aβ^2
  m[0] = bp_trim({qp({p12}), qp({p8}), {}, qp({Rat(-1)})});   // p12 + β p8 - β^3
  m[4] = {qp({Rat(1)})};
  return m;
}

TangencySystem tangency_system(const FamilyPoint& b) {
  std::array<BPoly, 5> m = substituted_quartic(b);
  // match against (x^2 + cx + d)^2 = x^4 + 2c x^3 + (c^2 + 2d) x^2 + 2cd x + d^2
  BPoly c = bp_scal(m[3], Rat(1, 2));
  BPoly d = bp_scal(bp_sub(m[2], bp_mul(c, c)), Rat(1, 2));
  TangencySystem sys;
  sys.r1 = bp_sub(m[1], bp_scal(bp_mul(c, d), Rat(2)));
  sys.r2 = bp_sub(m[0], bp_mul(d, d));
  return sys;
}

namespace {
// clear the fixed power-of-two denominators and convert to integer coefficients
std::vector<ZPoly> bp_clear(const BPoly& f, long mult) {
  std::vector<ZPoly> out(f.size());
  for (size_t i = 0; i < f.size(); ++i) {
    ZPoly zc(f[i].size());
    for (size_t j = 0; j < f[i].size(); ++j) {
      Rat v = f[i][j] * mult;
      v.canonicalize();
      if (v.get_den() != 1)
        throw std::logic_error("bitangent: denominator clearing failed");
      zc[j] = v.get_num();
    }
    ztrim(zc);
    out[i] = zc;
  }
  return out;
}
}  // namespace

BitangentResultant bitangent_resultant(const FamilyPoint& b) {
  TangencySystem sys = tangency_system(b);
  if (bp_deg(sys.r1) != 2 || bp_deg(sys.r2) != 3)
    throw std::logic_error("bitangent: unexpected β-degrees");
  // integer-cleared copies: 8 r1 and 64 r2 have integer coefficients, and
  // Res(8 r1, 64 r2) = 8^3 · 64^2 · Res(r1, r2) = 2^21 Res(r1, r2)
  std::vector<ZPoly> f = bp_clear(sys.r1, 8);
  std::vector<ZPoly> g = bp_clear(sys.r2, 64);
  auto mat = sylvester_matrix<ZPoly>(f, g, ZPoly{});
  ZPoly det = det_bareiss(ZxRing{}, mat);
  QPoly raw = pscal(kQ, to_qpoly(det), Rat(Int(1), ipow(Int(2), 21)));

  BitangentResultant out;
  out.raw = raw;
  out.degree = pdeg(raw);
  if (out.degree != 27)
    throw DegenerateFamilyMember(
        "degenerate family member: slope resultant has degree " + std::to_string(out.degree) +
        " (expected 27; singular curve or vertical bitangent)");
  auto [zraw, den] = clear_denominators(raw);
  (void)den;
  out.primitive = zprimitive(zraw);
  out.monic = pmonic(kQ, raw);
  return out;
}

GaloisReport galois_pattern_report(const FamilyPoint& b, const std::vector<long>& primes) {
  BitangentResultant res = bitangent_resultant(b);
  GaloisReport rep;
  rep.primitive = res.primitive;
  for (long p : primes) {
    PrimePatternReport pr;
    pr.p = p;
    FqField K(p);
    pr.degree_drop = mpz_divisible_ui_p(res.primitive.back().get_mpz_t(), (unsigned long)p) != 0;
    PolyOf<FqField> red = reduce_zpoly(K, res.primitive);
    pr.squarefree = false;
    if (pdeg(red) >= 1) {
      pr.pattern = factor_pattern(K, red);
      pr.squarefree = true;
      for (auto& [d, mult] : pr.pattern)
        if (mult > 1) pr.squarefree = false;
    }
    pr.ramified = !pr.squarefree || pr.degree_drop;
    rep.primes.push_back(pr);
    if (p == 2) {
      rep.has_two_adic = true;
      rep.two_adic.np = newton_polygon(res.monic, Int(2));
      for (const NPSegment& seg : rep.two_adic.np.segments) {
        rep.two_adic.residuals.push_back(residual_polynomial(res.monic, Int(2), seg));
        rep.two_adic.degree_divisibility.push_back(seg.e);
      }
    }
  }
  return rep;
}

}  // namespace hfx::bitangent
