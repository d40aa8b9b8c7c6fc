#include "hyperflex/family.hpp"

#include <sstream>

namespace hfx {

namespace {

// S1 = 27 Q^2 - 4 P^3, S2 = -Q'^3 + P P'^2 Q' - Q P'^3 over any field context.
// S1(x0) = 0  ⟺  y^3 - P(x0) y - Q(x0) has a repeated root (all characteristics);
// S2(x0) = 0  ⟺  the y-linear partial -P'(x0) y - Q'(x0) shares a root with the
// cubic (or vanishes identically at x0). Every singular x0 is a root of both.
template <class F>
std::pair<PolyOf<F>, PolyOf<F>> elimination_pair(const F& K, const PolyOf<F>& P,
                                                 const PolyOf<F>& Q) {
  auto Pd = pderiv(K, P), Qd = pderiv(K, Q);
  auto S1 = psub(K, pscal(K, pmul(K, Q, Q), K.from_long(27)),
                 pscal(K, pmul(K, pmul(K, P, P), P), K.from_long(4)));
  auto Qd2 = pmul(K, Qd, Qd);
  auto Pd2 = pmul(K, Pd, Pd);
  auto S2 = padd(K, pneg(K, pmul(K, Qd2, Qd)),
                 psub(K, pmul(K, pmul(K, P, Pd2), Qd), pmul(K, pmul(K, Q, Pd2), Pd)));
  return {S1, S2};
}

// common y-root test for (G, G_y, G_x) specialized at a point of a field L
template <class L>
bool candidate_singular(const L& K, const typename L::Elem& Pv, const typename L::Elem& Qv,
                        const typename L::Elem& Ppv, const typename L::Elem& Qpv) {
  PolyOf<L> g = {K.neg(Qv), K.neg(Pv), K.zero(), K.one()};
  PolyOf<L> gy = {K.neg(Pv), K.zero(), K.from_long(3)};
  PolyOf<L> gx = {K.neg(Qpv), K.neg(Ppv)};
  ptrim(K, gy);  // collapses in characteristic 3
  ptrim(K, gx);  // may vanish identically in characteristic 2
  auto r = pgcd(K, g, gy);
  if (pdeg(r) < 1) return false;
  r = pgcd(K, r, gx);  // pgcd(r, 0) = r
  return pdeg(r) >= 1;
}

}  // namespace

FamilyPoint parse_family_point(const std::string& csv) {
  FamilyPoint b;
  std::string s;
  std::stringstream ss(csv);
  int i = 0;
  while (std::getline(ss, s, ',')) {
    size_t a = s.find_first_not_of(" \t");
    size_t z = s.find_last_not_of(" \t");
    if (a == std::string::npos) throw std::invalid_argument("family point: empty coordinate");
    s = s.substr(a, z - a + 1);
    if (i >= 6) throw std::invalid_argument("family point: expected 6 coordinates");
    try {
      b.v[i] = Int(s);
    } catch (const std::exception&) {
      throw std::invalid_argument("family point: bad integer '" + s + "'");
    }
    ++i;
  }
  if (i != 6) throw std::invalid_argument("family point: expected 6 coordinates");
  return b;
}

std::string family_point_csv(const FamilyPoint& b) {
  std::string out;
  for (int i = 0; i < 6; ++i) {
    if (i) out += ",";
    out += b.v[i].get_str();
  }
  return out;
}

FamilyPoint family_scale(const FamilyPoint& b, const Int& lambda) {
  FamilyPoint r;
  for (int i = 0; i < 6; ++i) r.v[i] = b.v[i] * ipow(lambda, (unsigned long)kFamilyWeights[i]);
  return r;
}

bool height_less_than(const FamilyPoint& b, const Int& a) {
  if (a < 1) throw std::invalid_argument("height_less_than: bound must be >= 1");
  for (int i = 0; i < 6; ++i) {
    Int lhs = ipow(abs(b.v[i]), 72);
    if (lhs >= ipow(a, (unsigned long)kFamilyWeights[i])) return false;
  }
  return true;
}

bool is_minimal(const FamilyPoint& b) {
  if (b.is_zero()) return false;
  if (b.v[1] < 0) return false;
  if (b.v[1] == 0 && b.v[4] < 0) return false;
  int first = 0;
  while (b.v[first] == 0) ++first;
  if (abs(b.v[first]) == 1) return true;
  for (const Int& q : prime_factors(b.v[first])) {
    bool all = true;
    for (int i = 0; i < 6 && all; ++i) {
      if (b.v[i] == 0) continue;
      Int qw = ipow(q, (unsigned long)kFamilyWeights[i]);
      if (!mpz_divisible_p(b.v[i].get_mpz_t(), qw.get_mpz_t())) all = false;
    }
    if (all) return false;
  }
  return true;
}

TrigonalAffineForm trigonal_affine_form(const FamilyPoint& b) {
  TrigonalAffineForm f;
  f.P = {b.v[3], b.v[1], b.v[0]};
  ztrim(f.P);
  f.Q = {b.v[5], b.v[4], b.v[2], Int(0), Int(1)};
  return f;
}

PlaneQuarticForm homogenize(const FamilyPoint& b) {
  ZRing zr;
  PlaneQuarticForm F = PlaneQuarticForm::zero(zr, 4);
  auto set = [&](int i, int j, const Int& c) { F.c[tform_index<ZRing>(4, i, j)] = c; };
  set(0, 3, Int(1));       // y^3 z
  set(4, 0, Int(-1));      // -x^4
  set(2, 1, -b.v[0]);      // -p2 x^2 y z
  set(1, 1, -b.v[1]);      // -p5 x y z^2
  set(0, 1, -b.v[3]);      // -p8 y z^3
  set(2, 0, -b.v[2]);      // -p6 x^2 z^2
  set(1, 0, -b.v[4]);      // -p9 x z^3
  set(0, 0, -b.v[5]);      // -p12 z^4
  return F;
}

Int discriminant(const FamilyPoint& b) {
  ZRing zr;
  auto F = homogenize(b);
  auto Fx = tform_partial(zr, F, 0);
  auto Fy = tform_partial(zr, F, 1);
  auto Fz = tform_partial(zr, F, 2);
  Int res = macaulay_resultant_ternary(Fx, Fy, Fz);
  return exact_div(res, ipow(Int(2), 14));
}

bool is_smooth_fq(const FqField& K, const FamilyPoint& b) {
  auto af = trigonal_affine_form(b);
  auto P = reduce_zpoly(K, af.P);
  auto Q = reduce_zpoly(K, af.Q);
  auto [S1, S2] = elimination_pair(K, P, Q);
  PolyOf<FqField> D;
  if (S1.empty() && S2.empty())
    throw std::logic_error("is_smooth_fq: both eliminants vanished");  // impossible
  if (S1.empty())
    D = pmonic(K, S2);
  else if (S2.empty())
    D = pmonic(K, S1);
  else
    D = pgcd(K, S1, S2);
  if (pdeg(D) == 0) return true;

  auto Pd = pderiv(K, P), Qd = pderiv(K, Q);
  for (const auto& [h, mult] : factor_univariate(K, D).factors) {
    if (pdeg(h) == 1) {
      auto x0 = K.neg(h[0]);  // h monic: x + c
      if (candidate_singular(K, peval(K, P, x0), peval(K, Q, x0), peval(K, Pd, x0),
                             peval(K, Qd, x0)))
        return false;
    } else {
      QuotField<FqField> L(K, h);
      auto x0 = L.gen();
      if (candidate_singular(L, peval_ext(L, P, x0), peval_ext(L, Q, x0), peval_ext(L, Pd, x0),
                             peval_ext(L, Qd, x0)))
        return false;
    }
  }
  return true;
}

namespace {

using YP = std::vector<QPoly>;  // polynomial in y with coefficients in Q[x]

void ystrip(YP& f) {
  while (!f.empty() && f.back().empty()) f.pop_back();
}

// Dynamic-evaluation gcd of A, B in (Q[x]/(M))[y]: Euclid, splitting M whenever
// a leading coefficient is a zero divisor. Emits (branch modulus, gcd) pairs
// covering all roots of M.
void d5_gcd2(QPoly M, YP A, YP B, std::vector<std::pair<QPoly, YP>>& out) {
  QField QQ;
  for (auto& c : A) c = pmod(QQ, c, M);
  for (auto& c : B) c = pmod(QQ, c, M);
  ystrip(A);
  ystrip(B);
  while (true) {
    if (B.empty()) {
      out.push_back({M, A});
      return;
    }
    QPoly g = pgcd(QQ, B.back(), M);
    if (pdeg(g) > 0) {  // zero divisor: split M = g * (M / g)
      QPoly M2 = pdivrem(QQ, M, g).first;
      d5_gcd2(g, A, B, out);
      if (pdeg(M2) > 0) d5_gcd2(M2, A, B, out);
      return;
    }
    auto [one, u, vv] = pext_gcd(QQ, B.back(), M);  // u * lc(B) ≡ 1 (mod M)
    YP R = A;
    while (R.size() >= B.size()) {
      QPoly c = pmod(QQ, pmul(QQ, R.back(), u), M);
      size_t k = R.size() - B.size();
      for (size_t i = 0; i < B.size(); ++i)
        R[i + k] = pmod(QQ, psub(QQ, R[i + k], pmul(QQ, c, B[i])), M);
      ystrip(R);
    }
    A = std::move(B);
    B = std::move(R);
  }
}

}  // namespace

bool is_smooth_q(const FamilyPoint& b) {
  QField QQ;
  auto af = trigonal_affine_form(b);
  QPoly P = to_qpoly(af.P), Q = to_qpoly(af.Q);
  auto [S1, S2] = elimination_pair(QQ, P, Q);
  QPoly D = pgcd(QQ, S1, S2);
  if (pdeg(D) == 0) return true;
  QPoly Ds = pdivrem(QQ, D, pgcd(QQ, D, pderiv(QQ, D))).first;  // squarefree part

  QPoly Pd = pderiv(QQ, P), Qd = pderiv(QQ, Q);
  YP g = {pneg(QQ, Q), pneg(QQ, P), {}, {Rat(1)}};
  YP gy = {pneg(QQ, P), {}, {Rat(3)}};
  YP gx = {pneg(QQ, Qd), pneg(QQ, Pd)};
  ystrip(gx);

  std::vector<std::pair<QPoly, YP>> stage1;
  d5_gcd2(Ds, g, gy, stage1);
  for (auto& [M, r1] : stage1) {
    if ((int)r1.size() - 1 < 1) continue;
    std::vector<std::pair<QPoly, YP>> stage2;
    d5_gcd2(M, r1, gx, stage2);
    for (auto& [M2, r2] : stage2)
      if ((int)r2.size() - 1 >= 1) return false;
  }
  return true;
}

long point_count(const FqField& K, const FamilyPoint& b) {
  Int q = K.q();
  if (!q.fits_ulong_p() || q.get_ui() > (1UL << 22))
    throw std::invalid_argument("point_count: field too large for exhaustive count");
  unsigned long qq = q.get_ui();
  auto af = trigonal_affine_form(b);
  auto P = reduce_zpoly(K, af.P);
  auto Q = reduce_zpoly(K, af.Q);
  long count = 1;  // the hyperflex at infinity (0:1:0)
  PolyOf<FqField> y = {K.zero(), K.one()};
  for (unsigned long i = 0; i < qq; ++i) {
    auto x0 = K.elem_by_index(i);
    PolyOf<FqField> cubic = {K.neg(peval(K, Q, x0)), K.neg(peval(K, P, x0)), K.zero(), K.one()};
    auto frob = ppowmod(K, y, q, cubic);
    auto r = pgcd(K, psub(K, frob, y), cubic);
    count += pdeg(r) >= 0 ? pdeg(r) : 0;  // distinct y-roots in F_q
  }
  return count;
}

bool is_smooth_fp(long p, const std::array<long, 6>& bl) {
  fp::P P = {fp::norml(bl[3], p), fp::norml(bl[1], p), fp::norml(bl[0], p)};
  fp::trim(P);
  fp::P Q = {fp::norml(bl[5], p), fp::norml(bl[4], p), fp::norml(bl[2], p), 0, 1};
  fp::P Pd = fp::deriv(P, p), Qd = fp::deriv(Q, p);
  fp::P Q2 = fp::mul(Q, Q, p), P3 = fp::mul(fp::mul(P, P, p), P, p);
  fp::P S1 = fp::sub(fp::scal(Q2, 27, p), fp::scal(P3, 4, p), p);
  fp::P Pd2 = fp::mul(Pd, Pd, p);
  fp::P t1 = fp::mul(fp::mul(Qd, Qd, p), Qd, p);      // Q'^3
  fp::P t2 = fp::mul(fp::mul(P, Pd2, p), Qd, p);      // P P'^2 Q'
  fp::P t3 = fp::mul(fp::mul(Q, Pd2, p), Pd, p);      // Q P'^3
  fp::P S2 = fp::sub(t2, fp::add(t1, t3, p), p);
  fp::P D;
  if (S1.empty() && S2.empty()) throw std::logic_error("is_smooth_fp: both eliminants vanished");
  if (S1.empty())
    D = fp::monic(S2, p);
  else if (S2.empty())
    D = fp::monic(S1, p);
  else
    D = fp::gcd(S1, S2, p);
  if (fp::deg(D) == 0) return true;
  // rare path: delegate to the generic tower solver
  FamilyPoint b;
  for (int i = 0; i < 6; ++i) b.v[i] = Int(bl[i]);
  return is_smooth_fq(FqField(p), b);
}

long point_count_fp(long p, const std::array<long, 6>& bl) {
  fp::P P = {fp::norml(bl[3], p), fp::norml(bl[1], p), fp::norml(bl[0], p)};
  fp::trim(P);
  fp::P Q = {fp::norml(bl[5], p), fp::norml(bl[4], p), fp::norml(bl[2], p), 0, 1};
  long count = 1;
  for (long x0 = 0; x0 < p; ++x0) {
    long Pv = fp::eval(P, x0, p), Qv = fp::eval(Q, x0, p);
    for (long y = 0; y < p; ++y) {
      long v = (long)(((__int128)y * y % p * y - (__int128)Pv * y % p - Qv) % p);
      if (v < 0) v += p;
      if (v == 0) ++count;
    }
  }
  return count;
}

std::array<Int, 6> box_bounds(const Int& a) {
  if (a < 1) throw std::invalid_argument("box_bounds: bound must be >= 1");
  std::array<Int, 6> N;
  for (int i = 0; i < 6; ++i) {
    Int aw = ipow(a, (unsigned long)kFamilyWeights[i]);
    Int r;
    mpz_root(r.get_mpz_t(), aw.get_mpz_t(), 72);
    if (ipow(r, 72) >= aw) r -= 1;  // strict: n^72 < a^w
    N[i] = r;
  }
  return N;
}

Int box_count(const Int& a) {
  auto N = box_bounds(a);
  Int prod = 1;
  for (int i = 0; i < 6; ++i) prod *= 2 * N[i] + 1;
  return prod;
}

unsigned long long enumerate_family(const Int& a, bool minimal_only,
                                    const std::function<void(const FamilyPoint&)>& cb) {
  auto N = box_bounds(a);
  std::array<long, 6> n;
  for (int i = 0; i < 6; ++i) {
    if (!N[i].fits_slong_p()) throw std::invalid_argument("enumerate_family: box too large");
    n[i] = N[i].get_si();
  }
  unsigned long long count = 0;
  bool need_point = minimal_only || (bool)cb;
  for (long a0 = -n[0]; a0 <= n[0]; ++a0)
    for (long a1 = -n[1]; a1 <= n[1]; ++a1)
      for (long a2 = -n[2]; a2 <= n[2]; ++a2)
        for (long a3 = -n[3]; a3 <= n[3]; ++a3)
          for (long a4 = -n[4]; a4 <= n[4]; ++a4)
            for (long a5 = -n[5]; a5 <= n[5]; ++a5) {
              if (need_point) {
                FamilyPoint b;
                b.v = {Int(a0), Int(a1), Int(a2), Int(a3), Int(a4), Int(a5)};
                if (minimal_only && !is_minimal(b)) continue;
                ++count;
                if (cb) cb(b);
              } else {
                ++count;
              }
            }
  return count;
}

}  // namespace hfx
