#include "hyperflex/factor.hpp"

#include <random>

namespace hfx {

namespace {

using FP = PolyOf<FqField>;

// p-th root of a polynomial whose derivative vanishes: f(x) = g(x^p) with
// g's coefficients the p-th roots (Frobenius inverses) of f's.
FP pth_root(const FqField& K, const FP& f) {
  FP g((f.size() + (size_t)K.p - 1) / (size_t)K.p, K.zero());
  for (size_t i = 0; i * (size_t)K.p < f.size(); ++i) g[i] = K.frobenius_inv(f[i * (size_t)K.p]);
  ptrim(K, g);
  return g;
}

// squarefree decomposition of monic f: list of (monic squarefree part, multiplicity)
void squarefree_decomp(const FqField& K, FP f, int mult, std::vector<std::pair<FP, int>>& out) {
  if (pdeg(f) <= 0) return;
  FP d = pderiv(K, f);
  if (d.empty()) {
    squarefree_decomp(K, pth_root(K, f), mult * (int)K.p, out);
    return;
  }
  FP c = pgcd(K, f, d);
  FP w = pdivrem(K, f, c).first;
  int i = 1;
  while (pdeg(w) > 0) {
    FP y = pgcd(K, w, c);
    FP z = pdivrem(K, w, y).first;
    if (pdeg(z) > 0) out.push_back({z, mult * i});
    w = std::move(y);
    c = pdivrem(K, c, w).first;
    ++i;
  }
  if (pdeg(c) > 0) squarefree_decomp(K, pth_root(K, c), mult * (int)K.p, out);
}

// random polynomial of degree < n with entries drawn from the field, det. seeded rng
FP random_poly(const FqField& K, int n, std::mt19937_64& rng) {
  FP r(n, K.zero());
  unsigned long q = 1;
  bool small_q = true;
  for (int i = 0; i < K.k; ++i) {
    if (q > (1UL << 40) / (unsigned long)K.p) {
      small_q = false;
      break;
    }
    q *= (unsigned long)K.p;
  }
  for (int i = 0; i < n; ++i) {
    if (small_q) {
      r[i] = K.elem_by_index(rng() % q);
    } else {
      fp::P e(K.k);
      for (int j = 0; j < K.k; ++j) e[j] = (long)(rng() % (unsigned long)K.p);
      fp::trim(e);
      r[i] = e;
    }
  }
  ptrim(K, r);
  return r;
}

// equal-degree splitting: f monic squarefree, all irreducible factors of degree d
void edf(const FqField& K, const FP& f, int d, std::mt19937_64& rng, std::vector<FP>& out) {
  int n = pdeg(f);
  if (n == d) {
    out.push_back(f);
    return;
  }
  FP g;
  while (true) {
    FP a = random_poly(K, n, rng);
    if (pdeg(a) < 1) continue;
    if (K.p == 2) {
      // absolute trace map to F_2: T(a) = sum_{i<k*d} a^{2^i} mod f
      FP t = a, cur = a;
      long bits = (long)K.k * d;
      for (long i = 1; i < bits; ++i) {
        cur = pmod(K, pmul(K, cur, cur), f);
        t = padd(K, t, cur);
      }
      g = pgcd(K, t, f);
    } else {
      Int e = (ipow(K.q(), (unsigned long)d) - 1) / 2;
      FP b = ppowmod(K, a, e, f);
      b = psub(K, b, FP{K.one()});
      g = pgcd(K, b, f);
    }
    if (pdeg(g) > 0 && pdeg(g) < n) break;
  }
  edf(K, g, d, rng, out);
  edf(K, pdivrem(K, f, g).first, d, rng, out);
}

// distinct-degree: f monic squarefree → (product of irred of degree d, d)
std::vector<std::pair<FP, int>> ddf(const FqField& K, FP f) {
  std::vector<std::pair<FP, int>> out;
  FP x = {K.zero(), K.one()};
  FP h = x;
  Int q = K.q();
  int d = 0;
  while (pdeg(f) > 0 && 2 * (d + 1) <= pdeg(f)) {
    ++d;
    h = ppowmod(K, h, q, f);  // h = x^{q^d} mod f
    FP g = pgcd(K, psub(K, h, x), f);
    if (pdeg(g) > 0) {
      out.push_back({g, d});
      f = pdivrem(K, f, g).first;
      h = pmod(K, h, f);
    }
  }
  if (pdeg(f) > 0) out.push_back({f, pdeg(f)});
  return out;
}

std::vector<long> poly_key(const FqField& K, const FP& f) {
  std::vector<long> key;
  key.push_back(pdeg(f));
  for (const auto& c : f) {
    auto k = K.elem_key(c);
    key.insert(key.end(), k.begin(), k.end());
  }
  return key;
}

}  // namespace

FqFactorization factor_univariate(const FqField& K, const PolyOf<FqField>& f_in) {
  FP f = f_in;
  ptrim(K, f);
  if (f.empty()) throw std::invalid_argument("factor_univariate: zero polynomial");
  FqFactorization res;
  res.unit = f.back();
  if (pdeg(f) == 0) return res;
  f = pmonic(K, f);

  std::vector<std::pair<FP, int>> sq;
  squarefree_decomp(K, f, 1, sq);

  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ (unsigned long long)K.p ^
                      ((unsigned long long)K.k << 32) ^ ((unsigned long long)pdeg(f) << 40));
  for (const auto& [part, mult] : sq) {
    for (const auto& [prod, d] : ddf(K, part)) {
      std::vector<FP> irr;
      edf(K, prod, d, rng, irr);
      for (auto& h : irr) res.factors.push_back({std::move(h), mult});
    }
  }
  std::sort(res.factors.begin(), res.factors.end(), [&](const auto& a, const auto& b) {
    return poly_key(K, a.first) < poly_key(K, b.first);
  });
  return res;
}

std::vector<std::pair<int, int>> factor_pattern(const FqField& K, const PolyOf<FqField>& f) {
  auto fac = factor_univariate(K, f);
  std::vector<std::pair<int, int>> pat;
  for (const auto& [g, m] : fac.factors) pat.push_back({pdeg(g), m});
  std::sort(pat.begin(), pat.end());
  return pat;
}

bool is_squarefree_fq(const FqField& K, const PolyOf<FqField>& f) {
  if (f.empty()) return false;
  FP d = pderiv(K, f);
  if (d.empty()) return pdeg(f) == 0;
  return pdeg(pgcd(K, f, d)) == 0;
}

PolyOf<FqField> reduce_zpoly(const FqField& K, const ZPoly& f) {
  PolyOf<FqField> r(f.size(), K.zero());
  for (size_t i = 0; i < f.size(); ++i) r[i] = K.from_int(f[i]);
  ptrim(K, r);
  return r;
}

}  // namespace hfx
