#pragma once
// Generic dense univariate polynomial arithmetic over a "field context":
// a small object K with
//   using Elem = ...;
//   Elem zero()/one() const; bool is_zero(e)/eq(a,b) const;
//   Elem add/sub/mul(a,b) const; Elem neg(a)/inv(a) const; Elem from_long(long) const;
// Polynomials are std::vector<Elem> with no trailing zeros (zero poly = {}).
// Also: integer/rational polynomial helpers and Sylvester-determinant resultants.
#include "hyperflex/int.hpp"

#include <algorithm>
#include <functional>
#include <utility>
#include <vector>

namespace hfx {

// ---------------------------------------------------------------- contexts

struct QField {  // rationals
  using Elem = Rat;
  Elem zero() const { return Rat(0); }
  Elem one() const { return Rat(1); }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw std::domain_error("QField: division by zero");
    return Rat(1) / a;
  }
  Elem from_long(long v) const { return Rat(v); }
};

// ------------------------------------------------------------- basic ops

template <class F>
using PolyOf = std::vector<typename F::Elem>;

template <class F>
void ptrim(const F& K, PolyOf<F>& a) {
  while (!a.empty() && K.is_zero(a.back())) a.pop_back();
}

template <class E>
int pdeg(const std::vector<E>& a) {
  return (int)a.size() - 1;
}

template <class F>
PolyOf<F> padd(const F& K, const PolyOf<F>& a, const PolyOf<F>& b) {
  PolyOf<F> r(std::max(a.size(), b.size()), K.zero());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = K.add(r[i], b[i]);
  ptrim(K, r);
  return r;
}

template <class F>
PolyOf<F> psub(const F& K, const PolyOf<F>& a, const PolyOf<F>& b) {
  PolyOf<F> r(std::max(a.size(), b.size()), K.zero());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = K.sub(r[i], b[i]);
  ptrim(K, r);
  return r;
}

template <class F>
PolyOf<F> pneg(const F& K, PolyOf<F> a) {
  for (auto& c : a) c = K.neg(c);
  return a;
}

template <class F>
PolyOf<F> pscal(const F& K, const PolyOf<F>& a, const typename F::Elem& s) {
  if (K.is_zero(s)) return {};
  PolyOf<F> r(a);
  for (auto& c : r) c = K.mul(c, s);
  ptrim(K, r);
  return r;
}

template <class F>
PolyOf<F> pmul(const F& K, const PolyOf<F>& a, const PolyOf<F>& b) {
  if (a.empty() || b.empty()) return {};
  PolyOf<F> r(a.size() + b.size() - 1, K.zero());
  for (size_t i = 0; i < a.size(); ++i) {
    if (K.is_zero(a[i])) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = K.add(r[i + j], K.mul(a[i], b[j]));
  }
  ptrim(K, r);
  return r;
}

template <class F>
bool peq(const F& K, const PolyOf<F>& a, const PolyOf<F>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!K.eq(a[i], b[i])) return false;
  return true;
}

template <class F>
typename F::Elem peval(const F& K, const PolyOf<F>& a, const typename F::Elem& x) {
  typename F::Elem r = K.zero();
  for (size_t i = a.size(); i-- > 0;) r = K.add(K.mul(r, x), a[i]);
  return r;
}

template <class F>
PolyOf<F> pderiv(const F& K, const PolyOf<F>& a) {
  if (a.size() <= 1) return {};
  PolyOf<F> r(a.size() - 1, K.zero());
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = K.mul(a[i], K.from_long((long)i));
  ptrim(K, r);
  return r;
}

template <class F>
std::pair<PolyOf<F>, PolyOf<F>> pdivrem(const F& K, PolyOf<F> a, const PolyOf<F>& b) {
  if (b.empty()) throw std::invalid_argument("pdivrem by zero polynomial");
  int db = pdeg(b);
  auto lcinv = K.inv(b.back());
  PolyOf<F> q;
  while (pdeg(a) >= db) {
    int k = pdeg(a) - db;
    auto c = K.mul(a.back(), lcinv);
    if ((int)q.size() < k + 1) q.resize(k + 1, K.zero());
    q[k] = K.add(q[k], c);
    for (int i = 0; i <= db; ++i) a[i + k] = K.sub(a[i + k], K.mul(c, b[i]));
    ptrim(K, a);
  }
  ptrim(K, q);
  return {q, a};
}

template <class F>
PolyOf<F> pmod(const F& K, PolyOf<F> a, const PolyOf<F>& b) {
  return pdivrem(K, std::move(a), b).second;
}

template <class F>
PolyOf<F> pmonic(const F& K, PolyOf<F> a) {
  if (a.empty()) return a;
  auto inv = K.inv(a.back());
  for (auto& c : a) c = K.mul(c, inv);
  return a;
}

// gcd, monic-normalized; pgcd(f, 0) = monic f
template <class F>
PolyOf<F> pgcd(const F& K, PolyOf<F> a, PolyOf<F> b) {
  while (!b.empty()) {
    PolyOf<F> r = pmod(K, std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return pmonic(K, std::move(a));
}

// extended gcd: returns (g, u, v) monic with u a + v b = g
template <class F>
std::array<PolyOf<F>, 3> pext_gcd(const F& K, PolyOf<F> a, PolyOf<F> b) {
  PolyOf<F> u0 = {K.one()}, v0 = {}, u1 = {}, v1 = {K.one()};
  while (!b.empty()) {
    auto [q, r] = pdivrem(K, a, b);
    a = std::move(b);
    b = std::move(r);
    PolyOf<F> u2 = psub(K, u0, pmul(K, q, u1));
    PolyOf<F> v2 = psub(K, v0, pmul(K, q, v1));
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  if (!a.empty()) {
    auto inv = K.inv(a.back());
    typename F::Elem s = inv;
    for (auto& c : a) c = K.mul(c, s);
    for (auto& c : u0) c = K.mul(c, s);
    for (auto& c : v0) c = K.mul(c, s);
  }
  return {a, u0, v0};
}

template <class F>
PolyOf<F> ppowmod(const F& K, PolyOf<F> a, const Int& e, const PolyOf<F>& m) {
  if (pdeg(m) < 1) throw std::invalid_argument("ppowmod: modulus must be nonconstant");
  PolyOf<F> r = {K.one()};
  a = pmod(K, std::move(a), m);
  if (e == 0) return r;
  size_t nb = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = nb; i-- > 0;) {
    r = pmod(K, pmul(K, r, r), m);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = pmod(K, pmul(K, r, a), m);
  }
  return r;
}

// ------------------------------------------------- quotient field tower

// L = base[x]/(mod), mod irreducible over base. Elements: PolyOf<F>, deg < deg(mod).
template <class F>
struct QuotField {
  const F* base;
  PolyOf<F> modulus;  // monic, degree >= 1
  using Elem = PolyOf<F>;

  QuotField(const F& b, PolyOf<F> m) : base(&b), modulus(std::move(m)) {
    if (pdeg(modulus) < 1) throw std::invalid_argument("QuotField: modulus must be nonconstant");
    modulus = pmonic(*base, std::move(modulus));
  }
  Elem zero() const { return {}; }
  Elem one() const { return {base->one()}; }
  bool is_zero(const Elem& a) const { return a.empty(); }
  bool eq(const Elem& a, const Elem& b) const { return peq(*base, a, b); }
  Elem add(const Elem& a, const Elem& b) const { return padd(*base, a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return psub(*base, a, b); }
  Elem neg(const Elem& a) const { return pneg(*base, a); }
  Elem mul(const Elem& a, const Elem& b) const { return pmod(*base, pmul(*base, a, b), modulus); }
  Elem inv(const Elem& a) const {
    if (a.empty()) throw std::domain_error("QuotField: division by zero");
    auto [g, u, v] = pext_gcd(*base, a, modulus);
    if (pdeg(g) != 0) throw std::domain_error("QuotField: modulus not irreducible (zero divisor)");
    return u;  // g normalized to 1, so u*a = 1 mod modulus
  }
  Elem from_long(long v) const {
    auto e = base->from_long(v);
    if (base->is_zero(e)) return {};
    return {e};
  }
  // the class of x
  Elem gen() const { return {base->zero(), base->one()}; }
  // lift a base element
  Elem lift(const typename F::Elem& c) const {
    if (base->is_zero(c)) return {};
    return {c};
  }
};

// evaluate a polynomial with base-field coefficients at a point of an extension
template <class F>
typename QuotField<F>::Elem peval_ext(const QuotField<F>& L, const PolyOf<F>& f,
                                      const typename QuotField<F>::Elem& x) {
  typename QuotField<F>::Elem r = L.zero();
  for (size_t i = f.size(); i-- > 0;) r = L.add(L.mul(r, x), L.lift(f[i]));
  return r;
}

// ------------------------------------------------- integer polynomials

using ZPoly = std::vector<Int>;  // no trailing zeros
using QPoly = std::vector<Rat>;

inline void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
inline int zdeg(const ZPoly& a) { return (int)a.size() - 1; }

inline Int zcontent(const ZPoly& a) {
  Int g = 0;
  for (const auto& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

inline ZPoly zprimitive(const ZPoly& a, bool positive_lc = true) {
  if (a.empty()) return a;
  Int g = zcontent(a);
  if (positive_lc && a.back() < 0) g = -g;
  ZPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = exact_div(a[i], g);
  return r;
}

inline QPoly to_qpoly(const ZPoly& a) {
  QPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = Rat(a[i]);
  return r;
}

// clear denominators: returns (integer poly, common denominator d) with d*f integral
inline std::pair<ZPoly, Int> clear_denominators(const QPoly& f) {
  Int d = 1;
  for (const auto& c : f) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den().get_mpz_t());
  ZPoly r(f.size());
  for (size_t i = 0; i < f.size(); ++i) {
    Rat v = f[i] * Rat(d);
    r[i] = Int(v.get_num());
  }
  ztrim(r);
  return {r, d};
}

// --------------------------------------------------------- determinants

// Bareiss fraction-free determinant over an integral domain given by a ring
// context R: Elem, add/sub/mul/neg, is_zero, one(), exact_div(a, b).
template <class R>
typename R::Elem det_bareiss(const R& D, std::vector<std::vector<typename R::Elem>> m) {
  size_t n = m.size();
  if (n == 0) return D.one();
  for (auto& row : m)
    if (row.size() != n) throw std::invalid_argument("det_bareiss: non-square");
  typename R::Elem prev = D.one();
  bool negate = false;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (D.is_zero(m[k][k])) {
      size_t s = k + 1;
      while (s < n && D.is_zero(m[s][k])) ++s;
      if (s == n) return D.zero();
      std::swap(m[k], m[s]);
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        auto t = D.sub(D.mul(m[i][j], m[k][k]), D.mul(m[i][k], m[k][j]));
        m[i][j] = D.exact_div(t, prev);
      }
    prev = m[k][k];
  }
  auto d = m[n - 1][n - 1];
  return negate ? D.neg(d) : d;
}

struct ZRing {
  using Elem = Int;
  Elem zero() const { return Int(0); }
  Elem one() const { return Int(1); }
  Elem from_long(long v) const { return Int(v); }
  bool is_zero(const Elem& a) const { return a == 0; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem exact_div(const Elem& a, const Elem& b) const { return hfx::exact_div(a, b); }
};

// Z[x] as a ring context (for Bareiss over polynomial entries)
struct ZxRing {
  using Elem = ZPoly;
  Elem zero() const { return {}; }
  Elem one() const { return {Int(1)}; }
  bool is_zero(const Elem& a) const { return a.empty(); }
  Elem add(const Elem& a, const Elem& b) const {
    Elem r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    ztrim(r);
    return r;
  }
  Elem sub(const Elem& a, const Elem& b) const {
    Elem r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    ztrim(r);
    return r;
  }
  Elem mul(const Elem& a, const Elem& b) const {
    if (a.empty() || b.empty()) return {};
    Elem r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    ztrim(r);
    return r;
  }
  Elem neg(Elem a) const {
    for (auto& c : a) c = -c;
    return a;
  }
  // exact polynomial division (quotient known to be integral)
  Elem exact_div(Elem a, const Elem& b) const {
    if (b.empty()) throw std::invalid_argument("ZxRing::exact_div by zero");
    Elem q;
    int db = (int)b.size() - 1;
    while ((int)a.size() - 1 >= db) {
      Int c = hfx::exact_div(a.back(), b.back());
      int k = (int)a.size() - 1 - db;
      if ((int)q.size() < k + 1) q.resize(k + 1, Int(0));
      q[k] += c;
      for (int i = 0; i <= db; ++i) a[i + k] -= c * b[i];
      ztrim(a);
    }
    if (!a.empty()) throw std::runtime_error("ZxRing::exact_div: not divisible");
    return q;
  }
};

// determinant over a field context (Gaussian elimination)
template <class F>
typename F::Elem det_field(const F& K, std::vector<std::vector<typename F::Elem>> m) {
  size_t n = m.size();
  if (n == 0) return K.one();
  typename F::Elem det = K.one();
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    while (piv < n && K.is_zero(m[piv][k])) ++piv;
    if (piv == n) return K.zero();
    if (piv != k) {
      std::swap(m[piv], m[k]);
      det = K.neg(det);
    }
    det = K.mul(det, m[k][k]);
    auto inv = K.inv(m[k][k]);
    for (size_t i = k + 1; i < n; ++i) {
      if (K.is_zero(m[i][k])) continue;
      auto f = K.mul(m[i][k], inv);
      for (size_t j = k; j < n; ++j) m[i][j] = K.sub(m[i][j], K.mul(f, m[k][j]));
    }
  }
  return det;
}

// ----------------------------------------------------------- resultants

// Sylvester matrix of f (deg m) and g (deg n) — (m+n) x (m+n); both nonzero.
template <class E>
std::vector<std::vector<E>> sylvester_matrix(const std::vector<E>& f, const std::vector<E>& g,
                                             const E& zero) {
  int m = (int)f.size() - 1, n = (int)g.size() - 1;
  if (m < 0 || n < 0) throw std::invalid_argument("sylvester_matrix: zero polynomial");
  int N = m + n;
  std::vector<std::vector<E>> M(N, std::vector<E>(N, zero));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) M[r][r + (m - i)] = f[i];
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) M[n + r][r + (n - i)] = g[i];
  return M;
}

// Resultant via Sylvester determinant. Conventions: if either input is the
// zero polynomial, or both degrees are 0, the resultant is defined as 0 and 1
// respectively only when meaningful; we require deg f + deg g >= 1.
inline Int resultant_z(const ZPoly& f, const ZPoly& g) {
  if (f.empty() || g.empty()) return Int(0);
  if (zdeg(f) == 0 && zdeg(g) == 0) return Int(1);
  if (zdeg(f) == 0) return ipow(f[0], (unsigned long)zdeg(g));
  if (zdeg(g) == 0) return ipow(g[0], (unsigned long)zdeg(f));
  return det_bareiss(ZRing{}, sylvester_matrix(f, g, Int(0)));
}

template <class F>
typename F::Elem resultant_field(const F& K, const PolyOf<F>& f, const PolyOf<F>& g) {
  if (f.empty() || g.empty()) return K.zero();
  if (pdeg(f) == 0 && pdeg(g) == 0) return K.one();
  auto epow = [&](typename F::Elem b, long e) {
    auto r = K.one();
    for (long i = 0; i < e; ++i) r = K.mul(r, b);
    return r;
  };
  if (pdeg(f) == 0) return epow(f[0], pdeg(g));
  if (pdeg(g) == 0) return epow(g[0], pdeg(f));
  return det_field(K, sylvester_matrix(f, g, K.zero()));
}

inline Rat resultant_q(const QPoly& f, const QPoly& g) { return resultant_field(QField{}, f, g); }

}  // namespace hfx
