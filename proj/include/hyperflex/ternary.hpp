#pragma once
// Dense ternary forms (homogeneous trivariate polynomials) over a coefficient
// ring, and the Macaulay resultant of three ternary cubics: degree-7 monomial
// matrix, its structured 9x9 minor, Res = det(M)/det(M'). A vanishing minor
// marks a degenerate specialization; the caller-facing entry point retries
// with random unimodular coordinate changes (entries in [-3,3], det 1, at
// most 16 attempts, deterministic seed) before giving up.
#include "hyperflex/fq.hpp"
#include "hyperflex/poly.hpp"

#include <array>

namespace hfx {

// monomials x^i y^j z^k of total degree d, ordered lexicographically by (i, j) descending
inline std::vector<std::array<int, 3>> ternary_monomials(int d) {
  std::vector<std::array<int, 3>> m;
  for (int i = d; i >= 0; --i)
    for (int j = d - i; j >= 0; --j) m.push_back({i, j, d - i - j});
  return m;
}

template <class R>
struct TForm {
  int d = 0;
  std::vector<typename R::Elem> c;  // indexed like ternary_monomials(d)

  static TForm zero(const R& ring, int d_) {
    TForm f;
    f.d = d_;
    f.c.assign(ternary_monomials(d_).size(), ring.zero());
    return f;
  }
};

template <class R>
int tform_index(int d, int i, int j) {
  // position of x^i y^j z^{d-i-j} in ternary_monomials(d)
  // for given i: preceding blocks have sizes (d - i' + 1) for i' = d .. i+1
  int off = 0;
  for (int ii = d; ii > i; --ii) off += d - ii + 1;
  return off + (d - i - j);
}

template <class R>
TForm<R> tform_mul(const R& ring, const TForm<R>& a, const TForm<R>& b) {
  TForm<R> r = TForm<R>::zero(ring, a.d + b.d);
  auto ma = ternary_monomials(a.d);
  auto mb = ternary_monomials(b.d);
  for (size_t s = 0; s < ma.size(); ++s) {
    if (ring.is_zero(a.c[s])) continue;
    for (size_t t = 0; t < mb.size(); ++t) {
      if (ring.is_zero(b.c[t])) continue;
      int i = ma[s][0] + mb[t][0], j = ma[s][1] + mb[t][1];
      int idx = tform_index<R>(r.d, i, j);
      r.c[idx] = ring.add(r.c[idx], ring.mul(a.c[s], b.c[t]));
    }
  }
  return r;
}

template <class R>
TForm<R> tform_partial(const R& ring, const TForm<R>& f, int var) {
  if (f.d == 0) throw std::invalid_argument("tform_partial: degree 0");
  TForm<R> r = TForm<R>::zero(ring, f.d - 1);
  auto mons = ternary_monomials(f.d);
  for (size_t s = 0; s < mons.size(); ++s) {
    if (ring.is_zero(f.c[s])) continue;
    int e[3] = {mons[s][0], mons[s][1], mons[s][2]};
    if (e[var] == 0) continue;
    int mult = e[var];
    e[var] -= 1;
    int idx = tform_index<R>(r.d, e[0], e[1]);
    r.c[idx] = ring.add(r.c[idx], ring.mul(f.c[s], ring.from_long(mult)));
  }
  return r;
}

// f(A·(x,y,z)^T) for an integer 3x3 matrix A
template <class R>
TForm<R> tform_substitute_linear(const R& ring, const TForm<R>& f,
                                 const std::array<std::array<long, 3>, 3>& A) {
  // linear forms L_v = sum_w A[v][w] * var_w, v = 0,1,2
  std::array<TForm<R>, 3> L;
  for (int v = 0; v < 3; ++v) {
    L[v] = TForm<R>::zero(ring, 1);
    for (int w = 0; w < 3; ++w) {
      int idx = tform_index<R>(1, w == 0 ? 1 : 0, w == 1 ? 1 : 0);
      L[v].c[idx] = ring.from_long(A[v][w]);
    }
  }
  // powers cache
  auto powers = [&](const TForm<R>& base, int maxe) {
    std::vector<TForm<R>> P;
    TForm<R> one = TForm<R>::zero(ring, 0);
    one.c[0] = ring.from_long(1);
    P.push_back(one);
    for (int e = 1; e <= maxe; ++e) P.push_back(tform_mul(ring, P.back(), base));
    return P;
  };
  auto P0 = powers(L[0], f.d), P1 = powers(L[1], f.d), P2 = powers(L[2], f.d);
  TForm<R> r = TForm<R>::zero(ring, f.d);
  auto mons = ternary_monomials(f.d);
  for (size_t s = 0; s < mons.size(); ++s) {
    if (ring.is_zero(f.c[s])) continue;
    TForm<R> term = tform_mul(ring, tform_mul(ring, P0[mons[s][0]], P1[mons[s][1]]), P2[mons[s][2]]);
    for (size_t t = 0; t < r.c.size(); ++t)
      r.c[t] = ring.add(r.c[t], ring.mul(f.c[s], term.c[t]));
  }
  return r;
}

template <class R>
typename R::Elem tform_eval(const R& ring, const TForm<R>& f, const typename R::Elem& x,
                            const typename R::Elem& y, const typename R::Elem& z) {
  auto mons = ternary_monomials(f.d);
  auto r = ring.zero();
  for (size_t s = 0; s < mons.size(); ++s) {
    if (ring.is_zero(f.c[s])) continue;
    auto t = f.c[s];
    for (int a = 0; a < mons[s][0]; ++a) t = ring.mul(t, x);
    for (int a = 0; a < mons[s][1]; ++a) t = ring.mul(t, y);
    for (int a = 0; a < mons[s][2]; ++a) t = ring.mul(t, z);
    r = ring.add(r, t);
  }
  return r;
}

struct MacaulayDegenerate : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// single attempt in the given coordinates; sets ok=false if the minor vanishes
Int macaulay_cubics_direct(const TForm<ZRing>& f1, const TForm<ZRing>& f2, const TForm<ZRing>& f3,
                           bool& ok);
// retrying entry point (throws MacaulayDegenerate after 16 failed attempts)
Int macaulay_resultant_ternary(const TForm<ZRing>& f1, const TForm<ZRing>& f2,
                               const TForm<ZRing>& f3);

FqField::Elem macaulay_cubics_direct_fq(const FqField& K, const TForm<FqField>& f1,
                                        const TForm<FqField>& f2, const TForm<FqField>& f3,
                                        bool& ok);
FqField::Elem macaulay_resultant_ternary_fq(const FqField& K, const TForm<FqField>& f1,
                                            const TForm<FqField>& f2, const TForm<FqField>& f3);

}  // namespace hfx
