#pragma once
// Dense univariate polynomials over a prime field F_p with machine-word
// coefficients (coefficients normalized to [0, p)). This is the fast path
// used by sweeps and by the F_{p^k} element arithmetic.
#include "hyperflex/int.hpp"

#include <vector>

namespace hfx::fp {

using P = std::vector<long>;  // c[0] + c[1] x + ...; no trailing zeros

inline long norml(long a, long p) {
  a %= p;
  return a < 0 ? a + p : a;
}
inline long addl(long a, long b, long p) {
  long s = a + b;
  return s >= p ? s - p : s;
}
inline long subl(long a, long b, long p) {
  long s = a - b;
  return s < 0 ? s + p : s;
}
inline long mull(long a, long b, long p) {
  return (long)((__int128)a * b % p);
}
inline long powl(long a, long e, long p) {
  long r = 1 % p;
  a = norml(a, p);
  while (e > 0) {
    if (e & 1) r = mull(r, a, p);
    a = mull(a, a, p);
    e >>= 1;
  }
  return r;
}
inline long invl(long a, long p) {
  // extended Euclid; a != 0 mod p, p prime
  long t = 0, nt = 1, r = p, nr = norml(a, p);
  while (nr != 0) {
    long q = r / nr;
    long tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw std::runtime_error("fp::invl: not invertible");
  return norml(t, p);
}

inline void trim(P& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
inline int deg(const P& a) { return (int)a.size() - 1; }  // -1 for zero

inline P add(const P& a, const P& b, long p) {
  P r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = addl(r[i], b[i], p);
  trim(r);
  return r;
}
inline P sub(const P& a, const P& b, long p) {
  P r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = subl(r[i], b[i], p);
  trim(r);
  return r;
}
inline P neg(const P& a, long p) {
  P r(a);
  for (auto& c : r) c = c ? p - c : 0;
  return r;
}
inline P scal(const P& a, long s, long p) {
  s = norml(s, p);
  if (s == 0) return {};
  P r(a);
  for (auto& c : r) c = mull(c, s, p);
  trim(r);
  return r;
}
inline P mul(const P& a, const P& b, long p) {
  if (a.empty() || b.empty()) return {};
  P r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (long)(((__int128)a[i] * b[j] + r[i + j]) % p);
  }
  trim(r);
  return r;
}

// División with remainder; divisor must be nonzero.
inline std::pair<P, P> divrem(P a, const P& b, long p) {
  if (b.empty()) throw std::invalid_argument("fp::divrem by zero");
  int db = deg(b);
  long lcinv = invl(b.back(), p);
  P q;
  while (deg(a) >= db) {
    int k = deg(a) - db;
    long c = mull(a.back(), lcinv, p);
    if ((int)q.size() < k + 1) q.resize(k + 1, 0);
    q[k] = addl(q[k], c, p);
    for (int i = 0; i <= db; ++i) a[i + k] = subl(a[i + k], mull(c, b[i], p), p);
    trim(a);
  }
  trim(q);
  return {q, a};
}
inline P rem(const P& a, const P& b, long p) { return divrem(a, b, p).second; }

inline P monic(P a, long p) {
  if (a.empty()) return a;
  long inv = invl(a.back(), p);
  for (auto& c : a) c = mull(c, inv, p);
  return a;
}

// gcd, normalized monic; gcd(0,0) = 0
inline P gcd(P a, P b, long p) {
  while (!b.empty()) {
    P r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a), p);
}

inline P deriv(const P& a, long p) {
  if (a.size() <= 1) return {};
  P r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = mull(a[i], (long)(i % p), p);
  trim(r);
  return r;
}

inline long eval(const P& a, long x, long p) {
  long r = 0;
  for (size_t i = a.size(); i-- > 0;) r = (long)(((__int128)r * x + a[i]) % p);
  return r;
}

// a^e mod m (e as arbitrary-precision integer), m nonconstant
inline P powmod(P a, const Int& e, const P& m, long p) {
  if (deg(m) < 1) throw std::invalid_argument("fp::powmod: modulus must be nonconstant");
  P r = {1};
  a = rem(a, m, p);
  size_t nb = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return r;
  for (size_t i = nb; i-- > 0;) {
    r = rem(mul(r, r, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(mul(r, a, p), m, p);
  }
  return r;
}

inline P from_int_coeffs(const std::vector<Int>& v, long p) {
  P r(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    Int m = mod_pos(v[i], p);
    r[i] = m.get_si();
  }
  trim(r);
  return r;
}

}  // namespace hfx::fp
