#pragma once
// Arbitrary-precision integer/rational helpers on top of GMP.
#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hfx {

using Int = mpz_class;
using Rat = mpq_class;

inline Int ipow(const Int& b, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

// v_p(n) for n != 0.
inline long val_p(const Int& n, const Int& p) {
  if (n == 0) throw std::invalid_argument("val_p: zero has no finite valuation");
  Int m = abs(n), q, r;
  long v = 0;
  while (true) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    if (r != 0) break;
    m = q;
    ++v;
  }
  return v;
}

inline long val_p(const Rat& x, const Int& p) {
  if (x == 0) throw std::invalid_argument("val_p: zero has no finite valuation");
  return val_p(Int(x.get_num()), p) - val_p(Int(x.get_den()), p);
}

// n / p^{v_p(n)}
inline Int unit_part(const Int& n, const Int& p) {
  Int m = n, q, r;
  if (m == 0) throw std::invalid_argument("unit_part of zero");
  while (true) {
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    if (r != 0) break;
    m = q;
  }
  return m;
}

// unit part of a nonzero rational, reduced mod p (p prime): (a/p^va)(b/p^vb)^{-1} mod p
inline Int unit_mod_p(const Rat& x, const Int& p) {
  Int a = unit_part(Int(x.get_num()), p);
  Int b = unit_part(Int(x.get_den()), p);
  Int binv;
  if (mpz_invert(binv.get_mpz_t(), b.get_mpz_t(), p.get_mpz_t()) == 0)
    throw std::runtime_error("unit_mod_p: denominator not invertible");
  Int r = (a % p) * binv % p;
  if (r < 0) r += p;
  return r;
}

inline Int mod_pos(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Int exact_div(const Int& a, const Int& b) {
  if (b == 0) throw std::invalid_argument("exact_div by zero");
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0) throw std::runtime_error("exact_div: not divisible");
  return q;
}

// All prime factors of |n| (n != 0), ascending, via GMP-assisted trial division + Pollard rho.
std::vector<Int> prime_factors(Int n);

inline bool is_probable_prime(const Int& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

}  // namespace hfx
