#pragma once
// Finite fields F_{p^k} realized as F_p[t]/(m), m monic irreducible of degree
// k with machine-word coefficients. Irreducibility of the modulus is verified
// at construction. Elements are fp::P (degree < k, coefficients in [0,p)).
#include "hyperflex/fp.hpp"
#include "hyperflex/poly.hpp"

#include <string>

namespace hfx {

struct FqField {
  long p = 0;
  int k = 1;
  fp::P modulus;  // monic degree k; {0,1} (i.e. t) for k = 1

  using Elem = fp::P;

  explicit FqField(long p_);                                       // prime field
  FqField(long p_, fp::P modulus_, bool verify_irreducible = true);
  static FqField canonical(long p_, int k_);  // lex-smallest irreducible modulus

  Int q() const { return ipow(Int(p), (unsigned long)k); }

  Elem zero() const { return {}; }
  Elem one() const { return {1 % p}; }
  bool is_zero(const Elem& a) const { return a.empty(); }
  bool is_one(const Elem& a) const { return a.size() == 1 && a[0] == 1; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const { return fp::add(a, b, p); }
  Elem sub(const Elem& a, const Elem& b) const { return fp::sub(a, b, p); }
  Elem neg(const Elem& a) const { return fp::neg(a, p); }
  Elem mul(const Elem& a, const Elem& b) const {
    if (k == 1) {
      if (a.empty() || b.empty()) return {};
      long v = fp::mull(a[0], b[0], p);
      return v ? Elem{v} : Elem{};
    }
    return fp::rem(fp::mul(a, b, p), modulus, p);
  }
  Elem inv(const Elem& a) const;
  Elem pow(Elem a, const Int& e) const;
  Elem from_long(long v) const {
    long c = fp::norml(v, p);
    return c ? Elem{c} : Elem{};
  }
  Elem from_int(const Int& v) const {
    Int m = mod_pos(v, p);
    long c = m.get_si();
    return c ? Elem{c} : Elem{};
  }
  // the class of t (generator of the F_p-algebra)
  Elem gen() const {
    if (k == 1) return {};
    return {0, 1};
  }
  // q/p-power Frobenius inverse: a ↦ a^{p^{k-1}} (identity for k = 1)
  Elem frobenius_inv(const Elem& a) const { return pow(a, ipow(Int(p), (unsigned long)(k - 1))); }

  // element with given index in [0, q): base-p digits, digit i = coeff of t^i
  Elem elem_by_index(unsigned long idx) const;
  // deterministic sort key: the k digits, low to high
  std::vector<long> elem_key(const Elem& a) const;
  std::string elem_str(const Elem& a) const;  // "c0+c1*t+..." short form
};

// verify x^{p^k} = x (mod m) and gcd(x^{p^{k/l}} - x, m) = 1 for prime l | k
bool is_irreducible_modulus(long p, const fp::P& m);

}  // namespace hfx
