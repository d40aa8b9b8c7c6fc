#include "hyperflex/fq.hpp"

#include <sstream>

namespace hfx {

std::vector<Int> prime_factors(Int n) {
  n = abs(n);
  if (n <= 1) throw std::invalid_argument("prime_factors: |n| must be > 1");
  std::vector<Int> out;
  auto push = [&](const Int& q) {
    if (out.empty() || out.back() != q) out.push_back(q);
  };
  for (long d : {2L, 3L, 5L}) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      push(Int(d));
      n = exact_div(n, d);
    }
  }
  // wheel over 6k±1 up to 10^6, then rho + primality for what remains
  for (long d = 7; d <= 1000000 && Int(d) * d <= n; d += (d % 6 == 1 ? 4 : 2)) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      push(Int(d));
      n = exact_div(n, d);
    }
  }
  std::function<void(Int)> split = [&](Int m) {
    if (m == 1) return;
    if (is_probable_prime(m)) {
      push(m);
      return;
    }
    // Pollard rho (Brent variant), deterministic start
    for (long c = 1;; ++c) {
      Int x = 2, y = 2, d = 1;
      while (d == 1) {
        x = mod_pos(x * x + c, m);
        y = mod_pos(y * y + c, m);
        y = mod_pos(y * y + c, m);
        Int diff = abs(x - y);
        if (diff == 0) break;
        mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), m.get_mpz_t());
      }
      if (d != 1 && d != m) {
        split(d);
        split(exact_div(m, d));
        return;
      }
    }
  };
  if (n > 1) split(n);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_irreducible_modulus(long p, const fp::P& m) {
  int k = fp::deg(m);
  if (k < 1) return false;
  if (m.back() != 1) return false;
  fp::P x = {0, 1};
  if (k == 1) return true;
  // x^{p^k} == x mod m
  fp::P xq = fp::powmod(x, ipow(Int(p), (unsigned long)k), m, p);
  if (fp::sub(xq, x, p) != fp::P{}) return false;
  for (const Int& l : prime_factors(Int(k))) {
    unsigned long kl = (unsigned long)(k / l.get_si());
    fp::P xe = fp::powmod(x, ipow(Int(p), kl), m, p);
    fp::P g = fp::gcd(fp::sub(xe, x, p), m, p);
    if (fp::deg(g) != 0) return false;
  }
  return true;
}

FqField::FqField(long p_) : p(p_), k(1), modulus{0, 1} {
  if (p < 2 || !is_probable_prime(Int(p))) throw std::invalid_argument("FqField: p must be prime");
}

FqField::FqField(long p_, fp::P modulus_, bool verify_irreducible)
    : p(p_), k(fp::deg(modulus_)), modulus(std::move(modulus_)) {
  if (p < 2 || !is_probable_prime(Int(p))) throw std::invalid_argument("FqField: p must be prime");
  if (k < 1) throw std::invalid_argument("FqField: modulus must be nonconstant");
  for (auto& c : modulus) c = fp::norml(c, p);
  if (modulus.back() != 1) throw std::invalid_argument("FqField: modulus must be monic");
  if (verify_irreducible && !is_irreducible_modulus(p, modulus))
    throw std::invalid_argument("FqField: modulus is not irreducible over F_p");
}

FqField FqField::canonical(long p_, int k_) {
  if (k_ == 1) return FqField(p_);
  // lex order on (c_0, c_1, ..., c_{k-1}); c_0 != 0 is necessary
  std::vector<long> c(k_, 0);
  c[0] = 1;
  auto bump = [&]() -> bool {
    for (int i = k_ - 1; i >= 0; --i) {
      if (++c[i] < p_) return true;
      c[i] = 0;
    }
    return false;
  };
  // iterate in lex order on the tuple read left-to-right: vary last slot fastest
  // → treat (c_0,...,c_{k-1}) as digits with c_{k-1} least significant
  while (true) {
    fp::P m(c.begin(), c.end());
    m.push_back(1);
    if (is_irreducible_modulus(p_, m)) return FqField(p_, m, false);
    if (!bump()) break;
  }
  throw std::runtime_error("FqField::canonical: no irreducible modulus found");
}

FqField::Elem FqField::inv(const Elem& a) const {
  if (a.empty()) throw std::domain_error("FqField: division by zero");
  if (k == 1) return {fp::invl(a[0], p)};
  // extended Euclid over F_p[t]
  fp::P t0 = {}, t1 = {1}, r0 = modulus, r1 = a;
  while (fp::deg(r1) >= 0) {
    auto [q, r] = fp::divrem(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    fp::P t2 = fp::sub(t0, fp::mul(q, t1, p), p);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (fp::deg(r0) != 0) throw std::domain_error("FqField: not invertible");
  return fp::scal(t0, fp::invl(r0[0], p), p);
}

FqField::Elem FqField::pow(Elem a, const Int& e) const {
  if (e < 0) return pow(inv(a), -e);
  Elem r = one();
  if (e == 0) return r;
  size_t nb = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = nb; i-- > 0;) {
    r = mul(r, r);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mul(r, a);
  }
  return r;
}

FqField::Elem FqField::elem_by_index(unsigned long idx) const {
  Elem e;
  for (int i = 0; i < k && idx > 0; ++i) {
    long d = (long)(idx % (unsigned long)p);
    idx /= (unsigned long)p;
    if (d != 0) {
      if ((int)e.size() < i + 1) e.resize(i + 1, 0);
      e[i] = d;
    }
  }
  return e;
}

std::vector<long> FqField::elem_key(const Elem& a) const {
  std::vector<long> key(k, 0);
  for (size_t i = 0; i < a.size(); ++i) key[i] = a[i];
  return key;
}

std::string FqField::elem_str(const Elem& a) const {
  if (a.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || a[i] != 1) os << a[i];
    if (i >= 1) {
      if (a[i] != 1) os << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace hfx
