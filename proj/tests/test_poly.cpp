#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hyperflex/int.hpp"
#include "hyperflex/poly.hpp"

#include <random>

using namespace hfx;

namespace {
const QField Q{};
QPoly qp(std::initializer_list<long> v) {
  QPoly r;
  for (long c : v) r.emplace_back(c);
  ptrim(Q, r);
  return r;
}
}  // namespace

TEST_CASE("integer helpers") {
  CHECK(ipow(Int(3), 4) == 81);
  CHECK(val_p(Int(48), Int(2)) == 4);
  CHECK(val_p(Rat(8, 3), Int(2)) == 3);
  CHECK(val_p(Rat(3, 8), Int(2)) == -3);
  CHECK_THROWS(val_p(Int(0), Int(2)));
  CHECK(unit_part(Int(-48), Int(2)) == -3);
  CHECK(unit_mod_p(Rat(7, 3), Int(5)) == 4);
  CHECK(mod_pos(Int(-7), Int(5)) == 3);
  CHECK(exact_div(Int(91), Int(7)) == 13);
  CHECK_THROWS(exact_div(Int(91), Int(6)));
  CHECK(is_probable_prime(Int(2347)));
  CHECK(is_probable_prime(Int(773569)));
  CHECK_FALSE(is_probable_prime(Int(2347) * Int(773569)));
}

TEST_CASE("rational polynomial basics") {
  CHECK(peq(Q, pmul(Q, qp({1, 1}), qp({1, -1})), qp({1, 0, -1})));
  CHECK(peval(Q, qp({1, 2, 3}), Rat(2)) == 17);
  CHECK(pdeg(qp({0})) == -1);
  auto [q, r] = pdivrem(Q, qp({1, 0, 0, 1}), qp({1, 1}));
  CHECK(peq(Q, q, qp({1, -1, 1})));
  CHECK(r.empty());
  CHECK(peq(Q, pderiv(Q, qp({5, 0, 3, 2})), qp({0, 6, 6})));
  CHECK(peq(Q, ppowmod(Q, qp({0, 1}), Int(8), qp({1, 0, 1})), qp({1})));
}

TEST_CASE("gcd, extended gcd") {
  CHECK(peq(Q, pgcd(Q, qp({-1, 0, 1}), qp({-1, 0, 0, 1})), qp({-1, 1})));
  std::mt19937_64 rng(7);
  for (int t = 0; t < 25; ++t) {
    QPoly f(1 + rng() % 6), g(1 + rng() % 6);
    for (auto& c : f) c = Rat((long)(rng() % 11) - 5);
    for (auto& c : g) c = Rat((long)(rng() % 11) - 5);
    ptrim(Q, f);
    ptrim(Q, g);
    if (f.empty() || g.empty()) continue;
    auto [d, u, v] = pext_gcd(Q, f, g);
    CHECK(peq(Q, padd(Q, pmul(Q, u, f), pmul(Q, v, g)), d));
    CHECK(pmod(Q, f, d).empty());
    CHECK(pmod(Q, g, d).empty());
  }
}

TEST_CASE("quotient field extension") {
  QuotField<QField> L(Q, qp({1, 0, 1}));  // Q[i]
  auto i = L.gen();
  CHECK(L.eq(L.mul(i, i), L.neg(L.one())));
  auto z = L.add(L.from_long(3), i);
  CHECK(L.eq(L.mul(z, L.inv(z)), L.one()));
  CHECK(L.eq(peval_ext(L, qp({1, 0, 1}), i), L.zero()));
}

TEST_CASE("fraction-free and field determinants agree") {
  std::mt19937_64 rng(11);
  ZRing Z;
  for (int t = 0; t < 20; ++t) {
    int n = 1 + (int)(rng() % 5);
    std::vector<std::vector<Int>> mi(n, std::vector<Int>(n));
    std::vector<std::vector<Rat>> mq(n, std::vector<Rat>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        long v = (long)(rng() % 21) - 10;
        mi[a][b] = v;
        mq[a][b] = v;
      }
    CHECK(Rat(det_bareiss(Z, mi)) == det_field(Q, mq));
  }
}

TEST_CASE("determinant over the polynomial ring") {
  // det [[x, 1], [1, x]] = x^2 - 1
  ZxRing R;
  std::vector<std::vector<ZPoly>> m = {{ZPoly{0, 1}, ZPoly{1}}, {ZPoly{1}, ZPoly{0, 1}}};
  CHECK(det_bareiss(R, m) == ZPoly{-1, 0, 1});
}

TEST_CASE("sylvester resultants") {
  ZPoly f = {-1, 0, 1};  // x^2 - 1
  ZPoly g = {-4, 0, 1};  // x^2 - 4
  CHECK(resultant_z(f, g) == 9);
  CHECK(resultant_q(to_qpoly(f), to_qpoly(g)) == 9);
  CHECK(resultant_z(ZPoly{-2, 1, 1}, ZPoly{3, -4, 1}) == 0);  // share root 1
}

TEST_CASE("resultant multiplicativity") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 15; ++t) {
    auto rnd = [&](int d) {
      ZPoly f(d + 1);
      for (auto& c : f) c = Int((long)(rng() % 15) - 7);
      if (f.back() == 0) f.back() = 1;
      return f;
    };
    ZPoly f = rnd(1 + (int)(rng() % 3));
    ZPoly g = rnd(1 + (int)(rng() % 3));
    ZPoly h = rnd(1 + (int)(rng() % 3));
    ZPoly fg;
    {
      // integer polynomial product via the rational helpers
      QPoly p = to_qpoly(f), q = to_qpoly(g);
      auto [z, den] = clear_denominators(pmul(QField{}, p, q));
      CHECK(den == 1);
      fg = z;
    }
    CHECK(resultant_z(fg, h) == resultant_z(f, h) * resultant_z(g, h));
  }
}

TEST_CASE("content, primitivity, denominators") {
  CHECK(zprimitive(ZPoly{6, -9, 12}) == ZPoly{2, -3, 4});
  CHECK(zprimitive(ZPoly{-6, 9, -12}) == ZPoly{2, -3, 4});
  QPoly q = {Rat(1, 2), Rat(2, 3)};
  auto [z, d] = clear_denominators(q);
  CHECK(d == 6);
  CHECK(z == ZPoly{3, 4});
}
