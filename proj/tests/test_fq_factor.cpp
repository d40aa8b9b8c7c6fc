#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hyperflex/factor.hpp"
#include "hyperflex/fq.hpp"

#include <random>
#include <set>

using namespace hfx;

TEST_CASE("prime field arithmetic") {
  FqField F(7);
  CHECK(F.q() == 7);
  for (unsigned long i = 0; i < 7; ++i) {
    auto a = F.elem_by_index(i);
    if (F.is_zero(a)) continue;
    CHECK(F.is_one(F.mul(a, F.inv(a))));
    CHECK(F.eq(F.pow(a, Int(7)), a));  // Fermat
  }
  CHECK(F.eq(F.from_long(-3), F.from_long(4)));
  CHECK(F.eq(F.from_int(Int(100)), F.from_long(2)));
}

TEST_CASE("49-element field") {
  FqField F = FqField::canonical(7, 2);
  CHECK(F.q() == 49);
  CHECK(is_irreducible_modulus(7, F.modulus));
  std::set<std::vector<long>> keys;
  for (unsigned long i = 0; i < 49; ++i) keys.insert(F.elem_key(F.elem_by_index(i)));
  CHECK(keys.size() == 49);
  auto t = F.gen();
  REQUIRE_FALSE(F.is_zero(t));
  CHECK(F.is_one(F.pow(t, Int(48))));
  CHECK(F.eq(F.frobenius_inv(F.pow(t, Int(7))), t));
  auto z = F.add(F.pow(t, Int(5)), F.from_long(3));
  CHECK(F.is_one(F.mul(z, F.inv(z))));
}

TEST_CASE("modulus irreducibility is verified") {
  CHECK(is_irreducible_modulus(2, {1, 1, 1}));        // t^2 + t + 1
  CHECK_FALSE(is_irreducible_modulus(2, {1, 0, 1}));  // (t+1)^2
  CHECK_THROWS(FqField(5, {1, 0, 1}));                // t^2 + 1 splits mod 5
}

TEST_CASE("small factorizations over F_2") {
  FqField F(2);
  PolyOf<FqField> x2x = {{}, {1}, {1}};  // x^2 + x
  auto fac = factor_univariate(F, x2x);
  REQUIRE(fac.factors.size() == 2);
  CHECK(fac.factors[0].second == 1);
  CHECK(fac.factors[1].second == 1);
  CHECK(factor_pattern(F, x2x) == std::vector<std::pair<int, int>>{{1, 1}, {1, 1}});
  CHECK(is_squarefree_fq(F, x2x));

  PolyOf<FqField> sq = {{1}, {}, {1}};  // x^2 + 1 = (x+1)^2
  CHECK_FALSE(is_squarefree_fq(F, sq));
  CHECK(factor_pattern(F, sq) == std::vector<std::pair<int, int>>{{1, 2}});

  PolyOf<FqField> irr = {{1}, {1}, {}, {1}};  // x^3 + x + 1
  CHECK(factor_pattern(F, irr) == std::vector<std::pair<int, int>>{{3, 1}});
}

TEST_CASE("reduction of integer polynomials") {
  FqField F(7);
  PolyOf<FqField> r = reduce_zpoly(F, ZPoly{7, 3, -1, 14});
  // 7 -> 0, 3 -> 3, -1 -> 6, 14 -> 0 (degree drops)
  REQUIRE(r.size() == 3);
  CHECK(F.is_zero(r[0]));
  CHECK(F.eq(r[1], F.from_long(3)));
  CHECK(F.eq(r[2], F.from_long(6)));
}

TEST_CASE("random factor-reconstruction") {
  std::vector<FqField> fields;
  fields.emplace_back(2);
  fields.emplace_back(7);
  fields.push_back(FqField::canonical(7, 2));
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 300; ++t) {
    const FqField& K = fields[t % fields.size()];
    unsigned long q = K.q().get_ui();
    int deg = 1 + (int)(rng() % 9);
    PolyOf<FqField> f(deg + 1, K.zero());
    for (int i = 0; i <= deg; ++i) f[i] = K.elem_by_index(rng() % q);
    while (K.is_zero(f[deg])) f[deg] = K.elem_by_index(rng() % q);
    FqFactorization fac = factor_univariate(K, f);
    PolyOf<FqField> prod = {fac.unit};
    int degsum = 0;
    for (const auto& [g, m] : fac.factors) {
      CHECK(K.is_one(g.back()));  // monic
      degsum += pdeg(g) * m;
      for (int i = 0; i < m; ++i) prod = pmul(K, prod, g);
    }
    CHECK(degsum == deg);
    CHECK(peq(K, prod, f));
  }
}
