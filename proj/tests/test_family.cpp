#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hyperflex/factor.hpp"
#include "hyperflex/family.hpp"

#include <cmath>
#include <random>

using namespace hfx;

namespace {
FamilyPoint member(long p2, long p5, long p6, long p8, long p9, long p12) {
  FamilyPoint b;
  b.v = {Int(p2), Int(p5), Int(p6), Int(p8), Int(p9), Int(p12)};
  return b;
}
const FamilyPoint kRef = member(0, 0, 0, -1, 1, 1);

// independent affine count: #{(x,y) : y^3 - P(x) y - Q(x) = 0} + 1
long brute_count(const FqField& K, const FamilyPoint& b) {
  TrigonalAffineForm t = trigonal_affine_form(b);
  PolyOf<FqField> P = reduce_zpoly(K, t.P), Q = reduce_zpoly(K, t.Q);
  unsigned long q = K.q().get_ui();
  long n = 1;  // the marked point at infinity
  for (unsigned long i = 0; i < q; ++i) {
    auto x = K.elem_by_index(i);
    auto pv = peval(K, P, x), qv = peval(K, Q, x);
    for (unsigned long j = 0; j < q; ++j) {
      auto y = K.elem_by_index(j);
      auto lhs = K.sub(K.mul(K.mul(y, y), y), K.add(K.mul(pv, y), qv));
      if (K.is_zero(lhs)) ++n;
    }
  }
  return n;
}
}  // namespace

TEST_CASE("parsing and printing") {
  FamilyPoint b = parse_family_point("0,0,0,-1,1,1");
  CHECK(b == kRef);
  CHECK(family_point_csv(kRef) == "0,0,0,-1,1,1");
  CHECK_THROWS(parse_family_point("1,2,3"));
  CHECK_THROWS(parse_family_point("a,b,c,d,e,f"));
}

TEST_CASE("affine and projective models") {
  TrigonalAffineForm t = trigonal_affine_form(kRef);
  CHECK(t.P == ZPoly{-1});
  CHECK(t.Q == ZPoly{1, 1, 0, 0, 1});
  PlaneQuarticForm F = homogenize(kRef);
  CHECK(F.d == 4);
  CHECK(F.c[tform_index<ZRing>(4, 0, 3)] == 1);   // y^3 z
  CHECK(F.c[tform_index<ZRing>(4, 4, 0)] == -1);  // -x^4
  CHECK(F.c[tform_index<ZRing>(4, 0, 1)] == 1);   // -p8 y z^3
  CHECK(F.c[tform_index<ZRing>(4, 1, 0)] == -1);  // -p9 x z^3
  CHECK(F.c[tform_index<ZRing>(4, 0, 0)] == -1);  // -p12 z^4
}

TEST_CASE("reference discriminant and smoothness") {
  Int d = discriminant(kRef);
  CHECK(d == Int(2347) * Int(773569));
  CHECK(is_smooth_q(kRef));
  CHECK(discriminant(member(0, 0, 0, 0, 0, 0)) == 0);
  CHECK_FALSE(is_smooth_q(member(0, 0, 0, 0, 0, 0)));
}

TEST_CASE("scaling weight 72") {
  for (long lam : {2L, -2L, 3L}) {
    FamilyPoint b = member(1, -1, 2, 0, 1, -2);
    CHECK(discriminant(family_scale(b, Int(lam))) == ipow(Int(lam), 72) * discriminant(b));
  }
}

TEST_CASE("smoothness over Q agrees with the discriminant locus") {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 30; ++t) {
    FamilyPoint b;
    for (int i = 0; i < 6; ++i) b[i] = Int((long)(rng() % 5) - 2);
    CHECK(is_smooth_q(b) == (discriminant(b) != 0));
  }
}

TEST_CASE("reference reductions") {
  FqField k2(2), k3(3);
  CHECK(is_smooth_fq(k2, kRef));
  CHECK(is_smooth_fq(k3, kRef));
  CHECK(point_count(k2, kRef) == 1);
  CHECK(point_count(k3, kRef) == 4);
}

TEST_CASE("point counts against a brute-force sweep") {
  std::mt19937_64 rng(59);
  for (long p : {2L, 3L, 5L, 7L}) {
    FqField K(p);
    for (int t = 0; t < 8; ++t) {
      std::array<long, 6> arr;
      FamilyPoint b;
      for (int i = 0; i < 6; ++i) {
        arr[i] = (long)(rng() % (unsigned long)p);
        b[i] = Int(arr[i]);
      }
      long n = point_count(K, b);
      CHECK(n == brute_count(K, b));
      CHECK(n == point_count_fp(p, arr));
      CHECK(is_smooth_fq(K, b) == is_smooth_fp(p, arr));
      if (is_smooth_fq(K, b)) {
        // genus-3 Weil interval
        double bound = 6.0 * std::sqrt((double)p);
        CHECK(std::abs((double)n - (double)(p + 1)) <= bound + 1e-9);
      }
    }
  }
}

TEST_CASE("extension-field counting") {
  FqField F4 = FqField::canonical(2, 2);
  CHECK(point_count(F4, kRef) == brute_count(F4, kRef));
  CHECK(is_smooth_fq(F4, kRef));
}

TEST_CASE("height box bounds") {
  Int a = ipow(Int(10), 4);
  std::array<Int, 6> n = box_bounds(a);
  CHECK(n == std::array<Int, 6>{1, 1, 2, 2, 3, 4});
  CHECK(box_count(a) == 14175);
  CHECK(enumerate_family(a, false, {}) == 14175);
  CHECK(box_count(Int(1)) == 1);  // only the zero member has height < 1
}

TEST_CASE("height predicate edges") {
  FamilyPoint b = member(0, 0, 0, 0, 0, 2);  // height 2^6 = 64
  CHECK(height_less_than(b, Int(65)));
  CHECK_FALSE(height_less_than(b, Int(64)));
  CHECK(height_less_than(kRef, Int(2)));
  CHECK_FALSE(height_less_than(kRef, Int(1)));
}

TEST_CASE("minimality") {
  CHECK(is_minimal(kRef));
  CHECK_FALSE(is_minimal(family_scale(kRef, Int(2))));
  CHECK_FALSE(is_minimal(family_scale(kRef, Int(-1))));  // sign normalization
  CHECK_FALSE(is_minimal(member(0, 0, 0, 0, 0, 0)));
}

TEST_CASE("streaming the box") {
  Int a = ipow(Int(10), 4);
  unsigned long long seen = 0;
  unsigned long long total = enumerate_family(a, false, [&](const FamilyPoint& b) {
    ++seen;
    CHECK(height_less_than(b, a));
  });
  CHECK(seen == total);
  unsigned long long minimal = enumerate_family(a, true, [&](const FamilyPoint& b) {
    CHECK(is_minimal(b));
  });
  CHECK(minimal < total);
  CHECK(minimal > 0);
}
