#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hyperflex/newton.hpp"
#include "hyperflex/series.hpp"

#include <random>

using namespace hfx;

namespace {
QPoly qp(std::initializer_list<long> v) {
  QPoly r;
  for (long c : v) r.emplace_back(c);
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}
}  // namespace

TEST_CASE("polygon of a square root") {
  NewtonPolygon np = newton_polygon(qp({-2, 0, 1}), Int(2));  // x^2 - 2
  CHECK(np.ord == 0);
  REQUIRE(np.segments.size() == 1);
  CHECK(np.segments[0].slope == Rat(-1, 2));
  CHECK(np.segments[0].e == 2);
  CHECK(np.segments[0].h == 1);
  CHECK(np.segments[0].length == 2);
  FqField k2(2);
  PolyOf<FqField> res = residual_polynomial(qp({-2, 0, 1}), Int(2), np.segments[0]);
  CHECK(peq(k2, res, PolyOf<FqField>{{1}, {1}}));  // y + 1
}

TEST_CASE("two-segment polygon with a zero root") {
  // x^2 (x - 2)(4x - 1) over p = 2: ord 2, slopes -2 then 1... compute:
  // (x-2)(4x-1) = 4x^2 - 9x + 2; times x^2: coefficients (0,0,2,-9,4)
  NewtonPolygon np = newton_polygon(qp({0, 0, 2, -9, 4}), Int(2));
  CHECK(np.ord == 2);
  REQUIRE(np.segments.size() == 2);
  CHECK(np.segments[0].slope == Rat(-1));
  CHECK(np.segments[0].length == 1);
  CHECK(np.segments[1].slope == Rat(2));
  CHECK(np.segments[1].length == 1);
}

TEST_CASE("polygon merges under products") {
  // f = x^2 - 2 (slope -1/2 twice), g = x - 4 (slope -2)
  QPoly prod = pmul(QField{}, qp({-2, 0, 1}), qp({-4, 1}));
  NewtonPolygon np = newton_polygon(prod, Int(2));
  REQUIRE(np.segments.size() == 2);
  CHECK(np.segments[0].slope == Rat(-2));
  CHECK(np.segments[0].length == 1);
  CHECK(np.segments[1].slope == Rat(-1, 2));
  CHECK(np.segments[1].length == 2);
}

TEST_CASE("random hull invariants") {
  std::mt19937_64 rng(31);
  const long primes[3] = {2, 3, 5};
  for (int t = 0; t < 150; ++t) {
    int deg = 1 + (int)(rng() % 10);
    QPoly f(deg + 1, Rat(0));
    for (int i = 0; i <= deg; ++i) {
      if (i != deg && rng() % 3 == 0) continue;
      long num = (long)(rng() % 33) - 16;
      if (i == deg && num == 0) num = 3;
      f[i] = Rat(num, 1 + (long)(rng() % 9));
      f[i].canonicalize();
    }
    Int p(primes[t % 3]);
    NewtonPolygon np = newton_polygon(f, p);
    long len = 0;
    for (size_t i = 0; i < np.segments.size(); ++i) {
      len += np.segments[i].length;
      if (i) CHECK(np.segments[i - 1].slope < np.segments[i].slope);
      CHECK(np.segments[i].slope == Rat(-np.segments[i].h, np.segments[i].e));
    }
    CHECK(len == pdeg(f) - np.ord);
    for (int i = 0; i <= pdeg(f); ++i) {
      if (f[i] == 0) continue;
      Rat v(val_p(f[i], p));
      for (const auto& seg : np.segments) {
        if (i < seg.i0 || i > seg.i1) continue;
        Rat line = Rat(seg.v0) + seg.slope * Rat(i - seg.i0);
        CHECK(v >= line);
      }
    }
  }
}

TEST_CASE("series ring basics") {
  Series one = Series::constant(Rat(1), 8);
  Series geom = ser_inv(ser_sub(one, Series::x(8)));  // 1/(1-x)
  for (long i = 0; i < 8; ++i) CHECK(geom.c[i] == 1);
  CHECK(ser_eq_mod(ser_mul(ser_sub(one, Series::x(8)), geom), one, 8));
  Series log1 = ser_integrate(geom);  // -log(1-x), precision 9
  CHECK(log1.N == 9);
  CHECK(log1.c[0] == 0);
  CHECK(log1.c[5] == Rat(1, 5));
  Series back = ser_differentiate(log1);
  CHECK(ser_eq_mod(back, geom, 8));
}

TEST_CASE("fixed point solver: Catalan numbers") {
  Series cat = series_solve_fixed_point(
      [](const Series& w) {
        Series r = ser_mul(w, w);
        r = ser_mul(Series::x(w.N), r);
        r = ser_add(Series::constant(Rat(1), w.N), r);
        return ser_truncate(r, w.N);
      },
      8);
  const long expect[8] = {1, 1, 2, 5, 14, 42, 132, 429};
  for (long i = 0; i < 8; ++i) CHECK(cat.c[i] == expect[i]);
}

TEST_CASE("derivative inverts integration") {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 60; ++t) {
    Series a = Series::zero(9);
    for (long i = 0; i < 9; ++i) {
      a.c[i] = Rat((long)(rng() % 41) - 20, 1 + (long)(rng() % 7));
      a.c[i].canonicalize();
    }
    Series b = ser_differentiate(ser_integrate(a));
    CHECK(b.N == a.N);
    CHECK(b.c == a.c);
  }
}
