#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hyperflex/ternary.hpp"

#include <random>

using namespace hfx;

namespace {
const ZRing Z{};

TForm<ZRing> form(int d) { return TForm<ZRing>::zero(Z, d); }

void setc(TForm<ZRing>& f, int i, int j, long v) {
  f.c[tform_index<ZRing>(f.d, i, j)] = Int(v);
}

Int getc(const TForm<ZRing>& f, int i, int j) { return f.c[tform_index<ZRing>(f.d, i, j)]; }
}  // namespace

TEST_CASE("monomial indexing") {
  auto m3 = ternary_monomials(3);
  CHECK(m3.size() == 10);
  for (size_t s = 0; s < m3.size(); ++s)
    CHECK(tform_index<ZRing>(3, m3[s][0], m3[s][1]) == (int)s);
}

TEST_CASE("multiplication and partials") {
  TForm<ZRing> l = form(1);
  setc(l, 1, 0, 1);
  setc(l, 0, 1, 1);
  setc(l, 0, 0, 1);  // x + y + z
  TForm<ZRing> sq = tform_mul(Z, l, l);
  CHECK(getc(sq, 2, 0) == 1);
  CHECK(getc(sq, 0, 2) == 1);
  CHECK(getc(sq, 0, 0) == 1);
  CHECK(getc(sq, 1, 1) == 2);
  CHECK(getc(sq, 1, 0) == 2);
  CHECK(getc(sq, 0, 1) == 2);

  TForm<ZRing> f = form(3);
  setc(f, 3, 0, 1);  // x^3
  setc(f, 1, 2, 1);  // x y^2
  TForm<ZRing> fx = tform_partial(Z, f, 0);
  CHECK(getc(fx, 2, 0) == 3);
  CHECK(getc(fx, 0, 2) == 1);
  CHECK(tform_eval(Z, f, Int(1), Int(2), Int(5)) == 5);  // 1 + 4
}

TEST_CASE("linear substitution") {
  TForm<ZRing> f = form(3);
  setc(f, 3, 0, 1);  // x^3
  // swap x and y
  std::array<std::array<long, 3>, 3> swp = {{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}};
  TForm<ZRing> g = tform_substitute_linear(Z, f, swp);
  CHECK(getc(g, 0, 3) == 1);
  CHECK(getc(g, 3, 0) == 0);
  // shear x -> x + 2z
  std::array<std::array<long, 3>, 3> sh = {{{1, 0, 2}, {0, 1, 0}, {0, 0, 1}}};
  TForm<ZRing> h = tform_substitute_linear(Z, f, sh);
  CHECK(getc(h, 3, 0) == 1);
  CHECK(getc(h, 2, 0) == 6);
  CHECK(getc(h, 1, 0) == 12);
  CHECK(getc(h, 0, 0) == 8);
}

TEST_CASE("resultant normalization and scaling") {
  TForm<ZRing> x3 = form(3), y3 = form(3), z3 = form(3);
  setc(x3, 3, 0, 1);
  setc(y3, 0, 3, 1);
  setc(z3, 0, 0, 1);
  CHECK(macaulay_resultant_ternary(x3, y3, z3) == 1);
  TForm<ZRing> x3s = x3;
  setc(x3s, 3, 0, 2);
  CHECK(macaulay_resultant_ternary(x3s, y3, z3) == ipow(Int(2), 9));
}

TEST_CASE("resultant of the diagonal quartic partials") {
  // partials of x^4 + y^4 + z^4 are 4x^3, 4y^3, 4z^3
  TForm<ZRing> fx = form(3), fy = form(3), fz = form(3);
  setc(fx, 3, 0, 4);
  setc(fy, 0, 3, 4);
  setc(fz, 0, 0, 4);
  CHECK(macaulay_resultant_ternary(fx, fy, fz) == ipow(Int(4), 27));
}

TEST_CASE("vanishing exactly on common zeros") {
  TForm<ZRing> x3 = form(3), y3 = form(3), s3 = form(3);
  setc(x3, 3, 0, 1);
  setc(y3, 0, 3, 1);
  // (x + y)^3 vanishes with the others at (0 : 0 : 1)
  TForm<ZRing> l = form(1);
  setc(l, 1, 0, 1);
  setc(l, 0, 1, 1);
  s3 = tform_mul(Z, tform_mul(Z, l, l), l);
  CHECK(macaulay_resultant_ternary(x3, y3, s3) == 0);
}

TEST_CASE("unimodular invariance and lambda^27 scaling") {
  std::mt19937_64 rng(41);
  std::array<std::array<long, 3>, 3> sh = {{{1, 2, -1}, {0, 1, 3}, {0, 0, 1}}};  // det 1
  int done = 0;
  for (int t = 0; t < 12 && done < 6; ++t) {
    std::array<TForm<ZRing>, 3> f;
    for (auto& g : f) {
      g = form(3);
      for (auto& c : g.c) c = Int((long)(rng() % 7) - 3);
    }
    try {
      Int r = macaulay_resultant_ternary(f[0], f[1], f[2]);
      Int rs = macaulay_resultant_ternary(tform_substitute_linear(Z, f[0], sh),
                                          tform_substitute_linear(Z, f[1], sh),
                                          tform_substitute_linear(Z, f[2], sh));
      CHECK(r == rs);
      std::array<TForm<ZRing>, 3> fl = f;
      for (auto& g : fl)
        for (auto& c : g.c) c *= 3;
      CHECK(macaulay_resultant_ternary(fl[0], fl[1], fl[2]) == ipow(Int(3), 27) * r);
      ++done;
    } catch (const MacaulayDegenerate&) {
      // extremely unlikely for random dense triples; just draw again
    }
  }
  CHECK(done >= 6);
}

TEST_CASE("finite-field specialization matches the integer resultant") {
  std::mt19937_64 rng(43);
  FqField K(7);
  int done = 0;
  for (int t = 0; t < 12 && done < 6; ++t) {
    std::array<TForm<ZRing>, 3> f;
    std::array<TForm<FqField>, 3> fk;
    for (int a = 0; a < 3; ++a) {
      f[a] = form(3);
      fk[a] = TForm<FqField>::zero(K, 3);
      for (size_t s = 0; s < f[a].c.size(); ++s) {
        long v = (long)(rng() % 13) - 6;
        f[a].c[s] = Int(v);
        fk[a].c[s] = K.from_long(v);
      }
    }
    try {
      Int rz = macaulay_resultant_ternary(f[0], f[1], f[2]);
      FqField::Elem rk = macaulay_resultant_ternary_fq(K, fk[0], fk[1], fk[2]);
      CHECK(K.eq(rk, K.from_int(rz)));
      ++done;
    } catch (const MacaulayDegenerate&) {
    }
  }
  CHECK(done >= 6);
}
