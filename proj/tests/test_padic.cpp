#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hyperflex/padic.hpp"

#include <random>

using namespace hfx;
using namespace hfx::padic;

namespace {
FamilyPoint member(long p2, long p5, long p6, long p8, long p9, long p12) {
  FamilyPoint b;
  b.v = {Int(p2), Int(p5), Int(p6), Int(p8), Int(p9), Int(p12)};
  return b;
}
const FamilyPoint kRef = member(0, 0, 0, -1, 1, 1);
}  // namespace

TEST_CASE("branch series solves the defining equation") {
  BranchSeries br = solve_branch(kRef, 13);
  Series expz = Series::zero(13);
  expz.c[4] = 1;
  expz.c[12] = -1;
  CHECK(br.z.c == expz.c);
  CHECK(branch_residual(kRef, br.z).val() >= 13);

  // the zero member collapses to z = x^4 exactly
  BranchSeries z0 = solve_branch(member(0, 0, 0, 0, 0, 0), 20);
  for (long i = 0; i < 20; ++i) CHECK(z0.z.c[i] == (i == 4 ? 1 : 0));

  std::mt19937_64 rng(83);
  for (int t = 0; t < 10; ++t) {
    FamilyPoint b;
    for (int i = 0; i < 6; ++i) b[i] = Int((long)(rng() % 5) - 2);
    BranchSeries s = solve_branch(b, 11);
    CHECK(branch_residual(b, s.z).val() >= 11);
    CHECK(s.z.val() == 4);
  }
}

TEST_CASE("differential basis") {
  OmegaBasis w = omega_basis(kRef, 12);
  Series expw = Series::zero(12);
  expw.c[0] = 1;
  expw.c[8] = -3;
  expw.c[9] = 3;
  CHECK(w.w1.c == expw.c);
  // w2 = x w1, w3 = z w1 with z of valuation 4
  for (long i = 1; i < 12; ++i) CHECK(w.w2.c[i] == w.w1.c[i - 1]);
  CHECK(w.w2.c[0] == 0);
  CHECK(w.w3.val() == 4);

  OmegaBasis wc = omega_basis(member(0, 0, 0, -1, 0, 0), 12);
  Series expc = Series::zero(12);
  expc.c[0] = 1;
  expc.c[8] = -3;
  CHECK(wc.w1.c == expc.c);
}

TEST_CASE("formal logarithm components") {
  LogSeries L = formal_log(kRef, 2, 13);
  Series e1 = Series::zero(13);
  e1.c[1] = 1;
  e1.c[9] = Rat(-1, 3);
  e1.c[10] = Rat(3, 10);
  CHECK(L.l1.c == e1.c);
  Series e2 = Series::zero(11);
  e2.c[2] = Rat(1, 2);
  e2.c[10] = Rat(-3, 10);
  CHECK(ser_eq_mod(L.l2, e2, 11));
  Series e3 = Series::zero(13);
  e3.c[5] = Rat(1, 5);
  CHECK(L.l3.c == e3.c);

  // differentiation recovers the basis
  OmegaBasis w = omega_basis(kRef, 12);
  CHECK(ser_eq_mod(ser_differentiate(L.l1), w.w1, 12));
  CHECK(ser_eq_mod(ser_differentiate(L.l2), w.w2, 12));
  CHECK(ser_eq_mod(ser_differentiate(L.l3), w.w3, 12));
  CHECK(L.l1.c[0] == 0);
  CHECK(L.l2.c[0] == 0);
  CHECK(L.l3.c[0] == 0);
}

TEST_CASE("vector reduction rho") {
  CHECK(rho({Rat(2), Rat(4), Rat(8)}, 2) == std::array<long, 3>{1, 0, 0});
  CHECK(rho({Rat(0), Rat(0), Rat(3)}, 3) == std::array<long, 3>{0, 0, 1});
  CHECK(rho({Rat(6), Rat(2), Rat(4)}, 2) == std::array<long, 3>{1, 1, 0});
  CHECK(rho({Rat(3), Rat(10), Rat(0)}, 5) == std::array<long, 3>{1, 0, 0});
  CHECK(rho({Rat(1, 2), Rat(1), Rat(0)}, 2) == std::array<long, 3>{1, 0, 0});
  CHECK_THROWS(rho({Rat(0), Rat(0), Rat(0)}, 2));
}

TEST_CASE("reduced image of the logarithm on the disk") {
  RhoLogImage img = rho_log_image(kRef, 2, 13);
  std::vector<std::array<long, 3>> expected = {{1, 0, 0}, {1, 1, 0}};
  CHECK(img.image == expected);
  CHECK(img.stable_from == 2);
  REQUIRE(img.strata.size() >= 2);
  CHECK(img.strata[0].m == 1);
  CHECK(img.strata[0].vals == std::array<long, 3>{1, 1, 5});
  CHECK(img.strata[0].cls == std::array<long, 3>{1, 1, 0});
  CHECK(img.strata[1].vals == std::array<long, 3>{2, 3, 10});
  CHECK(img.strata[1].cls == std::array<long, 3>{1, 0, 0});

  // stability under extra precision
  RhoLogImage img2 = rho_log_image(kRef, 2, 17);
  CHECK(img2.image == img.image);
  CHECK(img2.stable_from == img.stable_from);
}

TEST_CASE("scope preconditions") {
  CHECK_THROWS_AS(rho_log_image(member(0, 0, 0, 0, 0, 0), 2, 13), ScopeError);
  CHECK_THROWS_AS(torsion_disk_check(member(0, 0, 0, 0, 0, 0), 2, 13), ScopeError);
}

TEST_CASE("torsion certificates on control series") {
  Series good = Series::zero(13);
  good.c[5] = Rat(1, 5);  // x^5/5: no competing term
  CHECK(torsion_check_series(good, 2, true));

  Series bad = Series::zero(13);
  bad.c[5] = Rat(1, 5);
  bad.c[6] = Rat(-1, 6);  // root at 6/5, which is 2-adically small
  CHECK_FALSE(torsion_check_series(bad, 2, true));

  // too little precision to bound the tail of a non-exact input
  Series tight = Series::zero(6);
  tight.c[5] = Rat(1, 5);
  CHECK_THROWS_AS(torsion_check_series(tight, 2, false), PrecisionError);

  CHECK(torsion_disk_check(kRef, 2, 13));
}

TEST_CASE("sieve lower bound arithmetic") {
  CHECK(sieve_lower_bound(Rat(1, 4), 2) == Rat(1, 4));
  CHECK(sieve_lower_bound(Rat(1, 4), 3) == 0);
  CHECK(sieve_lower_bound(Rat(0), 5) == 1);
  CHECK_THROWS(sieve_lower_bound(Rat(-1, 4), 2));
  CHECK_THROWS(sieve_lower_bound(Rat(1, 4), 8));
  CHECK_THROWS(sieve_lower_bound(Rat(1, 4), -1));
}
