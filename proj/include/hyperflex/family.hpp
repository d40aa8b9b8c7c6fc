#pragma once
// The weighted family of genus-3 plane quartics with a marked hyperflex:
//   C_b : y^3 = x^4 + P(x) y + Q(x),
//   P = p2 x^2 + p5 x + p8,  Q = x^4 + p6 x^2 + p9 x + p12,
//   b = (p2, p5, p6, p8, p9, p12), coordinate weights (2,5,6,8,9,12).
// The scaling action is p_i ↦ λ^i p_i; height(b) = max |p_i|^{72/i}.
// The projective model F(x,y,z) = y^3 z - P_h y - Q_h meets z = 0 only at
// (0:1:0), which is a smooth hyperflex for every member, so smoothness is an
// affine question.
#include "hyperflex/factor.hpp"
#include "hyperflex/fq.hpp"
#include "hyperflex/poly.hpp"
#include "hyperflex/ternary.hpp"

#include <array>
#include <functional>
#include <optional>
#include <string>

namespace hfx {

inline constexpr std::array<int, 6> kFamilyWeights = {2, 5, 6, 8, 9, 12};
inline constexpr std::array<const char*, 6> kFamilyCoordNames = {"p2", "p5", "p6",
                                                                 "p8", "p9", "p12"};

struct FamilyPoint {
  std::array<Int, 6> v{};  // p2, p5, p6, p8, p9, p12

  Int& operator[](int i) { return v[i]; }
  const Int& operator[](int i) const { return v[i]; }
  bool operator==(const FamilyPoint& o) const { return v == o.v; }
  bool is_zero() const {
    for (const auto& x : v)
      if (x != 0) return false;
    return true;
  }
};

FamilyPoint parse_family_point(const std::string& csv);  // "p2,p5,p6,p8,p9,p12"
std::string family_point_csv(const FamilyPoint& b);
FamilyPoint family_scale(const FamilyPoint& b, const Int& lambda);  // p_i ↦ λ^i p_i

// exact height test: height(b) < a  ⟺  |p_i|^72 < a^{w_i} for every coordinate
bool height_less_than(const FamilyPoint& b, const Int& a);

// minimal representative of its scaling orbit: nonzero, no prime q with
// q^{w_i} | p_i for all i, and sign-normalized (p5 > 0, or p5 = 0 and p9 >= 0)
bool is_minimal(const FamilyPoint& b);

struct TrigonalAffineForm {
  ZPoly P;  // degree <= 2
  ZPoly Q;  // degree 4, monic
};
TrigonalAffineForm trigonal_affine_form(const FamilyPoint& b);

using PlaneQuarticForm = TForm<ZRing>;
PlaneQuarticForm homogenize(const FamilyPoint& b);

// Δ0(b) = Res(F_x, F_y, F_z) / 2^14  (integral, primitive normalization;
// vanishes exactly on the singular members; weighted-homogeneous of degree 72)
Int discriminant(const FamilyPoint& b);

// y-elimination data shared by the smoothness solvers:
//   S1 = 27 Q^2 - 4 P^3   (vanishes at x0 iff the cubic in y has a repeated root)
//   S2 = -Q'^3 + P P'^2 Q' - Q P'^3   (eliminant of (G, G_x))
// Valid verbatim in every characteristic; at most one of them vanishes identically.

// smoothness over the algebraic closure of F_{p^k}, via factorization of
// gcd(S1, S2) and a y-gcd check in each residue tower field
bool is_smooth_fq(const FqField& K, const FamilyPoint& b);
// smoothness over the closure of Q, via dynamic evaluation (no factorization over Q)
bool is_smooth_q(const FamilyPoint& b);

// #C_b(F_q) on the projective model (includes the point at infinity)
long point_count(const FqField& K, const FamilyPoint& b);

// fast prime-field paths used by exhaustive sweeps (p small)
bool is_smooth_fp(long p, const std::array<long, 6>& b);
long point_count_fp(long p, const std::array<long, 6>& b);

// per-coordinate enumeration bounds: N_i = max{ n >= 0 : n^72 < a^{w_i} }
std::array<Int, 6> box_bounds(const Int& a);
// product of (2 N_i + 1)
Int box_count(const Int& a);

// stream the box { height < a } in lexicographic order; returns the count of
// streamed points. The callback may be empty (counting only).
unsigned long long enumerate_family(const Int& a, bool minimal_only,
                                    const std::function<void(const FamilyPoint&)>& cb);

}  // namespace hfx
