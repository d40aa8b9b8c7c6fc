#pragma once
// The E6 root lattice in simple-root coordinates (Bourbaki numbering), its
// Weyl group as 6x6 integer matrices, and the mod-2 quadratic space Λ/2Λ with
// q(v) = (-1)^{(v,v)/2}: root/Weyl enumeration by closure, Coxeter-element
// data, the mod-2 image and its orthogonal-group order, orbit and fixing
// statistics.
#include "hyperflex/poly.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace hfx::e6 {

using Vec6 = std::array<int, 6>;
using Mat6 = std::array<std::array<int, 6>, 6>;
using M2 = std::array<uint8_t, 6>;  // F_2 matrix, rows as 6-bit masks

Mat6 gram_matrix();                // E6 Cartan matrix, Bourbaki numbering
Mat6 simple_reflection(int i);     // s_i = I - e_i (G e_i)^T, i in 0..5
Mat6 mat_identity();
Mat6 mat_mul(const Mat6& a, const Mat6& b);
Vec6 mat_apply(const Mat6& m, const Vec6& v);
Int mat_det(const Mat6& m);
ZPoly mat_charpoly(const Mat6& m);  // det(tI - M), exact
bool preserves_gram(const Mat6& m);

struct E6RootSystem {
  Mat6 gram;
  std::vector<Vec6> roots;  // 72, sorted
};
E6RootSystem build_root_system();

// breadth-first closure of the six simple reflections; deterministic order
const std::vector<Mat6>& weyl_group();

// inner product (u, v) under the Gram form
long gram_pair(const Vec6& u, const Vec6& v);

// ---- mod-2 layer ----
M2 reduce_mod2(const Mat6& m);
M2 m2_identity();
bool m2_is_identity(const M2& m);
uint8_t m2_apply(const M2& m, uint8_t v);  // v = class as 6-bit vector
int m2_rank(M2 m);
bool m2_invertible(const M2& m);
uint64_t m2_key(const M2& m);

struct ModTwoQuadraticSpace {
  std::array<int, 64> q;  // +1 / -1 per class
  uint8_t pair(uint8_t u, uint8_t v) const;  // (u,v) mod 2
};
ModTwoQuadraticSpace mod2_space();

// does the mod-2 matrix preserve the pairing / the quadratic form?
bool m2_preserves_pairing(const M2& m);
bool m2_preserves_q(const M2& m, const ModTwoQuadraticSpace& sp);

// ---- operations ----

Int dual_index();  // |det Gram| = index of the lattice in its dual

struct CoxeterChecks {
  Int det_one_minus;  // det(I - w_cox)
  ZPoly charpoly;     // char. polynomial of w_cox
  int order;          // multiplicative order
};
// factor_order: permutation of {0..5} giving the product s_{o0} s_{o1} ... s_{o5}
CoxeterChecks coxeter_checks(const std::array<int, 6>& factor_order = {0, 1, 2, 3, 4, 5});

// basis bit-vectors of the common mod-2 fixed space of a subset of W
std::vector<uint8_t> w_mod2_fixed_space(const std::vector<Mat6>& subset);

// dimension of the solution space of the commuting system for the six
// generator reductions (exposed for the sanity contrast with {identity})
int commutant_dim(const std::vector<M2>& gens);
// the set of invertible pairing-preserving mod-2 matrices commuting with all
// six generator reductions (expected: {identity})
std::vector<M2> pairing_centralizer_of_w();

struct AutImageChecks {
  bool injective;
  size_t image_order;
  Int target_order;  // orthogonal-group order from the closed formula
  bool image_preserves_q;
};
AutImageChecks aut_image_checks();

struct OrbitSectionReport {
  bool transitive_27;
  bool transitive_36;
  bool sections_ok;        // every q=-1 class has nonzero q=+1 classes in both pairing halves
  size_t fixing_count;     // #{w : w fixes some nonzero mod-2 class}
  size_t weyl_order;
  bool coxeter_fixes_none; // the Coxeter element fixes no nonzero class
  bool roots_cover_36;     // reductions of the 72 roots are exactly the 36 q=-1 classes
};
OrbitSectionReport orbit_and_section_checks();

}  // namespace hfx::e6
