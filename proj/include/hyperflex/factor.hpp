#pragma once
// Univariate factorization over F_{p^k}: squarefree decomposition, then
// distinct-degree splitting, then equal-degree splitting (Cantor–Zassenhaus;
// trace-map splitting in characteristic 2). Deterministically seeded.
#include "hyperflex/fq.hpp"

namespace hfx {

struct FqFactorization {
  FqField::Elem unit;                                   // leading coefficient of the input
  std::vector<std::pair<PolyOf<FqField>, int>> factors;  // monic irreducible, multiplicity;
                                                         // sorted by (degree, coeff key)
};

FqFactorization factor_univariate(const FqField& K, const PolyOf<FqField>& f);

// convenience: multiset of (degree, multiplicity), sorted
std::vector<std::pair<int, int>> factor_pattern(const FqField& K, const PolyOf<FqField>& f);

bool is_squarefree_fq(const FqField& K, const PolyOf<FqField>& f);

// reduce an integer polynomial into F_{p^k}[x] (through F_p)
PolyOf<FqField> reduce_zpoly(const FqField& K, const ZPoly& f);

}  // namespace hfx
