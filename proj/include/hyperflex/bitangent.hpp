#pragma once
// Bitangent elimination for family members. Substituting a candidate line
// y = a·x + β into the affine equation and negating gives a monic quartic in
// x; bitangency means that quartic is a perfect square (x^2 + cx + d)^2.
// Eliminating c and d leaves two residual conditions r1, r2 in (a, β); their
// resultant in β is a degree-27 polynomial in the slope a whose roots are the
// slopes of the 27 affine bitangents.
#include "hyperflex/family.hpp"
#include "hyperflex/newton.hpp"

namespace hfx::bitangent {

// bivariate polynomial in (a, β): index = β-degree, entry = polynomial in a
using BPoly = std::vector<QPoly>;

BPoly bp_trim(BPoly f);
int bp_deg(const BPoly& f);
BPoly bp_add(const BPoly& f, const BPoly& g);
BPoly bp_sub(const BPoly& f, const BPoly& g);
BPoly bp_mul(const BPoly& f, const BPoly& g);
BPoly bp_scal(BPoly f, const Rat& s);
// evaluate at β = t, coefficients still polynomials in a ... and full eval
QPoly bp_eval_beta(const BPoly& f, const Rat& t);
Rat bp_eval(const BPoly& f, const Rat& a0, const Rat& beta0);

struct TangencySystem {
  BPoly r1;  // β-degree 2, leading β-coefficient -3a
  BPoly r2;  // β-degree 3, leading β-coefficient -1
};
TangencySystem tangency_system(const FamilyPoint& b);

// coefficients (ascending in x) of the monic quartic obtained from the
// substitution y = a·x + β; entry 4 is the constant 1
std::array<BPoly, 5> substituted_quartic(const FamilyPoint& b);

struct DegenerateFamilyMember : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BitangentResultant {
  QPoly raw;        // Res_β(r1, r2), exact rational coefficients
  ZPoly primitive;  // integer representative, content removed, positive lead
  QPoly monic;      // leading coefficient 1
  int degree;       // 27 for smooth members
};
// requires a nonzero discriminant; degree collapse throws DegenerateFamilyMember
BitangentResultant bitangent_resultant(const FamilyPoint& b);

struct PrimePatternReport {
  long p;
  bool degree_drop;  // leading coefficient vanishes mod p
  bool squarefree;
  bool ramified;  // !squarefree || degree_drop
  std::vector<std::pair<int, int>> pattern;  // (factor degree, multiplicity), sorted
};

struct TwoAdicReport {
  NewtonPolygon np;                         // of the monic resultant at p = 2
  std::vector<PolyOf<FqField>> residuals;   // one residual per hull segment
  std::vector<long> degree_divisibility;    // per segment: denominators e of the slopes
};

struct GaloisReport {
  ZPoly primitive;
  std::vector<PrimePatternReport> primes;
  bool has_two_adic = false;
  TwoAdicReport two_adic;  // populated when 2 is among the listed primes
};
GaloisReport galois_pattern_report(const FamilyPoint& b, const std::vector<long>& primes);

}  // namespace hfx::bitangent
