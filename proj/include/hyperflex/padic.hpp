#pragma once
// The formal branch at the hyperflex, the differential basis ω1, ω2, ω3, the
// p-adic logarithm on the residue disk at infinity, and the reduction ρ of
// the logarithm image, with explicit tail-bound certificates. The local
// parameter is x; the branch z(x) starts at x^4.
#include "hyperflex/family.hpp"
#include "hyperflex/newton.hpp"
#include "hyperflex/series.hpp"

namespace hfx::padic {

// precondition failures of the disk analysis (bad reduction, extra residue
// disks, tail-bound violations)
struct ScopeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// valuation comparison not settled by the requested precision
struct PrecisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BranchSeries {
  Series z;  // solves z = x^4 + p2 x^2 z + p5 x z^2 + p8 z^3 + p6 x^2 z^2 + p9 x z^3 + p12 z^4
  long N;
};
BranchSeries solve_branch(const FamilyPoint& b, long N);  // N >= 5
// the defining equation evaluated at a candidate branch (zero for the solution)
Series branch_residual(const FamilyPoint& b, const Series& z);

struct OmegaBasis {
  Series w1, w2, w3;  // w1 = 1/(dE/dz on the branch), w2 = x w1, w3 = z w1
  long N;
};
OmegaBasis omega_basis(const FamilyPoint& b, long N);

struct LogSeries {
  Series l1, l2, l3;  // term-by-term integrals of w1, w2, w3
  long p;
  long N;
};
LogSeries formal_log(const FamilyPoint& b, long p, long N);

// reduction of a nonzero p-adic vector: divide by p^(min valuation), reduce
// mod p, normalize the first nonzero coordinate to 1
std::array<long, 3> rho(const std::array<Rat, 3>& v, long p);

struct StratumInfo {
  long m;                     // stratum v(x) = m
  std::array<long, 3> vals;   // exact component valuations on the stratum
  std::array<long, 3> cls;    // reduction class (projective, 0/1 entries)
};

struct RhoLogImage {
  std::vector<std::array<long, 3>> image;  // sorted distinct classes
  std::vector<StratumInfo> strata;         // m = 1 .. stable_from
  long stable_from;  // all strata with m >= stable_from share the last class
  long precision;
};
RhoLogImage rho_log_image(const FamilyPoint& b, long p, long N);

// certify that 0 is the only root of valuation >= 1 of the series (true =
// certified; false = a competing term forbids the certificate). exact_input
// marks a plain polynomial with no truncation tail.
bool torsion_check_series(const Series& l3, long p, bool exact_input);
bool torsion_disk_check(const FamilyPoint& b, long p, long N);

// 1 - s - k s: the sieve's lower bound for the density of members whose only
// rational point is the hyperflex, from a per-class equidistribution bound s
// and a reduction-image size k
Rat sieve_lower_bound(const Rat& selmer_eq_bound, long image_size);

}  // namespace hfx::padic
