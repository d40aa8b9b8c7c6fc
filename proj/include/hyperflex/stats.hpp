#pragma once
// Exhaustive finite-field sweeps over the family, the combined density /
// point-cap arithmetic, and height-box counting reports.
#include "hyperflex/family.hpp"

namespace hfx::stats {

struct DensityReport {
  long p;
  Int total;    // p^6
  Int smooth;   // members with good reduction
  Rat density;  // smooth / total
  std::string decimal;  // 6-digit rendering
};
// exhaustive sweep of F_p^6 (desk scale: p <= 13)
DensityReport density_good_reduction(long p);

struct MaxPointsReport {
  long max_count;
  std::array<long, 6> argmax;  // first maximizer in lexicographic sweep order
  long min_count_smooth;       // over smooth members (>= 1: the point at infinity)
};
MaxPointsReport max_points_f7();

struct ChabautyReport {
  Rat selmer_bound;  // S
  Rat delta_low;     // (8 - S)/7 clamped to [0, 1]
  Rat d7;            // good-reduction density input
  Rat majority_low;  // max(0, delta_low + d7 - 1)
  long max_f7;
  long point_cap;  // max_f7 + 4
};
ChabautyReport chabauty_combine(const Rat& S, const Rat& d7, long maxF7);

struct BoxReport {
  Int a;
  Int count;             // box_count(a)
  std::string ratio;     // decimal of count / (64 a^{7/12}), 6 digits
};
BoxReport box_count_report(const Int& a);

std::string rat_decimal(const Rat& r, int digits = 6);

}  // namespace hfx::stats
