#include "hyperflex/stats.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace hfx::stats {

std::string rat_decimal(const Rat& r, int digits) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(digits);
  os << r.get_d();
  return os.str();
}

DensityReport density_good_reduction(long p) {
  if (p < 2 || p > 13 || !is_probable_prime(Int(p)))
    throw std::invalid_argument("density_good_reduction: p must be a prime <= 13");
  DensityReport rep;
  rep.p = p;
  rep.total = ipow(Int(p), 6);
  Int smooth = 0;
  std::array<long, 6> b{};
  // sweep partitioned by the first coordinate, lexicographic within
  for (b[0] = 0; b[0] < p; ++b[0])
    for (b[1] = 0; b[1] < p; ++b[1])
      for (b[2] = 0; b[2] < p; ++b[2])
        for (b[3] = 0; b[3] < p; ++b[3])
          for (b[4] = 0; b[4] < p; ++b[4])
            for (b[5] = 0; b[5] < p; ++b[5])
              if (is_smooth_fp(p, b)) ++smooth;
  rep.smooth = smooth;
  rep.density = Rat(smooth, rep.total);
  rep.density.canonicalize();
  rep.decimal = rat_decimal(rep.density);
  return rep;
}

MaxPointsReport max_points_f7() {
  const long p = 7;
  MaxPointsReport rep;
  rep.max_count = -1;
  rep.min_count_smooth = std::numeric_limits<long>::max();
  std::array<long, 6> b{};
  for (b[0] = 0; b[0] < p; ++b[0])
    for (b[1] = 0; b[1] < p; ++b[1])
      for (b[2] = 0; b[2] < p; ++b[2])
        for (b[3] = 0; b[3] < p; ++b[3])
          for (b[4] = 0; b[4] < p; ++b[4])
            for (b[5] = 0; b[5] < p; ++b[5]) {
              if (!is_smooth_fp(p, b)) continue;
              long n = point_count_fp(p, b);
              if (n > rep.max_count) {
                rep.max_count = n;
                rep.argmax = b;
              }
              rep.min_count_smooth = std::min(rep.min_count_smooth, n);
            }
  return rep;
}

ChabautyReport chabauty_combine(const Rat& S, const Rat& d7, long maxF7) {
  if (S < 1) throw std::invalid_argument("chabauty_combine: the average bound must be >= 1");
  ChabautyReport rep;
  rep.selmer_bound = S;
  rep.delta_low = (Rat(8) - S) / 7;
  rep.delta_low.canonicalize();
  if (rep.delta_low < 0) rep.delta_low = 0;
  if (rep.delta_low > 1) rep.delta_low = 1;
  rep.d7 = d7;
  rep.majority_low = rep.delta_low + d7 - 1;
  rep.majority_low.canonicalize();
  if (rep.majority_low < 0) rep.majority_low = 0;
  rep.max_f7 = maxF7;
  rep.point_cap = maxF7 + 4;
  return rep;
}

BoxReport box_count_report(const Int& a) {
  if (a < 1) throw std::invalid_argument("box_count_report: a must be >= 1");
  BoxReport rep;
  rep.a = a;
  rep.count = box_count(a);
  // ratio to 64 a^{7/12}
  double da = mpz_get_d(a.get_mpz_t());
  double denom = 64.0 * std::pow(da, 7.0 / 12.0);
  double ratio = mpz_get_d(rep.count.get_mpz_t()) / denom;
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(6);
  os << ratio;
  rep.ratio = os.str();
  return rep;
}

}  // namespace hfx::stats
