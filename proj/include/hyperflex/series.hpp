#pragma once
// Truncated formal power series over Q with explicit precision: a Series with
// precision N represents its value modulo x^N. Binary operations truncate to
// the minimum precision of the operands; integration raises precision by one.
#include "hyperflex/int.hpp"

#include <functional>

namespace hfx {

struct Series {
  std::vector<Rat> c;  // coefficients 0 .. N-1 (size == N)
  long N = 0;

  static Series zero(long N) {
    Series s;
    s.N = N;
    s.c.assign(N, Rat(0));
    return s;
  }
  static Series x(long N) {
    Series s = zero(N);
    if (N > 1) s.c[1] = 1;
    return s;
  }
  static Series constant(const Rat& v, long N) {
    Series s = zero(N);
    if (N > 0) s.c[0] = v;
    return s;
  }
  Rat coeff(long n) const {
    if (n >= N) throw std::out_of_range("Series::coeff beyond precision");
    return c[n];
  }
  // valuation of the known part; returns N if zero mod x^N
  long val() const {
    for (long i = 0; i < N; ++i)
      if (c[i] != 0) return i;
    return N;
  }
};

Series ser_add(const Series& a, const Series& b);
Series ser_sub(const Series& a, const Series& b);
Series ser_neg(Series a);
Series ser_scal(Series a, const Rat& s);
Series ser_mul(const Series& a, const Series& b);
Series ser_inv(const Series& a);        // constant term must be a unit
Series ser_integrate(const Series& a);  // precision N -> N+1, no constant
Series ser_differentiate(const Series& a);
bool ser_eq_mod(const Series& a, const Series& b, long m);
Series ser_truncate(Series a, long m);

// Iterate z <- F(z) from z = 0 at precision N until stable mod x^N.
// Requires the valuation of successive differences to strictly increase;
// throws otherwise (non-contracting update).
Series series_solve_fixed_point(const std::function<Series(const Series&)>& F, long N);

}  // namespace hfx
