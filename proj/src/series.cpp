#include "hyperflex/series.hpp"

namespace hfx {

Series ser_add(const Series& a, const Series& b) {
  Series r = Series::zero(std::min(a.N, b.N));
  for (long i = 0; i < r.N; ++i) r.c[i] = a.c[i] + b.c[i];
  return r;
}

Series ser_sub(const Series& a, const Series& b) {
  Series r = Series::zero(std::min(a.N, b.N));
  for (long i = 0; i < r.N; ++i) r.c[i] = a.c[i] - b.c[i];
  return r;
}

Series ser_neg(Series a) {
  for (auto& v : a.c) v = -v;
  return a;
}

Series ser_scal(Series a, const Rat& s) {
  for (auto& v : a.c) v = v * s;
  return a;
}

Series ser_mul(const Series& a, const Series& b) {
  Series r = Series::zero(std::min(a.N, b.N));
  for (long i = 0; i < r.N; ++i) {
    if (a.c[i] == 0) continue;
    for (long j = 0; i + j < r.N; ++j) {
      if (b.c[j] == 0) continue;
      r.c[i + j] += a.c[i] * b.c[j];
    }
  }
  return r;
}

Series ser_inv(const Series& a) {
  if (a.N == 0) throw std::invalid_argument("ser_inv: zero precision");
  if (a.c[0] == 0) throw std::domain_error("ser_inv: constant term is not a unit");
  Series r = Series::zero(a.N);
  Rat c0inv = Rat(1) / a.c[0];
  r.c[0] = c0inv;
  for (long n = 1; n < a.N; ++n) {
    Rat s(0);
    for (long i = 1; i <= n; ++i) s += a.c[i] * r.c[n - i];
    r.c[n] = -s * c0inv;
  }
  return r;
}

Series ser_integrate(const Series& a) {
  Series r = Series::zero(a.N + 1);
  for (long n = 1; n <= a.N; ++n) r.c[n] = a.c[n - 1] / Rat(n);
  return r;
}

Series ser_differentiate(const Series& a) {
  if (a.N == 0) throw std::invalid_argument("ser_differentiate: zero precision");
  Series r = Series::zero(a.N - 1);
  for (long n = 0; n + 1 < a.N; ++n) r.c[n] = a.c[n + 1] * Rat(n + 1);
  return r;
}

bool ser_eq_mod(const Series& a, const Series& b, long m) {
  if (m > a.N || m > b.N) throw std::invalid_argument("ser_eq_mod: precision too low");
  for (long i = 0; i < m; ++i)
    if (a.c[i] != b.c[i]) return false;
  return true;
}

Series ser_truncate(Series a, long m) {
  if (m > a.N) throw std::invalid_argument("ser_truncate: cannot raise precision");
  a.c.resize(m);
  a.N = m;
  return a;
}

Series series_solve_fixed_point(const std::function<Series(const Series&)>& F, long N) {
  Series z = Series::zero(N);
  long prev_val = -1;
  for (long iter = 0; iter <= N + 1; ++iter) {
    Series zn = F(z);
    if (zn.N < N) throw std::runtime_error("series_solve_fixed_point: update lost precision");
    zn = ser_truncate(std::move(zn), N);
    long v = ser_sub(zn, z).val();
    if (v >= N) return zn;
    if (v <= prev_val)
      throw std::runtime_error("series_solve_fixed_point: update map does not increase valuation");
    prev_val = v;
    z = std::move(zn);
  }
  throw std::runtime_error("series_solve_fixed_point: did not stabilize");
}

}  // namespace hfx
