#include "hyperflex/padic.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace hfx::padic {

namespace {

Series branch_rhs(const FamilyPoint& b, const Series& z, long N) {
  const Rat p2(b[0]), p5(b[1]), p6(b[2]), p8(b[3]), p9(b[4]), p12(b[5]);
  Series x = Series::x(N);
  Series x2 = ser_mul(x, x);
  Series z2 = ser_mul(z, z);
  Series z3 = ser_mul(z2, z);
  Series z4 = ser_mul(z2, z2);
  Series r = ser_mul(x2, x2);                       // x^4
  r = ser_add(r, ser_scal(ser_mul(x2, z), p2));     // p2 x^2 z
  r = ser_add(r, ser_scal(ser_mul(x, z2), p5));     // p5 x z^2
  r = ser_add(r, ser_scal(z3, p8));                 // p8 z^3
  r = ser_add(r, ser_scal(ser_mul(x2, z2), p6));    // p6 x^2 z^2
  r = ser_add(r, ser_scal(ser_mul(x, z3), p9));     // p9 x z^3
  r = ser_add(r, ser_scal(z4, p12));                // p12 z^4
  return r;
}

}  // namespace

BranchSeries solve_branch(const FamilyPoint& b, long N) {
  if (N < 5) throw std::invalid_argument("solve_branch: precision must be at least 5");
  Series z = series_solve_fixed_point(
      [&](const Series& w) { return branch_rhs(b, ser_truncate(w, N), N); }, N);
  return {z, N};
}

Series branch_residual(const FamilyPoint& b, const Series& z) {
  return ser_sub(z, branch_rhs(b, z, z.N));
}

OmegaBasis omega_basis(const FamilyPoint& b, long N) {
  const Rat p2(b[0]), p5(b[1]), p6(b[2]), p8(b[3]), p9(b[4]), p12(b[5]);
  Series z = solve_branch(b, N).z;
  Series x = Series::x(N);
  Series x2 = ser_mul(x, x);
  Series z2 = ser_mul(z, z);
  Series z3 = ser_mul(z2, z);
  // d/dz of (x^4 + p2 x^2 z + ... + p12 z^4 - z), negated to constant term +1
  Series den = Series::constant(1, N);
  den = ser_sub(den, ser_scal(x2, p2));
  den = ser_sub(den, ser_scal(ser_mul(x, z), 2 * p5));
  den = ser_sub(den, ser_scal(z2, 3 * p8));
  den = ser_sub(den, ser_scal(ser_mul(x2, z), 2 * p6));
  den = ser_sub(den, ser_scal(ser_mul(x, z2), 3 * p9));
  den = ser_sub(den, ser_scal(z3, 4 * p12));
  OmegaBasis out;
  out.w1 = ser_inv(den);
  out.w2 = ser_mul(x, out.w1);
  out.w3 = ser_mul(z, out.w1);
  out.N = N;
  return out;
}

LogSeries formal_log(const FamilyPoint& b, long p, long N) {
  if (N < 6) throw std::invalid_argument("formal_log: precision must be at least 6");
  if (p < 2 || !is_probable_prime(Int(p)))
    throw std::invalid_argument("formal_log: p must be prime");
  OmegaBasis w = omega_basis(b, N - 1);
  LogSeries out;
  out.l1 = ser_integrate(w.w1);
  out.l2 = ser_integrate(w.w2);
  out.l3 = ser_integrate(w.w3);
  out.p = p;
  out.N = N;
  return out;
}

std::array<long, 3> rho(const std::array<Rat, 3>& v, long p) {
  if (p < 2 || !is_probable_prime(Int(p))) throw std::invalid_argument("rho: p must be prime");
  Int P(p);
  long m = std::numeric_limits<long>::max();
  bool any = false;
  for (const Rat& c : v)
    if (c != 0) {
      m = std::min(m, val_p(c, P));
      any = true;
    }
  if (!any) throw std::invalid_argument("rho: zero vector");
  std::array<long, 3> r{};
  for (int i = 0; i < 3; ++i) {
    if (v[i] == 0) continue;
    if (val_p(v[i], P) > m) continue;
    r[i] = unit_mod_p(v[i], P).get_si();
  }
  // projective normalization: first nonzero coordinate scaled to 1
  long lead = 0;
  for (int i = 0; i < 3; ++i)
    if (r[i]) {
      lead = r[i];
      break;
    }
  Int inv;
  mpz_invert(inv.get_mpz_t(), Int(lead).get_mpz_t(), P.get_mpz_t());
  for (int i = 0; i < 3; ++i) r[i] = (long)mod_pos(r[i] * inv, P).get_si();
  return r;
}

namespace {

// minimum over n >= N of m*n - e over exponents n with v_p(n) = e: a lower
// bound for the valuation of the truncation tail on the stratum v(x) = m,
// given the coefficient bound v_p(c_n) >= -v_p(n)
long tail_floor(long m, long N, long p) {
  long best = std::numeric_limits<long>::max();
  long pe = 1;
  for (long e = 0;; ++e) {
    long ne = ((N + pe - 1) / pe) * pe;  // least multiple of p^e that is >= N
    best = std::min(best, m * ne - e);
    if (pe >= N) break;
    pe *= p;
  }
  return best;
}

struct CompVal {
  long val;    // exact valuation of the component on the stratum
  long n_min;  // index of the dominant term
};

// exact valuation by strict single-term dominance over both the remaining
// displayed terms and the tail bound
CompVal strict_valuation(const Series& s, long p, long m) {
  Int P(p);
  long best = std::numeric_limits<long>::max();
  long n_best = -1;
  int ties = 0;
  for (long n = 0; n < s.N; ++n) {
    if (s.c[n] == 0) continue;
    long v = val_p(s.c[n], P) + m * n;
    if (v < best) {
      best = v;
      n_best = n;
      ties = 1;
    } else if (v == best) {
      ++ties;
    }
  }
  if (n_best < 0)
    throw PrecisionError("component vanishes to the displayed precision; increase precision");
  if (ties > 1)
    throw PrecisionError("valuation tie among displayed terms; increase precision");
  if (tail_floor(m, s.N, p) <= best)
    throw PrecisionError("tail bound does not separate the leading term; increase precision");
  return {best, n_best};
}

void check_disk_preconditions(const FamilyPoint& b, long p, const LogSeries& L) {
  FqField K(p);
  if (!is_smooth_fq(K, b)) throw ScopeError("bad reduction at p: not a single-disk situation");
  if (point_count(K, b) != 1)
    throw ScopeError("more than one residue disk: the analysis covers only the disk at infinity");
  Int P(p);
  for (const Series* s : {&L.l1, &L.l2, &L.l3})
    for (long n = 1; n < s->N; ++n) {
      if (s->c[n] == 0) continue;
      if (val_p(s->c[n], P) < -val_p(Int(n), P))
        throw ScopeError("tail-bound hypothesis fails for a displayed coefficient");
    }
}

}  // namespace

RhoLogImage rho_log_image(const FamilyPoint& b, long p, long N) {
  if (p < 2 || !is_probable_prime(Int(p)))
    throw std::invalid_argument("rho_log_image: p must be prime");
  LogSeries L = formal_log(b, p, N);
  check_disk_preconditions(b, p, L);
  const std::array<const Series*, 3> comp{&L.l1, &L.l2, &L.l3};
  Int P(p);

  // lowest-order data per component
  std::array<long, 3> n0, v0;
  for (int i = 0; i < 3; ++i) {
    long n = comp[i]->val();
    if (n >= N)
      throw PrecisionError("logarithm component vanishes to the displayed precision");
    n0[i] = n;
    v0[i] = val_p(comp[i]->c[n], P);
  }

  // smallest stratum index from which every linear comparison keeps its sign:
  // cross-component leading-term crossings and within-component term crossings
  long M0 = 2;
  auto note_crossing = [&](long dv, long dn) {
    // crossing at m* = dv / dn; need strata beyond ceil(m*) + 1
    if (dn == 0) return;
    if (dn < 0) {
      dv = -dv;
      dn = -dn;
    }
    if (dv <= 0) return;
    long mstar_ceil = (dv + dn - 1) / dn;
    M0 = std::max(M0, mstar_ceil + 1);
  };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) note_crossing(v0[i] - v0[j], n0[j] - n0[i]);
  for (int i = 0; i < 3; ++i)
    for (long n = n0[i] + 1; n < N; ++n) {
      if (comp[i]->c[n] == 0) continue;
      note_crossing(v0[i] - val_p(comp[i]->c[n], P), n - n0[i]);
    }

  RhoLogImage out;
  out.precision = N;
  out.stable_from = M0;
  std::set<std::array<long, 3>> classes;
  for (long m = 1; m <= M0; ++m) {
    StratumInfo st;
    st.m = m;
    long vmin = std::numeric_limits<long>::max();
    std::array<long, 3> argn{};
    for (int i = 0; i < 3; ++i) {
      CompVal cv = strict_valuation(*comp[i], p, m);
      st.vals[i] = cv.val;
      argn[i] = cv.n_min;
      vmin = std::min(vmin, cv.val);
    }
    int at_min = 0;
    for (int i = 0; i < 3; ++i) {
      st.cls[i] = st.vals[i] == vmin ? 1 : 0;
      at_min += (int)st.cls[i];
    }
    if (at_min > 1 && p != 2)
      throw ScopeError("reduction class depends on the point within the stratum for odd p");
    if (m == M0)
      for (int i = 0; i < 3; ++i)
        if (argn[i] != n0[i])
          throw std::logic_error("stable-regime certificate violated after crossing analysis");
    classes.insert(st.cls);
    out.strata.push_back(st);
  }
  out.image.assign(classes.begin(), classes.end());
  return out;
}

bool torsion_check_series(const Series& l3, long p, bool exact_input) {
  if (p < 2 || !is_probable_prime(Int(p)))
    throw std::invalid_argument("torsion_check_series: p must be prime");
  Int P(p);
  long n3 = l3.val();
  if (n3 >= l3.N) {
    if (exact_input) throw std::invalid_argument("torsion_check_series: zero polynomial");
    throw PrecisionError("series vanishes to the displayed precision; increase precision");
  }
  long v3 = val_p(l3.c[n3], P);
  // strict dominance of the lowest term at v(x) = 1 persists for every
  // stratum v(x) = m >= 1, so the value has the finite valuation v3 + m*n3
  // and cannot vanish
  for (long n = n3 + 1; n < l3.N; ++n) {
    if (l3.c[n] == 0) continue;
    long margin = (val_p(l3.c[n], P) + n) - (v3 + n3);
    if (margin <= 0) return false;
  }
  if (!exact_input && tail_floor(1, l3.N, p) <= v3 + n3)
    throw PrecisionError("tail bound does not separate the leading term; increase precision");
  return true;
}

bool torsion_disk_check(const FamilyPoint& b, long p, long N) {
  LogSeries L = formal_log(b, p, N);
  check_disk_preconditions(b, p, L);
  bool dominance = torsion_check_series(L.l3, p, false);
  // cross-check against the Newton polygon of the truncation with the
  // x^{ord} factor removed: dominance holds iff every hull slope exceeds -1
  long n3 = L.l3.val();
  QPoly shifted;
  for (long n = n3; n < L.l3.N; ++n) shifted.push_back(L.l3.c[n]);
  NewtonPolygon np = newton_polygon(shifted, Int(p));
  bool np_view = true;
  for (const NPSegment& seg : np.segments)
    if (seg.slope <= Rat(-1)) np_view = false;
  if (np_view != dominance)
    throw std::logic_error("torsion_disk_check: polygon view disagrees with dominance view");
  return dominance;
}

Rat sieve_lower_bound(const Rat& selmer_eq_bound, long image_size) {
  if (selmer_eq_bound < 0)
    throw std::invalid_argument("sieve_lower_bound: equidistribution bound must be >= 0");
  if (image_size < 0 || image_size > 7)
    throw std::invalid_argument("sieve_lower_bound: image size must lie in 0..7");
  Rat r = Rat(1) - selmer_eq_bound - Rat(image_size) * selmer_eq_bound;
  r.canonicalize();
  return r;
}

}  // namespace hfx::padic
