#include "hyperflex/newton.hpp"

#include <numeric>

namespace hfx {

NewtonPolygon newton_polygon(const QPoly& f, const Int& p) {
  if (!is_probable_prime(p)) throw std::invalid_argument("newton_polygon: p must be prime");
  std::vector<std::array<long, 2>> pts;
  for (size_t i = 0; i < f.size(); ++i)
    if (f[i] != 0) pts.push_back({(long)i, val_p(f[i], p)});
  if (pts.empty()) throw std::invalid_argument("newton_polygon: zero polynomial");

  NewtonPolygon np;
  np.p = p;
  np.ord = pts.front()[0];

  // lower hull, monotone chain (collinear interior points dropped)
  std::vector<std::array<long, 2>>& h = np.vertices;
  auto cross = [](const std::array<long, 2>& a, const std::array<long, 2>& b,
                  const std::array<long, 2>& c) {
    return (__int128)(b[0] - a[0]) * (c[1] - a[1]) - (__int128)(b[1] - a[1]) * (c[0] - a[0]);
  };
  for (const auto& pt : pts) {
    while (h.size() >= 2 && cross(h[h.size() - 2], h.back(), pt) <= 0) h.pop_back();
    h.push_back(pt);
  }

  for (size_t s = 0; s + 1 < h.size(); ++s) {
    NPSegment seg;
    seg.i0 = h[s][0];
    seg.v0 = h[s][1];
    seg.i1 = h[s + 1][0];
    seg.v1 = h[s + 1][1];
    seg.length = seg.i1 - seg.i0;
    seg.slope = Rat(Int(seg.v1 - seg.v0), Int(seg.length));
    seg.slope.canonicalize();
    long dv = seg.v1 - seg.v0, di = seg.length;
    long g = std::gcd(std::abs(dv), di);
    seg.e = di / g;
    seg.h = -dv / g;  // slope = -h/e
    np.segments.push_back(seg);
  }
  return np;
}

PolyOf<FqField> residual_polynomial(const QPoly& f, const Int& p, const NPSegment& seg) {
  FqField Fp((long)p.get_si());
  long dr = seg.length / seg.e;
  PolyOf<FqField> r(dr + 1, Fp.zero());
  for (long j = 0; j <= dr; ++j) {
    long i = seg.i0 + j * seg.e;
    long line_v = seg.v0 - j * seg.h;  // valuation of the segment line at i
    if (i < (long)f.size() && f[i] != 0 && val_p(f[i], p) == line_v)
      r[j] = Fp.from_int(unit_mod_p(f[i], p));
  }
  if (Fp.is_zero(r[0]) || Fp.is_zero(r[dr]))
    throw std::logic_error("residual_polynomial: endpoint coefficient vanished");
  return r;
}

}  // namespace hfx
