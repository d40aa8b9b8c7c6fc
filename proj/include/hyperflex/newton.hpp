#pragma once
// p-adic Newton polygons of rational polynomials: lower convex hull of
// (i, v_p(c_i)), segment data (slope -h/e, horizontal length), and residual
// polynomials over F_p attached to hull segments.
#include "hyperflex/fq.hpp"

namespace hfx {

struct NPSegment {
  long i0, v0;  // left endpoint (exponent, valuation)
  long i1, v1;  // right endpoint
  Rat slope;    // (v1 - v0) / (i1 - i0), strictly increasing along the hull
  long e, h;    // slope = -h/e in lowest terms, e > 0
  long length;  // i1 - i0
};

struct NewtonPolygon {
  Int p;
  long ord;  // index of the lowest nonzero coefficient (multiplicity of root 0)
  std::vector<std::array<long, 2>> vertices;  // hull vertices, left to right
  std::vector<NPSegment> segments;
};

NewtonPolygon newton_polygon(const QPoly& f, const Int& p);

// Residual polynomial of one segment: coefficient j (0 <= j <= length/e) is
// the unit part mod p of c_{i0 + j e} when the lattice point lies on the
// segment, and 0 otherwise. Returned over F_p.
PolyOf<FqField> residual_polynomial(const QPoly& f, const Int& p, const NPSegment& seg);

}  // namespace hfx
