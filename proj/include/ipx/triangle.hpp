#pragma once

#include "ipx/report.hpp"

namespace ipx {

/// ||x|| + ||y|| - ||x + y||, nonnegative up to rounding.
double triangle_deficit(const Vector& x, const Vector& y);

/// For ||x - a|| <= r < ||a||:
///   ||x|| + ||a|| - ||x + a|| <= sqrt(2) r sqrt(Re<x,a> / (d (d + ||a||))),
/// d = sqrt(||a||^2 - r^2). r < ||a|| is a strict hypothesis.
BoundReport reverse_triangle_disc(const Vector& x, const DiscConstraint& c,
                                  const EvalOptions& opts = {});

/// For Re<My - x, x - my> >= 0 with M > m > 0:
///   ||x|| + ||y|| - ||x + y|| <= (sqrt(M) - sqrt(m)) / (mM)^(1/4) sqrt(Re<x,y>).
BoundReport reverse_triangle_segment(const Vector& x, const Vector& y, double m, double M,
                                     const EvalOptions& opts = {});

}  // namespace ipx
