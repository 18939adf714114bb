#pragma once

#include "ipx/report.hpp"

namespace ipx {

/// <x,y> - <x,e><e,y>. NOT_UNIT unless ||e|| = 1 within tolerance.
Scalar cheby_functional(const Vector& x, const Vector& y, const Vector& e,
                        const Tolerance& tol = {});

/// |<x,y> - <x,e><e,y>| <= r1 r2 ||x|| ||y|| for ||x-e|| <= r1, ||y-e|| <= r2,
/// r1, r2 in (0, 1).
BoundReport gruss_disc(const Vector& x, const Vector& y, const Vector& e, double r1, double r2,
                       const EvalOptions& opts = {});

/// |<x,y> - <x,e><e,y>| <= |A-a||B-b| / (4 sqrt(Re(A conj a) Re(B conj b))) |<x,e><e,y>|
/// for x between a e and A e, y between b e and B e. When both projections are
/// nonzero the quotient form |<x,y>/(<x,e><e,y>) - 1| <= same constant is
/// attached as ratio_bound.
BoundReport gruss_segment(const Vector& x, const Vector& y, const Vector& e, Scalar a, Scalar A,
                          Scalar b, Scalar B, const EvalOptions& opts = {});

/// NOT_UNIT unless | ||e|| - 1 | <= tol.eta.
void require_unit(const Vector& e, const Tolerance& tol, const char* who);

}  // namespace ipx
