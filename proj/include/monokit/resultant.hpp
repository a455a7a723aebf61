#pragma once

#include <vector>

#include "monokit/poly.hpp"

namespace monokit {

/// Determinant of the Sylvester matrix of a and b taken with formal degrees
/// (deg_a, deg_b); leading entries may be zero.
Rational sylvester_determinant(const RatPoly& a, int deg_a, const RatPoly& b, int deg_b);

/// Res_y(f, g) as an exact polynomial in x, by evaluation at
/// degY(f)*degX(g) + degY(g)*degX(f) + 1 integer points and exact Newton
/// interpolation.
RatPoly resultant_in_y(const BiPoly& f, const BiPoly& g);

/// Res_y(f, df/dy).
RatPoly discriminant_in_y(const BiPoly& f);

/// Exact Newton interpolation through (xs[i], ys[i]), xs pairwise distinct.
RatPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace monokit
