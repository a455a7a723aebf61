#pragma once

#include <vector>

#include "monokit/poly.hpp"

namespace monokit {

struct Root {
  Complex value;
  int multiplicity = 1;
};

/// All complex roots of a nonconstant polynomial, counted with multiplicity.
/// Simultaneous Aberth-Ehrlich iteration followed by Newton polishing; roots
/// closer than 10*tol are merged into one cluster. Output is sorted
/// lexicographically by (re, im).
///
/// Throws NonConvergence when the iteration cap is hit or a returned root
/// fails |p(r)| <= tol * scale(p, r), and OverflowingCoefficients for
/// non-finite input.
std::vector<Root> roots_all(const CPoly& p, double tol);

/// Rational input: the squarefree decomposition is taken exactly first, so
/// multiplicities are exact and only simple roots are solved numerically.
std::vector<Root> roots_all(const RatPoly& p, double tol);

/// max |coefficient| * max(1, |r|)^deg, the residual scale used by roots_all.
double residual_scale(const CPoly& p, Complex r);

}  // namespace monokit
