#pragma once

#include <vector>

#include "monokit/linalg.hpp"

namespace monokit {

/// Ordered vertices of a piecewise-linear path; closed iff front() == back().
struct PathPolyline {
  std::vector<Complex> vertices;

  bool closed() const { return vertices.size() >= 2 && vertices.front() == vertices.back(); }
  double length() const;
  PathPolyline reversed() const;
  /// This path followed by `next` (which must start where this one ends).
  PathPolyline then(const PathPolyline& next) const;
};

/// Y' = (sum_i residues[i] / (x - poles[i])) Y.
struct FuchsianSystem {
  std::vector<Complex> poles;
  std::vector<CMatrix> residues;

  int dimension() const { return residues.empty() ? 0 : static_cast<int>(residues.front().rows()); }
  CMatrix coefficient(Complex x) const;
  /// Minimum pairwise pole distance, 1 for a single pole.
  double min_pole_gap() const;
  /// Throws InvalidInput unless poles are distinct and residues square of one size.
  void validate() const;
};

/// Transfer matrix of Y' = A(x) Y along `path` with Y(start) = I: the columns
/// are the continued fundamental solutions at the path end, so transfer
/// matrices compose as T(p1 then p2) = T(p2) * T(p1).
///
/// Dormand-Prince 5(4) with the local error per unit arclength held below
/// tol (mixed absolute/relative, floored at 1e-13). Throws PathTooClose when
/// the path comes within min_pole_gap/10 of a pole and StepUnderflow when the
/// step collapses.
CMatrix integrate_linear_ode(const FuchsianSystem& system, const PathPolyline& path, double tol);

/// Distance from point p to the segment [a, b].
double segment_distance(Complex p, Complex a, Complex b);

}  // namespace monokit
