#pragma once

#include <optional>
#include <vector>

#include "monokit/ode.hpp"

namespace monokit {

/// Petal loops from a common base point: one loop per puncture, each a
/// segment out, one counterclockwise circle, and the segment back.
struct LoopSkeleton {
  Complex base_point{0.0, 0.0};
  /// Punctures in loop order.
  std::vector<Complex> points;
  /// order[i] = index of points[i] in the input list.
  std::vector<int> order;
  std::vector<double> radii;
  std::vector<PathPolyline> loops;
};

/// Loops are listed so that traversing them in order is homotopic to one
/// clockwise loop around infinity. Loop radius is 0.4 times the distance to
/// the nearest other puncture (1 for a single puncture).
///
/// Without an explicit base the base lies at distance max|b| + 2*gap from the
/// origin, on the positive real axis unless some segment would pass close to
/// another puncture, in which case it is rotated to the best clearance angle.
LoopSkeleton build_skeleton(const std::vector<Complex>& points, std::optional<Complex> base = std::nullopt);

/// Minimum pairwise distance, 1 for fewer than two points.
double min_gap(const std::vector<Complex>& points);

}  // namespace monokit
