#include "monokit/skeleton.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "monokit/errors.hpp"

namespace monokit {

namespace {

constexpr double kRadiusFactor = 0.4;
constexpr int kMinCircleSamples = 64;
/// Segments must stay this many nearest-neighbour distances away from other punctures.
constexpr double kClearance = 0.6;
constexpr int kAngleGrid = 720;

std::vector<double> nearest_distances(const std::vector<Complex>& pts) {
  std::vector<double> d(pts.size(), pts.size() < 2 ? 1.0 : std::numeric_limits<double>::infinity());
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = 0; j < pts.size(); ++j)
      if (i != j) d[i] = std::min(d[i], std::abs(pts[i] - pts[j]));
  return d;
}

/// Worst ratio dist(b_j, segment to b_i) / nearest(b_j) over i != j.
double clearance(const std::vector<Complex>& pts, const std::vector<double>& near, Complex base) {
  double worst = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = 0; j < pts.size(); ++j)
      if (i != j) worst = std::min(worst, segment_distance(pts[j], base, pts[i]) / near[j]);
  return worst;
}

PathPolyline petal(Complex base, Complex center, double radius) {
  Complex u = (center - base) / std::abs(center - base);
  Complex start = center - radius * u;
  double theta0 = std::arg(-u);
  PathPolyline p;
  p.vertices.push_back(base);
  for (int k = 0; k <= kMinCircleSamples; ++k) {
    double t = theta0 + 2.0 * std::numbers::pi * k / kMinCircleSamples;
    p.vertices.push_back(k == 0 || k == kMinCircleSamples ? start : center + std::polar(radius, t));
  }
  p.vertices.push_back(base);
  return p;
}

}  // namespace

double min_gap(const std::vector<Complex>& points) {
  if (points.size() < 2) return 1.0;
  auto d = nearest_distances(points);
  return *std::min_element(d.begin(), d.end());
}

LoopSkeleton build_skeleton(const std::vector<Complex>& points, std::optional<Complex> base) {
  LoopSkeleton sk;
  if (points.empty()) {
    sk.base_point = base.value_or(Complex(0.0, 0.0));
    return sk;
  }
  const auto near = nearest_distances(points);
  const double gap = min_gap(points);

  if (base) {
    for (size_t i = 0; i < points.size(); ++i)
      if (std::abs(*base - points[i]) < gap / 2)
        throw Error(ErrorKind::InvalidInput, "base point too close to a puncture");
    sk.base_point = *base;
  } else {
    double rmax = 0.0;
    for (auto p : points) rmax = std::max(rmax, std::abs(p));
    const double r = rmax + 2.0 * gap;
    sk.base_point = Complex(r, 0.0);
    if (points.size() > 1 && clearance(points, near, sk.base_point) < kClearance) {
      double best = -1.0;
      for (int k = 0; k < kAngleGrid; ++k) {
        Complex b = std::polar(r, 2.0 * std::numbers::pi * k / kAngleGrid);
        double c = clearance(points, near, b);
        if (c > best + 1e-12) {
          best = c;
          sk.base_point = b;
        }
      }
    }
  }

  // Angle measured from the direction base -> origin; upper-half points come first.
  const Complex ref = std::abs(sk.base_point) > 0 ? -sk.base_point / std::abs(sk.base_point) : Complex(-1.0, 0.0);
  std::vector<int> idx(points.size());
  std::iota(idx.begin(), idx.end(), 0);
  auto angle = [&](int i) { return std::arg((points[i] - sk.base_point) / ref); };
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return angle(a) < angle(b); });

  for (int i : idx) {
    sk.order.push_back(i);
    sk.points.push_back(points[i]);
    sk.radii.push_back(kRadiusFactor * near[i]);
    sk.loops.push_back(petal(sk.base_point, points[i], kRadiusFactor * near[i]));
  }
  return sk;
}

}  // namespace monokit
