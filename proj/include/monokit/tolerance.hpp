#pragma once

namespace monokit {

/// Every floating tolerance used by the toolkit, in one place.
struct ToleranceConfig {
  double root = 1e-10;
  double ode = 1e-10;
  double cluster = 1e-9;
  double rank = 1e-9;

  static constexpr double kFloor = 1e-13;

  /// All tolerances divided by `factor` (clamped to the floor).
  ToleranceConfig tightened(double factor) const;
  /// Throws InvalidInput when a tolerance is nonpositive or below the floor.
  void validate() const;
};

}  // namespace monokit
