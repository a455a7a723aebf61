#pragma once

#include <optional>
#include <vector>

#include "monokit/perm_group.hpp"
#include "monokit/poly.hpp"
#include "monokit/skeleton.hpp"
#include "monokit/tolerance.hpp"
#include "monokit/verdict.hpp"

namespace monokit {

struct BranchData {
  /// Distinct roots of the discriminant.
  std::vector<Complex> branch_points;
  RatPoly discriminant;
  Complex base_point{0.0, 0.0};
  int n_sheets = 0;
};

/// Branch points of y(x) defined by f(x, y) = 0. The leading y-coefficient
/// must be a nonzero constant (NotMonicInY); a vanishing discriminant throws
/// NotSquarefree.
BranchData branch_points(const BiPoly& f, const ToleranceConfig& tol);

/// f scaled to be monic in y. Throws as branch_points.
BiPoly normalize_monic_y(const BiPoly& f);

/// Sheets over `x`: roots of f(x, .) sorted lexicographically.
std::vector<Complex> sheets_at(const BiPoly& f, Complex x, double tol);

/// Continues the sheets at the loop start around the closed loop.
/// Result maps sheet i to the index of the sheet it arrives at.
/// Throws SheetCollision / StepUnderflow.
Permutation track_loop(const BiPoly& f, const PathPolyline& loop, double tol);

struct AlgebraicMonodromyReport {
  BranchData branch;
  LoopSkeleton skeleton;
  /// One per skeleton loop, in loop order.
  std::vector<Permutation> permutations;
  Permutation infinity_permutation;
  PermutationGroup group{1, {}};
  MonodromyPair pair{PermutationGroup(1, {}), 0, PermutationGroup(1, {})};
  bool transitive = true;
  std::vector<Verdict> verdicts;
};

struct MonodromyOptions {
  ToleranceConfig tol;
  /// Loops tracked concurrently when > 1.
  int threads = 1;
  /// Overrides the default base point.
  std::optional<Complex> base_point;
};

AlgebraicMonodromyReport monodromy(const BiPoly& f, const MonodromyOptions& opts = {});

/// Quadratures and Radicals from solvability, KQuadratures(k) and
/// KRadicals(k) for k = 1..kmax from k-solvability, and
/// GeneralizedQuadratures (always representable: the group is finite).
std::vector<Verdict> classify_algebraic(const AlgebraicMonodromyReport& report, int kmax);
AlgebraicMonodromyReport classify_algebraic(const BiPoly& f, int kmax, const MonodromyOptions& opts = {});

}  // namespace monokit
