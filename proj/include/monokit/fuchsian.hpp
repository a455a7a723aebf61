#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "monokit/ode.hpp"
#include "monokit/skeleton.hpp"
#include "monokit/tolerance.hpp"
#include "monokit/verdict.hpp"

namespace monokit {

/// Exact square matrix over Q(i), row-major.
using GaussMatrix = std::vector<std::vector<GaussRational>>;
CMatrix to_cmatrix(const GaussMatrix& m);

struct MonodromyMatrices {
  LoopSkeleton skeleton;
  /// One per skeleton loop, in loop order.
  std::vector<CMatrix> matrices;
  /// Inverse of the ordered product M_k ... M_1.
  CMatrix infinity_matrix;
  /// ||ordered product * infinity_matrix - I||.
  double residual = 0.0;
};

MonodromyMatrices fuchsian_monodromy(const FuchsianSystem& sys, double tol, int threads = 1);

struct LieClosure {
  /// Orthonormal (Frobenius) basis for floating closures; an echelon basis
  /// for exact ones.
  std::vector<CMatrix> basis;
  /// Dimensions of L, [L, L], ... until zero or stable.
  std::vector<int> derived_dims;
  bool exact = false;

  int dimension() const { return static_cast<int>(basis.size()); }
  bool solvable() const { return !derived_dims.empty() && derived_dims.back() == 0; }
};

/// Lie algebra generated by the matrices. Rank decisions compare residual
/// norms (after scaling to unit norm) with tol; a residual within a factor
/// 10 of tol throws RankThresholdAmbiguous.
LieClosure lie_closure(const std::vector<CMatrix>& generators, double tol);
/// Same closure in exact arithmetic.
LieClosure lie_closure_exact(const std::vector<GaussMatrix>& generators);

struct Triangularization {
  bool triangularizable = false;
  LieClosure closure;
  /// Unitary U with U^* A_i U upper triangular, when triangularizable.
  std::optional<CMatrix> witness;
  /// max_i ||strict lower part of U^* A_i U|| / ||A_i||.
  double subdiagonal_mass = 0.0;
};

/// Decided on the Lie closure; the witness comes from recursive common
/// eigenvectors and is verified to 100*tol. Ambiguous ranks fall back to
/// `exact` when given. Throws WitnessVerificationFailed.
Triangularization is_simultaneously_triangularizable(const std::vector<CMatrix>& residues, double tol,
                                                     const std::optional<std::vector<GaussMatrix>>& exact = std::nullopt);

struct ProbeReport {
  bool skipped = false;
  std::string note;
  int trials = 0;
  int failures = 0;
  /// Smallest ||M v - v|| seen over trials and non-identity generators.
  double min_motion = 0.0;
  std::vector<CVector> failure_vectors;
};

/// Random unit vectors (seeded) must be moved by every non-identity generator.
ProbeReport generic_stabilizer_probe(const MonodromyMatrices& mon, int trials, std::uint64_t seed, double tol);

struct FuchsianReport {
  FuchsianSystem system;
  MonodromyMatrices monodromy;
  Triangularization triangularization;
  std::optional<ProbeReport> probe;
  std::vector<Verdict> verdicts;
};

struct FuchsianOptions {
  ToleranceConfig tol;
  bool assume_small = false;
  std::uint64_t seed = 42;
  int probe_trials = 100;
  int threads = 1;
  std::optional<std::vector<GaussMatrix>> exact_residues;
};

FuchsianReport classify_fuchsian(const FuchsianSystem& sys, const FuchsianOptions& opts = {});

}  // namespace monokit
