#pragma once

#include <vector>

#include <Eigen/Dense>

#include "monokit/numeric.hpp"

namespace monokit {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

struct Eigenspace {
  Complex eigenvalue;
  /// Orthonormal columns spanning ker(M - eigenvalue).
  CMatrix basis;
  /// Number of eigenvalues (with algebraic multiplicity) merged into this cluster.
  int algebraic_multiplicity = 1;
};

/// Eigenvalues grouped at radius 10*tol, each with an orthonormal basis of
/// its eigenspace. Throws NonConvergence if the Schur iteration fails.
std::vector<Eigenspace> eigen(const CMatrix& m, double tol);

/// Orthonormal basis of the numerical null space: right singular vectors
/// whose singular value is <= threshold.
CMatrix null_space(const CMatrix& m, double threshold);

/// exp(m) via Padé scaling and squaring.
CMatrix matrix_exp(const CMatrix& m);

/// Largest absolute entry.
double max_abs(const CMatrix& m);

}  // namespace monokit
