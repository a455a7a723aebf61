#include "monokit/linalg.hpp"

#include <algorithm>
#include <numeric>

#include <unsupported/Eigen/MatrixFunctions>

#include "monokit/errors.hpp"

namespace monokit {

CMatrix null_space(const CMatrix& m, double threshold) {
  const Eigen::Index n = m.cols();
  if (m.rows() == 0) return CMatrix::Identity(n, n);
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  std::vector<Eigen::Index> cols;
  for (Eigen::Index k = 0; k < n; ++k) {
    double sv = k < s.size() ? s(k) : 0.0;
    if (sv <= threshold) cols.push_back(k);
  }
  CMatrix out(n, static_cast<Eigen::Index>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) out.col(static_cast<Eigen::Index>(j)) = svd.matrixV().col(cols[j]);
  return out;
}

std::vector<Eigenspace> eigen(const CMatrix& m, double tol) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::InvalidInput, "eigen needs a square matrix");
  const Eigen::Index n = m.rows();
  std::vector<Eigenspace> out;
  if (n == 0) return out;
  Eigen::ComplexEigenSolver<CMatrix> solver(m, false);
  if (solver.info() != Eigen::Success) throw Error(ErrorKind::NonConvergence, "eigenvalue iteration failed");
  std::vector<Complex> values(solver.eigenvalues().data(), solver.eigenvalues().data() + n);

  // Single-linkage clustering at 10*tol.
  std::vector<size_t> parent(values.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (size_t i = 0; i < values.size(); ++i)
    for (size_t j = i + 1; j < values.size(); ++j)
      if (std::abs(values[i] - values[j]) <= 10.0 * tol) parent[find(i)] = find(j);

  std::vector<std::pair<Complex, int>> clusters;
  std::vector<size_t> owner(values.size(), values.size());
  for (size_t i = 0; i < values.size(); ++i) {
    size_t r = find(i);
    if (owner[r] == values.size()) {
      owner[r] = clusters.size();
      clusters.push_back({0.0, 0});
    }
    clusters[owner[r]].first += values[i];
    clusters[owner[r]].second += 1;
  }

  const double scale = std::max(1.0, m.norm());
  for (auto& [sum, count] : clusters) {
    Complex lambda = sum / static_cast<double>(count);
    CMatrix shifted = m - lambda * CMatrix::Identity(n, n);
    CMatrix basis = null_space(shifted, std::max(10.0 * tol, 1e-12) * scale);
    if (basis.cols() == 0) {
      // Defective clusters can leave the smallest singular value just above
      // the threshold; keep the best direction.
      Eigen::JacobiSVD<CMatrix> svd(shifted, Eigen::ComputeFullV);
      basis = svd.matrixV().col(n - 1);
    }
    out.push_back({lambda, basis, count});
  }
  std::sort(out.begin(), out.end(), [](const Eigenspace& a, const Eigenspace& b) {
    if (a.eigenvalue.real() != b.eigenvalue.real()) return a.eigenvalue.real() < b.eigenvalue.real();
    return a.eigenvalue.imag() < b.eigenvalue.imag();
  });
  return out;
}

CMatrix matrix_exp(const CMatrix& m) { return m.exp(); }

double max_abs(const CMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace monokit
