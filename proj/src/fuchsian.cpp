#include "monokit/fuchsian.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <random>

#include <Eigen/QR>
#include <Eigen/SVD>

#include "monokit/errors.hpp"

namespace monokit {

namespace {

CMatrix bracket(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

/// Orthonormal span in the Frobenius inner product with a three-way rank test.
class FloatSpan {
 public:
  explicit FloatSpan(double tol) : tol_(tol) {}

  /// Adds the component of m outside the span; true if the dimension grew.
  bool add(const CMatrix& m) {
    CMatrix r = m;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : basis_) r -= q.conjugate().cwiseProduct(r).sum() * q;
    const double rho = r.norm();
    if (rho > 10.0 * tol_) {
      basis_.push_back(r / rho);
      return true;
    }
    if (rho >= tol_ / 10.0)
      throw Error(ErrorKind::RankThresholdAmbiguous,
                  "residual " + std::to_string(rho) + " within a factor 10 of the rank threshold " + std::to_string(tol_));
    return false;
  }

  const std::vector<CMatrix>& basis() const { return basis_; }

 private:
  double tol_;
  std::vector<CMatrix> basis_;
};

/// Row echelon span over Q(i).
class ExactSpan {
 public:
  bool add(const GaussMatrix& m) {
    std::vector<GaussRational> v;
    for (const auto& row : m) v.insert(v.end(), row.begin(), row.end());
    for (size_t r = 0; r < rows_.size(); ++r) {
      const GaussRational c = v[pivots_[r]];
      if (c == GaussRational()) continue;
      for (size_t k = 0; k < v.size(); ++k)
        if (!(rows_[r][k] == GaussRational())) v[k] = v[k] - c * rows_[r][k];
    }
    auto it = std::find_if(v.begin(), v.end(), [](const GaussRational& z) { return !(z == GaussRational()); });
    if (it == v.end()) return false;
    const size_t p = static_cast<size_t>(it - v.begin());
    const GaussRational lead = v[p];
    for (auto& z : v) z = z / lead;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    basis_.push_back(m);
    return true;
  }

  const std::vector<GaussMatrix>& basis() const { return basis_; }

 private:
  std::vector<std::vector<GaussRational>> rows_;
  std::vector<size_t> pivots_;
  std::vector<GaussMatrix> basis_;
};

GaussMatrix exact_bracket(const GaussMatrix& a, const GaussMatrix& b) {
  const size_t n = a.size();
  GaussMatrix out(n, std::vector<GaussRational>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      GaussRational s;
      for (size_t k = 0; k < n; ++k) s = s + a[i][k] * b[k][j] - b[i][k] * a[k][j];
      out[i][j] = s;
    }
  return out;
}

/// Closure of a span under brackets of its own basis elements.
template <typename Span, typename Bracket>
void close_under_brackets(Span& span, Bracket br) {
  for (size_t j = 1; j < span.basis().size(); ++j)
    for (size_t i = 0; i < j; ++i) {
      auto c = br(span.basis()[i], span.basis()[j]);
      span.add(c);
    }
}

template <typename Span, typename Elem, typename Bracket, typename Make>
std::vector<int> derived_dimensions(const std::vector<Elem>& basis, Bracket br, Make make_span) {
  std::vector<int> dims{static_cast<int>(basis.size())};
  std::vector<Elem> cur = basis;
  while (!cur.empty()) {
    Span next = make_span();
    for (size_t j = 1; j < cur.size(); ++j)
      for (size_t i = 0; i < j; ++i) next.add(br(cur[i], cur[j]));
    const int d = static_cast<int>(next.basis().size());
    if (d == dims.back()) break;
    dims.push_back(d);
    cur = next.basis();
  }
  return dims;
}

CMatrix lower_part(const CMatrix& m) {
  CMatrix l = CMatrix::Zero(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < i; ++j) l(i, j) = m(i, j);
  return l;
}

/// Vector v minimising sum_j ||(B_j - lambda_j) v|| with Rayleigh-quotient
/// eigenvalues, starting from v0.
CVector refine_common_eigenvector(const std::vector<CMatrix>& mats, CVector v, double& residual) {
  const int k = static_cast<int>(v.size());
  for (int it = 0; it < 3; ++it) {
    CMatrix stacked(k * static_cast<int>(mats.size()), k);
    for (size_t j = 0; j < mats.size(); ++j) {
      Complex lambda = v.dot(mats[j] * v);
      stacked.block(static_cast<int>(j) * k, 0, k, k) = mats[j] - lambda * CMatrix::Identity(k, k);
    }
    Eigen::JacobiSVD<CMatrix> svd(stacked, Eigen::ComputeFullV);
    v = svd.matrixV().col(k - 1);
    residual = svd.singularValues()(k - 1);
  }
  return v;
}

/// Backtracking search for a common eigenvector of the (unit-scaled) matrices.
std::optional<CVector> common_eigenvector(const std::vector<CMatrix>& mats, double tol) {
  const int k = static_cast<int>(mats.front().rows());
  constexpr double kLoose = 1e-6;
  std::optional<CVector> found;
  std::function<void(size_t, const CMatrix&)> search = [&](size_t j, const CMatrix& v) {
    if (found) return;
    if (j == mats.size()) {
      double res = 0.0;
      CVector cand = refine_common_eigenvector(mats, v.col(0), res);
      if (res <= 10.0 * tol * std::sqrt(static_cast<double>(mats.size()))) found = cand;
      return;
    }
    const CMatrix bv = mats[j] * v;
    const CMatrix compressed = v.adjoint() * bv;
    for (const auto& es : eigen(compressed, tol)) {
      CMatrix ns = null_space(bv - es.eigenvalue * v, kLoose);
      if (ns.cols() == 0) continue;
      CMatrix next = v * ns;
      Eigen::HouseholderQR<CMatrix> qr(next);
      search(j + 1, CMatrix(qr.householderQ() * CMatrix::Identity(k, next.cols())));
      if (found) return;
    }
  };
  search(0, CMatrix::Identity(k, k));
  return found;
}

/// Unitary U with U^* M U upper triangular for every M, or nullopt.
std::optional<CMatrix> triangularizing_basis(const std::vector<CMatrix>& mats, double tol) {
  const int k = static_cast<int>(mats.front().rows());
  if (k == 1) return CMatrix::Identity(1, 1);
  auto v = common_eigenvector(mats, tol);
  if (!v) return std::nullopt;
  Eigen::HouseholderQR<CMatrix> qr(*v);
  CMatrix q = qr.householderQ() * CMatrix::Identity(k, k);
  std::vector<CMatrix> rest;
  for (const auto& m : mats) rest.push_back((q.adjoint() * m * q).bottomRightCorner(k - 1, k - 1));
  auto sub = triangularizing_basis(rest, tol);
  if (!sub) return std::nullopt;
  CMatrix lift = CMatrix::Identity(k, k);
  lift.bottomRightCorner(k - 1, k - 1) = *sub;
  return CMatrix(q * lift);
}

}  // namespace

CMatrix to_cmatrix(const GaussMatrix& m) {
  const int n = static_cast<int>(m.size());
  CMatrix out(n, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(m[i].size()) != n) throw Error(ErrorKind::InvalidInput, "matrix must be square");
    for (int j = 0; j < n; ++j) out(i, j) = m[i][j].to_complex();
  }
  return out;
}

MonodromyMatrices fuchsian_monodromy(const FuchsianSystem& sys, double tol, int threads) {
  sys.validate();
  MonodromyMatrices out;
  out.skeleton = build_skeleton(sys.poles);
  const size_t loops = out.skeleton.loops.size();
  out.matrices.resize(loops);
  auto work = [&](size_t i) { out.matrices[i] = integrate_linear_ode(sys, out.skeleton.loops[i], tol); };
  if (threads > 1 && loops > 1) {
    const size_t workers = std::min<size_t>(static_cast<size_t>(threads), loops);
    std::vector<std::future<void>> jobs;
    for (size_t w = 0; w < workers; ++w)
      jobs.push_back(std::async(std::launch::async, [&, w] {
        for (size_t i = w; i < loops; i += workers) work(i);
      }));
    for (auto& j : jobs) j.get();
  } else {
    for (size_t i = 0; i < loops; ++i) work(i);
  }
  const int n = sys.dimension();
  CMatrix product = CMatrix::Identity(n, n);
  for (const auto& m : out.matrices) product = m * product;
  out.infinity_matrix = product.inverse();
  out.residual = (product * out.infinity_matrix - CMatrix::Identity(n, n)).norm();
  return out;
}

LieClosure lie_closure(const std::vector<CMatrix>& generators, double tol) {
  if (generators.empty()) throw Error(ErrorKind::InvalidInput, "no generators");
  const auto n = generators.front().rows();
  if (n > 16) throw Error(ErrorKind::InvalidInput, "dimension above 16");
  double scale = 0.0;
  for (const auto& g : generators) {
    if (g.rows() != n || g.cols() != n) throw Error(ErrorKind::InvalidInput, "generators must share one square shape");
    scale = std::max(scale, g.norm());
  }
  LieClosure lc;
  if (scale == 0.0) {
    lc.derived_dims = {0};
    return lc;
  }
  FloatSpan span(tol);
  for (const auto& g : generators) span.add(g / scale);
  close_under_brackets(span, bracket);
  lc.basis = span.basis();
  lc.derived_dims = derived_dimensions<FloatSpan>(lc.basis, bracket, [tol] { return FloatSpan(tol); });
  return lc;
}

LieClosure lie_closure_exact(const std::vector<GaussMatrix>& generators) {
  if (generators.empty()) throw Error(ErrorKind::InvalidInput, "no generators");
  ExactSpan span;
  for (const auto& g : generators) span.add(g);
  close_under_brackets(span, exact_bracket);
  LieClosure lc;
  lc.exact = true;
  for (const auto& b : span.basis()) lc.basis.push_back(to_cmatrix(b));
  lc.derived_dims = derived_dimensions<ExactSpan>(span.basis(), exact_bracket, [] { return ExactSpan(); });
  return lc;
}

Triangularization is_simultaneously_triangularizable(const std::vector<CMatrix>& residues, double tol,
                                                     const std::optional<std::vector<GaussMatrix>>& exact) {
  Triangularization t;
  try {
    t.closure = lie_closure(residues, tol);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::RankThresholdAmbiguous || !exact) throw;
    t.closure = lie_closure_exact(*exact);
  }
  t.triangularizable = t.closure.solvable();
  if (!t.triangularizable) return t;

  double scale = 0.0;
  for (const auto& r : residues) scale = std::max(scale, r.norm());
  std::vector<CMatrix> unit;
  for (const auto& r : residues) unit.push_back(scale > 0 ? CMatrix(r / scale) : r);
  auto u = triangularizing_basis(unit, tol);
  if (!u) throw Error(ErrorKind::WitnessVerificationFailed, "solvable Lie closure but no common eigenvector found");
  for (const auto& r : residues) {
    const double norm = r.norm();
    if (norm == 0.0) continue;
    t.subdiagonal_mass = std::max(t.subdiagonal_mass, lower_part(u->adjoint() * r * *u).norm() / norm);
  }
  if (t.subdiagonal_mass > 100.0 * tol)
    throw Error(ErrorKind::WitnessVerificationFailed,
                "triangularizing basis leaves relative sub-diagonal mass " + std::to_string(t.subdiagonal_mass));
  t.witness = *u;
  return t;
}

ProbeReport generic_stabilizer_probe(const MonodromyMatrices& mon, int trials, std::uint64_t seed, double tol) {
  ProbeReport rep;
  rep.trials = trials;
  std::vector<const CMatrix*> moving;
  for (const auto& m : mon.matrices)
    if ((m - CMatrix::Identity(m.rows(), m.cols())).norm() > 10.0 * tol) moving.push_back(&m);
  if (moving.empty()) {
    rep.skipped = true;
    rep.note = "every monodromy generator is the identity";
    return rep;
  }
  const auto n = moving.front()->rows();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  rep.min_motion = std::numeric_limits<double>::infinity();
  for (int t = 0; t < trials; ++t) {
    CVector v(n);
    for (auto i = 0; i < n; ++i) v(i) = Complex(normal(rng), normal(rng));
    v.normalize();
    double worst = std::numeric_limits<double>::infinity();
    for (const auto* m : moving) worst = std::min(worst, (*m * v - v).norm());
    rep.min_motion = std::min(rep.min_motion, worst);
    if (worst <= 10.0 * tol) {
      ++rep.failures;
      rep.failure_vectors.push_back(v);
    }
  }
  return rep;
}

FuchsianReport classify_fuchsian(const FuchsianSystem& sys, const FuchsianOptions& opts) {
  opts.tol.validate();
  sys.validate();
  FuchsianReport rep;
  rep.system = sys;
  rep.triangularization = is_simultaneously_triangularizable(sys.residues, opts.tol.rank, opts.exact_residues);
  rep.monodromy = fuchsian_monodromy(sys, opts.tol.ode, opts.threads);

  const auto& tri = rep.triangularization;
  std::string dims;
  for (int d : tri.closure.derived_dims) dims += (dims.empty() ? "" : ",") + std::to_string(d);
  std::map<std::string, std::string> fields{
      {"lie_closure_dim", std::to_string(tri.closure.dimension())},
      {"derived_dims", dims},
      {"exact_rank", tri.closure.exact ? "true" : "false"},
      {"triangularizable", tri.triangularizable ? "true" : "false"},
  };
  Verdict v{VerdictClass::GeneralizedQuadratures, 0, VerdictStatus::Inconclusive, "", fields};
  if (tri.triangularizable) {
    v.status = VerdictStatus::Representable;
    v.fields["subdiagonal_mass"] = std::to_string(tri.subdiagonal_mass);
    v.reason = "residues are simultaneously triangularizable (Lie closure derived dims " + dims +
               "), so the monodromy group is triangular, hence solvable";
  } else {
    rep.probe = generic_stabilizer_probe(rep.monodromy, opts.probe_trials, opts.seed, opts.tol.ode);
    v.fields["probe_failures"] = std::to_string(rep.probe->failures);
    if (opts.assume_small) {
      v.status = VerdictStatus::StronglyNonRepresentable;
      v.fields["assumption"] = "residues small (user-asserted)";
      v.reason = "residues are not simultaneously triangularizable (Lie closure derived dims " + dims +
                 "); with the user-asserted smallness, almost every solution is strongly non representable";
    } else {
      v.reason = "residues are not simultaneously triangularizable (Lie closure derived dims " + dims +
                 "); without the smallness assumption no verdict is available";
    }
  }
  rep.verdicts.push_back(std::move(v));
  return rep;
}

}  // namespace monokit
