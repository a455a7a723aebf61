#include "monokit/algebraic.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>

#include "monokit/errors.hpp"
#include "monokit/resultant.hpp"
#include "monokit/roots.hpp"

namespace monokit {

namespace {

constexpr double kMaxMove = 0.3;
constexpr double kMaxCorrection = 0.1;
constexpr double kMinStep = 1e-14;
constexpr int kNewtonIterations = 30;

/// Distance from each sheet to its nearest neighbour.
std::vector<double> nearest_gaps(const std::vector<Complex>& ys) {
  std::vector<double> g(ys.size(), std::numeric_limits<double>::infinity());
  for (size_t i = 0; i < ys.size(); ++i)
    for (size_t j = i + 1; j < ys.size(); ++j) {
      double d = std::abs(ys[i] - ys[j]);
      g[i] = std::min(g[i], d);
      g[j] = std::min(g[j], d);
    }
  return g;
}

double pairwise_gap(const std::vector<Complex>& ys) {
  double g = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < ys.size(); ++i)
    for (size_t j = i + 1; j < ys.size(); ++j) g = std::min(g, std::abs(ys[i] - ys[j]));
  return g;
}

bool newton(const CPoly& p, const CPoly& dp, Complex& y, double tol) {
  for (int it = 0; it < kNewtonIterations; ++it) {
    Complex d = dp.eval(y);
    if (d == Complex(0.0)) return false;
    Complex step = p.eval(y) / d;
    y -= step;
    if (!std::isfinite(y.real()) || !std::isfinite(y.imag())) return false;
    if (std::abs(step) <= tol * (1.0 + std::abs(y))) return true;
  }
  return false;
}

class SheetTracker {
 public:
  SheetTracker(const BiPoly& f, double tol) : eval_(f), tol_(tol) {}

  /// Moves ys from x = a to x = b along the straight segment.
  void segment(Complex a, Complex b, std::vector<Complex>& ys) const {
    if (a == b) return;
    double s = 0.0;
    double h = 0.125;
    while (s < 1.0) {
      h = std::min(h, 1.0 - s);
      if (h < kMinStep)
        throw Error(ErrorKind::StepUnderflow, "sheet tracking step collapsed near x = " +
                                                  format_complex(a + s * (b - a)));
      Complex x0 = a + s * (b - a);
      Complex x1 = (s + h >= 1.0) ? b : a + (s + h) * (b - a);
      std::vector<Complex> next;
      if (step(x0, x1, ys, next)) {
        ys = std::move(next);
        s += h;
        h *= 2.0;
      } else {
        h *= 0.5;
      }
    }
  }

 private:
  bool step(Complex x0, Complex x1, const std::vector<Complex>& ys, std::vector<Complex>& out) const {
    const size_t n = ys.size();
    double scale = 1.0;
    for (auto y : ys) scale = std::max(scale, std::abs(y));
    std::vector<double> gaps = n > 1 ? nearest_gaps(ys) : std::vector<double>{scale};
    for (size_t i = 0; i < n; ++i)
      if (gaps[i] < 100.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(ys[i])))
        throw Error(ErrorKind::SheetCollision, "sheets collide near x = " + format_complex(x0));

    const CPoly p0 = eval_.at_x(x0);
    const CPoly dp0 = p0.derivative();
    const CPoly fx0 = eval_.dx_at_x(x0);
    const CPoly p1 = eval_.at_x(x1);
    const CPoly dp1 = p1.derivative();
    const Complex dx = x1 - x0;
    out.resize(n);
    for (size_t i = 0; i < n; ++i) {
      Complex fy = dp0.eval(ys[i]);
      if (fy == Complex(0.0)) return false;
      Complex pred = ys[i] - fx0.eval(ys[i]) / fy * dx;
      const double gap = gaps[i];
      if (std::abs(pred - ys[i]) >= kMaxMove * gap) return false;
      Complex y = pred;
      if (!newton(p1, dp1, y, tol_)) return false;
      if (std::abs(y - pred) >= kMaxCorrection * gap || std::abs(y - ys[i]) >= kMaxMove * gap) return false;
      out[i] = y;
    }
    return true;
  }

  BiPolyEvaluator eval_;
  double tol_;
};

}  // namespace

BiPoly normalize_monic_y(const BiPoly& f) {
  const int dy = f.degree_y();
  if (dy < 1) throw Error(ErrorKind::InvalidInput, "polynomial must involve y");
  RatPoly lead = f.coeff_y(dy);
  if (lead.degree() != 0)
    throw Error(ErrorKind::NotMonicInY, "leading coefficient in y must be a nonzero constant, got " + to_string(lead, 'x'));
  return f.scaled(Rational(1) / lead.leading());
}

BranchData branch_points(const BiPoly& input, const ToleranceConfig& tol) {
  tol.validate();
  const BiPoly f = normalize_monic_y(input);
  BranchData b;
  b.n_sheets = f.degree_y();
  b.discriminant = discriminant_in_y(f);
  if (b.discriminant.is_zero())
    throw Error(ErrorKind::NotSquarefree, "discriminant vanishes identically: repeated factor in y");
  if (b.discriminant.degree() >= 1)
    for (const auto& r : roots_all(b.discriminant, tol.root)) b.branch_points.push_back(r.value);
  b.base_point = build_skeleton(b.branch_points).base_point;
  return b;
}

std::vector<Complex> sheets_at(const BiPoly& f, Complex x, double tol) {
  BiPolyEvaluator ev(f);
  CPoly p = ev.at_x(x);
  std::vector<Complex> ys;
  for (const auto& r : roots_all(p, tol))
    for (int k = 0; k < r.multiplicity; ++k) ys.push_back(r.value);
  std::sort(ys.begin(), ys.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return ys;
}

Permutation track_loop(const BiPoly& input, const PathPolyline& loop, double tol) {
  if (!loop.closed()) throw Error(ErrorKind::InvalidInput, "loop must be closed");
  const BiPoly f = normalize_monic_y(input);
  const std::vector<Complex> start = sheets_at(f, loop.vertices.front(), tol);
  const size_t n = start.size();
  if (n > 1 && pairwise_gap(start) <= 10.0 * tol)
    throw Error(ErrorKind::SheetCollision, "sheets coincide at the base point");

  SheetTracker tracker(f, tol);
  std::vector<Complex> ys = start;
  for (size_t k = 1; k < loop.vertices.size(); ++k) tracker.segment(loop.vertices[k - 1], loop.vertices[k], ys);

  const double gap = n > 1 ? pairwise_gap(start) : 1.0;
  std::vector<int> images(n, -1);
  std::vector<bool> hit(n, false);
  for (size_t i = 0; i < n; ++i) {
    size_t best = 0;
    for (size_t j = 1; j < n; ++j)
      if (std::abs(ys[i] - start[j]) < std::abs(ys[i] - start[best])) best = j;
    if (hit[best] || std::abs(ys[i] - start[best]) > 0.25 * gap)
      throw Error(ErrorKind::Internal, "tracked sheets do not return to the base fibre");
    hit[best] = true;
    images[i] = static_cast<int>(best);
  }
  return Permutation(std::move(images));
}

AlgebraicMonodromyReport monodromy(const BiPoly& input, const MonodromyOptions& opts) {
  AlgebraicMonodromyReport rep;
  const BiPoly f = normalize_monic_y(input);
  rep.branch = branch_points(f, opts.tol);
  rep.skeleton = build_skeleton(rep.branch.branch_points, opts.base_point);
  rep.branch.base_point = rep.skeleton.base_point;
  const int n = rep.branch.n_sheets;

  const size_t loops = rep.skeleton.loops.size();
  rep.permutations.resize(loops);
  auto work = [&](size_t i) { rep.permutations[i] = track_loop(f, rep.skeleton.loops[i], opts.tol.root); };
  if (opts.threads > 1 && loops > 1) {
    const size_t workers = std::min<size_t>(static_cast<size_t>(opts.threads), loops);
    std::vector<std::future<void>> jobs;
    for (size_t w = 0; w < workers; ++w)
      jobs.push_back(std::async(std::launch::async, [&, w] {
        for (size_t i = w; i < loops; i += workers) work(i);
      }));
    for (auto& j : jobs) j.get();
  } else {
    for (size_t i = 0; i < loops; ++i) work(i);
  }

  Permutation product = Permutation::identity(n);
  for (const auto& p : rep.permutations) product = product * p;
  rep.infinity_permutation = product.inverse();
  rep.group = PermutationGroup(n, rep.permutations);
  rep.transitive = is_transitive(rep.group);
  if (rep.transitive)
    rep.pair = monodromy_pair(rep.group, 0);
  else
    rep.pair = {rep.group, 0, rep.group.pointwise_stabilizer({0})};
  return rep;
}

std::vector<Verdict> classify_algebraic(const AlgebraicMonodromyReport& rep, int kmax) {
  if (kmax < 1 || kmax > 32) throw Error(ErrorKind::InvalidInput, "kmax must lie in [1, 32]");
  const auto& g = rep.group;
  const std::string order = g.order().str();
  const FactorSignature sig = composition_factor_signature(g);
  const auto series = derived_series(g);
  const bool solvable = series.back().order() == 1;

  std::map<std::string, std::string> fields{
      {"group_order", order},
      {"factor_signature", sig.to_string()},
      {"derived_series_length", std::to_string(series.size() - 1)},
      {"solvable", solvable ? "true" : "false"},
  };
  const std::string group_text = "monodromy group of order " + order;
  auto status = [](bool ok) { return ok ? VerdictStatus::Representable : VerdictStatus::StronglyNonRepresentable; };

  std::vector<Verdict> out;
  const std::string solv_reason =
      group_text + (solvable ? " is solvable" : " is not solvable") + ", composition factors " + sig.to_string();
  out.push_back({VerdictClass::Radicals, 0, status(solvable), solv_reason, fields});
  out.push_back({VerdictClass::Quadratures, 0, status(solvable), solv_reason, fields});
  for (int k = 1; k <= kmax; ++k) {
    const bool ks = is_k_solvable(g, k);
    auto kf = fields;
    kf["k"] = std::to_string(k);
    kf["k_solvable"] = ks ? "true" : "false";
    const std::string reason = group_text + (ks ? " is " : " is not ") + std::to_string(k) +
                               "-solvable, composition factors " + sig.to_string();
    out.push_back({VerdictClass::KRadicals, k, status(ks), reason, kf});
    out.push_back({VerdictClass::KQuadratures, k, status(ks), reason, kf});
  }
  out.push_back({VerdictClass::GeneralizedQuadratures, 0, VerdictStatus::Representable,
                 group_text + " is finite, hence almost solvable", fields});
  return out;
}

AlgebraicMonodromyReport classify_algebraic(const BiPoly& f, int kmax, const MonodromyOptions& opts) {
  AlgebraicMonodromyReport rep = monodromy(f, opts);
  rep.verdicts = classify_algebraic(rep, kmax);
  return rep;
}

}  // namespace monokit
