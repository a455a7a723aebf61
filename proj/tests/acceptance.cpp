#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "monokit/algebraic.hpp"
#include "monokit/linalg.hpp"
#include "monokit/parse.hpp"
#include "monokit/ritt.hpp"

using namespace monokit;
using namespace fixtures;
using namespace oracle;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

bool has(const std::vector<Verdict>& vs, VerdictClass cls, int k, VerdictStatus st) {
  const Verdict* v = find_verdict(vs, cls, k);
  return v && v->status == st;
}

std::string verdict_key(const std::vector<Verdict>& vs) {
  std::string s;
  for (const auto& v : vs) s += v.class_name() + "=" + to_string(v.status) + ";";
  return s;
}

// ---------------------------------------------------------------------------

RatPoly random_poly(std::mt19937_64& rng, int degree) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::vector<Rational> c(static_cast<size_t>(degree) + 1);
  for (auto& v : c) v = coef(rng);
  while (c.back() == 0) c.back() = coef(rng);
  return RatPoly(c);
}

/// Half random polynomials, half compositions of two random factors.
std::vector<RatPoly> ritt_corpus(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> deg(2, 8), small(2, 3);
  std::vector<RatPoly> out;
  for (int i = 0; i < count; ++i) {
    if (i % 2 == 0) {
      out.push_back(random_poly(rng, deg(rng)));
    } else {
      Decomposition d;
      d.components = {random_poly(rng, small(rng)), random_poly(rng, small(rng))};
      d.tags = {ComponentTag::OtherPrimitive, ComponentTag::OtherPrimitive};
      out.push_back(d.compose());
    }
  }
  return out;
}

struct PermutationRun {
  std::vector<std::string> verdicts;
  std::vector<PermutationGroup> groups;
};

/// The permutation computations of criteria 1-3 under one tolerance set.
PermutationRun permutation_verdicts(const ToleranceConfig& tol, bool with_corpus) {
  PermutationRun run;
  MonodromyOptions opts;
  opts.tol = tol;
  for (int n = 5; n <= 8; ++n) {
    auto r = classify_algebraic(parse_bivariate("y^" + std::to_string(n) + "+y-x"), 8, opts);
    run.verdicts.push_back(verdict_key(r.verdicts));
    run.groups.push_back(r.group);
  }
  std::vector<RatPoly> polys = {parse_univariate("z^8"), chebyshev(6), parse_univariate("z^5-z+1"),
                                parse_univariate("3*z^4-2*z^3+z-7")};
  if (with_corpus)
    for (auto& p : ritt_corpus(42, 50)) polys.push_back(p);
  for (const auto& p : polys) {
    auto rad = invertible_by_radicals(p, opts);
    auto k5 = invertible_by_k_radicals(p, 5, opts);
    run.verdicts.push_back(to_string(rad.verdict.status) + "/" + to_string(k5.verdict.status));
    run.groups.push_back(inverse_monodromy(p, opts).group);
  }
  return run;
}

// ---------------------------------------------------------------------------

void criterion1() {
  auto t0 = Clock::now();
  auto r = classify_algebraic(parse_bivariate("y^5+y-x"), 8);
  double dt = seconds_since(t0);
  bool ok = r.branch.branch_points.size() == 4 && r.group.order() == 120 && r.transitive &&
            !is_solvable(r.group) &&
            has(r.verdicts, VerdictClass::Quadratures, 0, VerdictStatus::StronglyNonRepresentable) &&
            has(r.verdicts, VerdictClass::KRadicals, 5, VerdictStatus::Representable) && dt < 5.0;
  char buf[256];
  std::snprintf(buf, sizeof buf, "y^5+y-x: %zu branch points, order %s, transitive %d, solvable %d, %.3f s",
                r.branch.branch_points.size(), r.group.order().str().c_str(), int(r.transitive),
                int(is_solvable(r.group)), dt);
  report(1, ok, buf);
}

void criterion2() {
  auto t0 = Clock::now();
  bool ok = true;
  std::string detail;
  Integer fact = 24;
  for (int n = 5; n <= 8; ++n) {
    fact *= n;
    auto r = monodromy(parse_bivariate("y^" + std::to_string(n) + "+y-x"));
    bool good = r.group.order() == fact && !is_k_solvable(r.group, n - 1) && is_k_solvable(r.group, n);
    ok = ok && good;
    detail += "n=" + std::to_string(n) + " order " + r.group.order().str() + (good ? " ok; " : " BAD; ");
  }
  double dt = seconds_since(t0);
  ok = ok && dt < 30.0;
  report(2, ok, detail + std::to_string(dt) + " s");
}

void criterion3() {
  bool ok = true;
  std::string detail;
  auto z8 = invertible_by_radicals(parse_univariate("z^8"));
  bool z8ok = z8.verdict.status == VerdictStatus::Representable && z8.certificate &&
              std::all_of(z8.certificate->tags.begin(), z8.certificate->tags.end(),
                          [](ComponentTag t) { return t == ComponentTag::Power; });
  detail += std::string("z^8 ") + (z8ok ? "ok" : "BAD");

  auto t6 = invertible_by_radicals(parse_univariate("32*z^6 - 48*z^4 + 18*z^2 - 1"));
  bool t6ok = t6.verdict.status == VerdictStatus::Representable && t6.certificate &&
              std::count(t6.certificate->tags.begin(), t6.certificate->tags.end(), ComponentTag::Chebyshev) > 0;
  detail += std::string("; T6 ") + (t6ok ? "ok" : "BAD");

  auto q = invertible_by_radicals(parse_univariate("z^5-z+1"));
  auto q5 = invertible_by_k_radicals(parse_univariate("z^5-z+1"), 5);
  bool qok = q.verdict.status == VerdictStatus::StronglyNonRepresentable && q.group_order == 120 &&
             !q.group_solvable && q5.verdict.status == VerdictStatus::Representable;
  detail += std::string("; z^5-z+1 ") + (qok ? "ok" : "BAD");

  std::mt19937_64 rng(42);
  RatPoly quartic = random_poly(rng, 4);
  auto r4 = invertible_by_radicals(quartic);
  bool r4ok = r4.verdict.status == VerdictStatus::Representable;
  detail += "; quartic " + to_string(quartic) + (r4ok ? " ok" : " BAD");

  int mismatches = 0, errors = 0;
  for (const auto& p : ritt_corpus(42, 50)) {
    try {
      invertible_by_radicals(p);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::CrossCheckMismatch)
        ++mismatches;
      else
        ++errors;
      std::printf("  corpus %s: %s\n", to_string(p).c_str(), e.what());
    }
  }
  detail += "; corpus mismatches " + std::to_string(mismatches) + ", errors " + std::to_string(errors);
  ok = z8ok && t6ok && qok && r4ok && mismatches == 0 && errors == 0;
  report(3, ok, detail);
}

CMatrix matrix_for_pole(const MonodromyMatrices& mon, int pole) {
  for (size_t i = 0; i < mon.skeleton.order.size(); ++i)
    if (mon.skeleton.order[i] == pole) return mon.matrices[i];
  throw std::runtime_error("pole missing from skeleton");
}

void criterion4() {
  auto t0 = Clock::now();
  const double tol = 1e-10;
  const Complex two_pi_i(0, 2 * std::numbers::pi);
  std::string detail;

  auto mon = fuchsian_monodromy(sl2_system(1e-2), tol);
  double det_err = 0;
  for (const auto& m : mon.matrices) det_err = std::max(det_err, std::abs(m.determinant() - 1.0));
  bool a = det_err < 1e-8;

  double err[3];
  const double eps[3] = {1e-2, 5e-3, 2.5e-3};
  for (int k = 0; k < 3; ++k) {
    auto sys = sl2_system(eps[k]);
    auto mk = fuchsian_monodromy(sys, tol);
    err[k] = 0;
    for (int i = 0; i < 2; ++i)
      err[k] = std::max(err[k], (matrix_for_pole(mk, i) - matrix_exp(two_pi_i * sys.residues[i])).norm());
  }
  double r1 = err[0] / err[1], r2 = err[1] / err[2];
  bool b = r1 >= 2.8 && r1 <= 5.7 && r2 >= 2.8 && r2 <= 5.7;

  auto tri = is_simultaneously_triangularizable(sl2_system(1e-2).residues, 1e-9);
  FuchsianOptions small;
  small.assume_small = true;
  auto rs = classify_fuchsian(sl2_system(1e-2), small);
  bool c = !tri.triangularizable && tri.closure.dimension() == 3 && !tri.closure.solvable() &&
           has(rs.verdicts, VerdictClass::GeneralizedQuadratures, 0, VerdictStatus::StronglyNonRepresentable);

  auto rt = classify_fuchsian(triangular_system(1e-2));
  double lower = 0;
  for (const auto& m : rt.monodromy.matrices) lower = std::max(lower, std::abs(m(1, 0)));
  bool d = has(rt.verdicts, VerdictClass::GeneralizedQuadratures, 0, VerdictStatus::Representable) && lower < 1e-7;

  double dt = seconds_since(t0);
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "det err %.2e; errors %.3e %.3e %.3e ratios %.3f %.3f; lie dim %d derived stall %d; "
                "triangular lower %.2e; %.2f s",
                det_err, err[0], err[1], err[2], r1, r2, tri.closure.dimension(), int(!tri.closure.solvable()),
                lower, dt);
  report(4, a && b && c && d && dt < 10.0, buf);
}

PathPolyline big_circle(Complex base, int samples) {
  PathPolyline p;
  for (int k = 0; k <= samples; ++k)
    p.vertices.push_back(k == samples ? base : base * std::polar(1.0, 2 * std::numbers::pi * k / samples));
  return p;
}

void criterion5() {
  auto t0 = Clock::now();
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> coef(-4, 4), deg(3, 4), xdeg(0, 2);
  int failures_perm = 0, errors = 0;
  for (int t = 0; t < 100; ++t) {
    const int d = deg(rng);
    std::map<BiPoly::Key, Rational> terms{{{0, d}, Rational(1)}, {{1, 0}, Rational(-1)}};
    for (int j = 0; j < d; ++j)
      for (int i = 0; i <= xdeg(rng); ++i)
        if (int c = coef(rng)) terms[{i, j}] += c;
    BiPoly f(terms);
    try {
      auto r = monodromy(f);
      Permutation prod = Permutation::identity(d);
      for (const auto& p : r.permutations) prod = prod * p;
      Permutation around = track_loop(f, big_circle(r.skeleton.base_point, 2048), 1e-10);
      if (!(prod * r.infinity_permutation).is_identity() || !(prod * around.inverse()).is_identity()) {
        ++failures_perm;
        std::printf("  loop identity failed for %s\n", to_string(f).c_str());
      }
    } catch (const Error& e) {
      ++errors;
      std::printf("  %s: %s\n", to_string(f).c_str(), e.what());
    }
  }

  const double curves_time = seconds_since(t0);
  std::normal_distribution<double> gauss;
  double worst = 0;
  for (int t = 0; t < 5; ++t) {
    FuchsianSystem sys;
    sys.poles = {Complex(0, 0), Complex(1, 0), Complex(0.3, 0.8)};
    CMatrix total = CMatrix::Zero(2, 2);
    for (int i = 0; i < 2; ++i) {
      CMatrix a(2, 2);
      for (int k = 0; k < 4; ++k) a(k / 2, k % 2) = 0.2 * Complex(gauss(rng), gauss(rng));
      sys.residues.push_back(a);
      total += a;
    }
    sys.residues.push_back(-total);
    auto mon = fuchsian_monodromy(sys, 1e-10);
    CMatrix prod = CMatrix::Identity(2, 2);
    for (const auto& m : mon.matrices) prod = m * prod;
    worst = std::max(worst, (prod - CMatrix::Identity(2, 2)).norm());
  }
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "100 curves: %d loop failures, %d errors (%.2f s); fuchsian sum-zero product residual %.2e (%.2f s)",
                failures_perm, errors, curves_time, worst, seconds_since(t0) - curves_time);
  report(5, failures_perm == 0 && errors == 0 && worst < 1e-7, buf);
}

bool same_point(const ExtPoint& a, const ExtPoint& b) { return chordal_distance(a, b) < 1e-7; }

void criterion6() {
  struct Case {
    std::string name;
    PolygonSpec poly;
    int expected_case;
  };
  std::vector<Case> cases = {{"straight quadrilateral", straight_quadrilateral(), 1},
                             {"concentric quadrilateral", concentric_quadrilateral(), 2},
                             {"tetrahedral triangle", tetrahedral_triangle(), 3},
                             {"vanishing-angle triangle", vanishing_angle_triangle(), 0}};
  std::mt19937_64 rng(42);
  bool ok = true;
  std::string detail;
  for (const auto& c : cases) {
    auto base = classify_polygon(c.poly);
    bool good = base.case_number == c.expected_case;
    switch (c.expected_case) {
      case 2:
        good = good && base.pair &&
               ((same_point(base.pair->p, {0}) && same_point(base.pair->q, ExtPoint::infinity())) ||
                (same_point(base.pair->q, {0}) && same_point(base.pair->p, ExtPoint::infinity())));
        break;
      case 3:
        good = good && base.closure.rotation_order == 12 &&
               has(base.verdicts, VerdictClass::Radicals, 0, VerdictStatus::Representable);
        break;
      case 0:
        good = good &&
               has(base.verdicts, VerdictClass::GeneralizedQuadratures, 0, VerdictStatus::StronglyNonRepresentable);
        break;
    }
    MoebiusLike t = random_moebius(rng, c.poly);
    auto moved = classify_polygon(c.poly.transformed(t));
    bool invariant = moved.case_number == base.case_number && verdict_key(moved.verdicts) == verdict_key(base.verdicts);
    if (c.expected_case == 2 && moved.pair) {
      ExtPoint p = t.apply(ExtPoint{0}), q = t.apply(ExtPoint::infinity());
      invariant = invariant && ((same_point(moved.pair->p, p) && same_point(moved.pair->q, q)) ||
                                (same_point(moved.pair->p, q) && same_point(moved.pair->q, p)));
    }
    ok = ok && good && invariant;
    detail += c.name + " case " + std::to_string(base.case_number) + (good ? "" : " BAD") +
              (invariant ? " invariant; " : " NOT invariant; ");
  }
  report(6, ok, detail);
}

void criteria7and8() {
  auto t0 = Clock::now();
  PermutationRun base = permutation_verdicts(ToleranceConfig{}, true);
  {
    auto r = monodromy(parse_bivariate("y^5+y-x"));
    base.groups.push_back(r.group);
  }
  int checked = 0, disagreements = 0;
  std::set<std::string> seen;
  for (const auto& g : base.groups) {
    if (g.order() > 10000) continue;
    std::string key = std::to_string(g.degree());
    for (const auto& s : g.generators()) key += "|" + s.to_cycle_string();
    if (!seen.insert(key).second) continue;
    ++checked;
    std::string why = oracle_disagreement(g);
    if (!why.empty()) {
      ++disagreements;
      std::printf("  oracle disagreement (%s) for group of order %s\n", why.c_str(), g.order().str().c_str());
    }
  }
  report(7, checked > 0 && disagreements == 0,
         std::to_string(checked) + " distinct groups of order <= 10^4 checked, " + std::to_string(disagreements) +
             " disagreements");

  PermutationRun tight = permutation_verdicts(ToleranceConfig{}.tightened(10.0), true);
  int changed = 0;
  for (size_t i = 0; i < base.verdicts.size(); ++i)
    if (base.verdicts[i] != tight.verdicts[i]) ++changed;
  report(8, changed == 0 && base.verdicts.size() == tight.verdicts.size(),
         std::to_string(base.verdicts.size()) + " verdict sets compared, " + std::to_string(changed) +
             " changed under 10x tighter tolerances (" + std::to_string(seconds_since(t0)) + " s)");
}

void criterion9() {
  auto mon = fuchsian_monodromy(sl2_system(1e-2), 1e-10);
  auto probe = generic_stabilizer_probe(mon, 100, 42, 1e-10);
  std::mt19937_64 rng(42);
  std::normal_distribution<double> gauss;
  int fails = 0;
  double least = 1e300;
  for (int t = 0; t < 100; ++t) {
    CVector v(2);
    for (int k = 0; k < 2; ++k) v(k) = Complex(gauss(rng), gauss(rng));
    v.normalize();
    for (const auto& m : mon.matrices) {
      if ((m - CMatrix::Identity(2, 2)).norm() < 1e-12) continue;
      double motion = (m * v - v).norm();
      least = std::min(least, motion);
      if (motion <= 1e-6) ++fails;
    }
  }
  char buf[256];
  std::snprintf(buf, sizeof buf, "100 vectors: %d failures (library probe %d), min motion %.3e", fails,
                probe.failures, least);
  report(9, fails == 0 && probe.failures == 0 && probe.trials == 100, buf);
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> criteria = {criterion1, criterion2, criterion3, criterion4,
                                                       criterion5, criterion6, criteria7and8, criterion9};
  for (const auto& c : criteria) {
    try {
      c();
    } catch (const std::exception& e) {
      std::printf("FAIL criterion group raised: %s\n", e.what());
      ++failures;
    }
  }
  std::printf("%d failing criteria\n", failures);
  return failures == 0 ? 0 : 1;
}
