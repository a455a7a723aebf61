#include "monokit/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace monokit {

namespace {

constexpr int kMaxIterations = 2000;
constexpr double kEps = std::numeric_limits<double>::epsilon();

struct ValueAndSlope {
  Complex value;
  Complex slope;
};

ValueAndSlope horner(const std::vector<Complex>& c, Complex z) {
  Complex v = 0.0, d = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    d = d * z + v;
    v = v * z + *it;
  }
  return {v, d};
}

bool lex_less(Complex a, Complex b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

/// Simple-root solver for a polynomial with nonzero constant term.
std::vector<Complex> aberth(const std::vector<Complex>& coeffs) {
  const int n = static_cast<int>(coeffs.size()) - 1;
  std::vector<Complex> a = coeffs;
  const Complex lc = a.back();
  for (auto& v : a) v /= lc;
  if (n == 1) return {-a[0]};

  const Complex center = -a[n - 1] / static_cast<double>(n);
  double radius = std::pow(std::abs(horner(a, center).value), 1.0 / n);
  if (!(radius > 0.0) || !std::isfinite(radius)) radius = 1.0;
  radius = std::max(radius, 1e-3 * (1.0 + std::abs(center)));

  std::vector<Complex> z(n);
  for (int k = 0; k < n; ++k) {
    double theta = 2.0 * std::numbers::pi * k / n + 0.4;
    z[k] = center + std::polar(radius, theta);
  }

  std::vector<bool> done(n, false);
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    bool all_done = true;
    for (int i = 0; i < n; ++i) {
      if (done[i]) continue;
      auto [v, d] = horner(a, z[i]);
      if (v == 0.0) {
        done[i] = true;
        continue;
      }
      Complex ratio = v / d;
      Complex sum = 0.0;
      for (int j = 0; j < n; ++j)
        if (j != i) sum += 1.0 / (z[i] - z[j]);
      Complex w = ratio / (1.0 - ratio * sum);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) w = ratio;
      z[i] -= w;
      if (std::abs(w) <= 4.0 * kEps * std::max(1.0, std::abs(z[i]))) done[i] = true;
      all_done = all_done && done[i];
    }
    if (all_done) break;
  }

  // Newton polish, keeping a step only when it lowers the residual.
  for (auto& r : z) {
    for (int k = 0; k < 3; ++k) {
      auto [v, d] = horner(a, r);
      if (d == 0.0) break;
      Complex cand = r - v / d;
      if (std::abs(horner(a, cand).value) < std::abs(v)) r = cand;
      else break;
    }
  }
  return z;
}

void check_finite(const CPoly& p) {
  for (const auto& c : p.coeffs()) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()) || std::abs(c) > 1e300)
      throw Error(ErrorKind::OverflowingCoefficients, "polynomial coefficient is not finite");
  }
}

void check_residuals(const CPoly& p, const std::vector<Complex>& roots, double tol) {
  for (const auto& r : roots) {
    double res = std::abs(p.eval(r));
    if (!(res <= tol * residual_scale(p, r)))
      throw Error(ErrorKind::NonConvergence,
                  "root " + format_complex(r) + " has residual " + std::to_string(res));
  }
}

std::vector<Root> cluster(std::vector<Complex> pts, double radius) {
  const size_t n = pts.size();
  std::vector<size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (std::abs(pts[i] - pts[j]) <= radius) parent[find(i)] = find(j);
  std::vector<Root> out;
  std::vector<size_t> owner(n, n);
  for (size_t i = 0; i < n; ++i) {
    size_t r = find(i);
    if (owner[r] == n) {
      owner[r] = out.size();
      out.push_back({pts[i], 0});
    } else {
      out[owner[r]].value += pts[i];
    }
    out[owner[r]].multiplicity += 1;
  }
  for (auto& r : out) r.value /= static_cast<double>(r.multiplicity);
  return out;
}

void sort_roots(std::vector<Root>& roots) {
  std::sort(roots.begin(), roots.end(),
            [](const Root& a, const Root& b) { return lex_less(a.value, b.value); });
}

}  // namespace

double residual_scale(const CPoly& p, Complex r) {
  double m = 0.0;
  for (const auto& c : p.coeffs()) m = std::max(m, std::abs(c));
  return m * std::pow(std::max(1.0, std::abs(r)), p.degree());
}

std::vector<Root> roots_all(const CPoly& p, double tol) {
  if (p.degree() < 1) throw Error(ErrorKind::InvalidInput, "roots_all needs a nonconstant polynomial");
  check_finite(p);
  // Exact zero roots are split off before iterating.
  int zeros = 0;
  while (p.coeff(zeros) == Complex(0.0)) ++zeros;
  std::vector<Complex> rest(p.coeffs().begin() + zeros, p.coeffs().end());
  std::vector<Complex> pts;
  if (rest.size() > 1) {
    pts = aberth(rest);
    check_residuals(p, pts, tol);
  }
  std::vector<Root> out = cluster(pts, 10.0 * tol);
  if (zeros > 0) {
    auto near_zero = std::find_if(out.begin(), out.end(),
                                  [&](const Root& r) { return std::abs(r.value) <= 10.0 * tol; });
    if (near_zero != out.end()) {
      near_zero->value = 0.0;
      near_zero->multiplicity += zeros;
    } else {
      out.push_back({0.0, zeros});
    }
  }
  sort_roots(out);
  return out;
}

std::vector<Root> roots_all(const RatPoly& p, double tol) {
  if (p.degree() < 1) throw Error(ErrorKind::InvalidInput, "roots_all needs a nonconstant polynomial");
  std::vector<Root> out;
  auto factors = squarefree_decomposition(p);
  for (size_t i = 0; i < factors.size(); ++i) {
    const RatPoly& f = factors[i];
    if (f.degree() < 1) continue;
    CPoly cf = to_complex(f);
    check_finite(cf);
    int zeros = 0;
    while (f.coeff(zeros) == 0) ++zeros;
    if (zeros > 0) out.push_back({0.0, static_cast<int>(i) + 1});
    std::vector<Complex> rest(cf.coeffs().begin() + zeros, cf.coeffs().end());
    if (rest.size() <= 1) continue;
    auto pts = aberth(rest);
    check_residuals(cf, pts, tol);
    for (auto z : pts) out.push_back({z, static_cast<int>(i) + 1});
  }
  sort_roots(out);
  return out;
}

}  // namespace monokit
