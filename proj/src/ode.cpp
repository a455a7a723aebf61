#include "monokit/ode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "monokit/errors.hpp"

namespace monokit {

double PathPolyline::length() const {
  double l = 0.0;
  for (size_t i = 1; i < vertices.size(); ++i) l += std::abs(vertices[i] - vertices[i - 1]);
  return l;
}

PathPolyline PathPolyline::reversed() const {
  return {std::vector<Complex>(vertices.rbegin(), vertices.rend())};
}

PathPolyline PathPolyline::then(const PathPolyline& next) const {
  PathPolyline out = *this;
  if (next.vertices.empty()) return out;
  if (!out.vertices.empty() && out.vertices.back() != next.vertices.front())
    throw Error(ErrorKind::InvalidInput, "paths do not join");
  out.vertices.insert(out.vertices.end(), next.vertices.begin() + (out.vertices.empty() ? 0 : 1),
                      next.vertices.end());
  return out;
}

CMatrix FuchsianSystem::coefficient(Complex x) const {
  const int n = dimension();
  CMatrix a = CMatrix::Zero(n, n);
  for (size_t i = 0; i < poles.size(); ++i) a += residues[i] / (x - poles[i]);
  return a;
}

double FuchsianSystem::min_pole_gap() const {
  if (poles.size() < 2) return 1.0;
  double gap = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < poles.size(); ++i)
    for (size_t j = i + 1; j < poles.size(); ++j) gap = std::min(gap, std::abs(poles[i] - poles[j]));
  return gap;
}

void FuchsianSystem::validate() const {
  if (poles.empty()) throw Error(ErrorKind::InvalidInput, "system needs at least one pole");
  if (poles.size() != residues.size())
    throw Error(ErrorKind::InvalidInput, "one residue matrix per pole is required");
  const auto n = residues.front().rows();
  if (n == 0) throw Error(ErrorKind::InvalidInput, "residue matrices must be nonempty");
  for (const auto& r : residues)
    if (r.rows() != n || r.cols() != n)
      throw Error(ErrorKind::InvalidInput, "residue matrices must be square and of one size");
  if (min_pole_gap() == 0.0) throw Error(ErrorKind::InvalidInput, "poles must be distinct");
}

double segment_distance(Complex p, Complex a, Complex b) {
  Complex d = b - a;
  double len2 = std::norm(d);
  if (len2 == 0.0) return std::abs(p - a);
  double t = std::clamp(((p - a) * std::conj(d)).real() / len2, 0.0, 1.0);
  return std::abs(p - (a + t * d));
}

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double e1 = b1 - 5179.0 / 57600, e3 = b3 - 7571.0 / 16695, e4 = b4 - 393.0 / 640,
                 e5 = b5 + 92097.0 / 339200, e6 = b6 - 187.0 / 2100, e7 = -1.0 / 40;

CMatrix integrate_segment(const FuchsianSystem& sys, Complex a, Complex b, CMatrix y, double tol,
                          double nearest) {
  const Complex d = b - a;
  const double seg_len = std::abs(d);
  if (seg_len == 0.0) return y;
  auto rhs = [&](double s, const CMatrix& state) -> CMatrix {
    return (sys.coefficient(a + s * d) * d) * state;
  };
  const double tol_eff = std::max(tol, 1e-13);

  double s = 0.0;
  double h = std::min(1.0, 0.05 * nearest / seg_len);
  CMatrix k1 = rhs(0.0, y);
  while (s < 1.0) {
    h = std::min(h, 1.0 - s);
    const double step_len = h * seg_len;
    if (step_len < 1e-13 * (1.0 + std::abs(a + s * d)) && s + h < 1.0)
      throw Error(ErrorKind::StepUnderflow, "step underflow at x = " + format_complex(a + s * d));

    CMatrix k2 = rhs(s + c2 * h, y + h * (a21 * k1));
    CMatrix k3 = rhs(s + c3 * h, y + h * (a31 * k1 + a32 * k2));
    CMatrix k4 = rhs(s + c4 * h, y + h * (a41 * k1 + a42 * k2 + a43 * k3));
    CMatrix k5 = rhs(s + c5 * h, y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    CMatrix k6 = rhs(s + h, y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    CMatrix y_new = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    CMatrix k7 = rhs(s + h, y_new);
    CMatrix err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

    const double err_norm = max_abs(err);
    const double allowed = tol_eff * step_len * (1.0 + max_abs(y));
    if (!std::isfinite(err_norm))
      throw Error(ErrorKind::StepUnderflow, "non-finite state at x = " + format_complex(a + s * d));
    double factor = err_norm == 0.0 ? 4.0 : 0.9 * std::pow(allowed / err_norm, 0.25);
    factor = std::clamp(factor, 0.2, 4.0);
    if (err_norm <= allowed) {
      s += h;
      y = std::move(y_new);
      k1 = std::move(k7);
    }
    h *= factor;
  }
  return y;
}

}  // namespace

CMatrix integrate_linear_ode(const FuchsianSystem& system, const PathPolyline& path, double tol) {
  system.validate();
  const int n = system.dimension();
  CMatrix y = CMatrix::Identity(n, n);
  const double min_allowed = system.min_pole_gap() / 10.0;
  for (size_t i = 1; i < path.vertices.size(); ++i) {
    Complex a = path.vertices[i - 1], b = path.vertices[i];
    double nearest = std::numeric_limits<double>::infinity();
    for (const auto& p : system.poles) {
      double dist = segment_distance(p, a, b);
      if (dist < min_allowed)
        throw Error(ErrorKind::PathTooClose, "path passes within " + std::to_string(dist) +
                                                 " of pole " + format_complex(p));
      nearest = std::min(nearest, dist);
    }
    y = integrate_segment(system, a, b, std::move(y), tol, nearest);
  }
  return y;
}

}  // namespace monokit
