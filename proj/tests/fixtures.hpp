#pragma once

#include <cmath>
#include <numbers>
#include <random>

#include "monokit/errors.hpp"
#include "monokit/fuchsian.hpp"
#include "monokit/polygon.hpp"

namespace fixtures {

using namespace monokit;

inline PolygonSide segment(Complex a, Complex b) { return {GenCircle::line(a, b), a, b}; }
inline PolygonSide arc(Complex c, double r, double from, double to) {
  return {GenCircle::circle(c, r), c + std::polar(r, from), c + std::polar(r, to)};
}

inline PolygonSpec straight_quadrilateral() {
  const Complex v[] = {{0, 0}, {3, 0}, {2.5, 2}, {0.5, 1.5}};
  PolygonSpec p;
  for (int i = 0; i < 4; ++i) p.sides.push_back(segment(v[i], v[(i + 1) % 4]));
  return p;
}

/// |z| = 1 and |z| = 2 joined by the rays at angles 0 and 1.
inline PolygonSpec concentric_quadrilateral() {
  PolygonSpec p;
  p.sides.push_back(arc(0, 1, 1, 0));
  p.sides.push_back(segment(1, 2));
  p.sides.push_back(arc(0, 2, 0, 1));
  p.sides.push_back(segment(std::polar(2.0, 1.0), std::polar(1.0, 1.0)));
  return p;
}

/// Stereographic image of a mirror plane through the origin.
inline GenCircle plane_circle(double a, double b, double c) { return {c, Complex(a, b), -c}; }

inline PolygonSpec triangle_from(const GenCircle (&c)[3]) {
  Complex v[3];
  for (int i = 0; i < 3; ++i) {
    auto pts = intersect(c[i], c[(i + 1) % 3], 1e-12);
    v[i] = pts.front();
  }
  PolygonSpec p;
  for (int i = 0; i < 3; ++i) p.sides.push_back({c[i], v[(i + 2) % 3], v[i]});
  return p;
}

/// Mirrors x = y, y = z, y = -z of the tetrahedral group: angles pi/3, pi/2, pi/3.
inline PolygonSpec tetrahedral_triangle() {
  const GenCircle c[3] = {plane_circle(1, -1, 0), plane_circle(0, 1, -1), plane_circle(0, 1, 1)};
  return triangle_from(c);
}

/// Three mutually tangent unit circles.
inline PolygonSpec vanishing_angle_triangle() {
  const Complex ctr[3] = {{0, 0}, {2, 0}, {1, std::sqrt(3.0)}};
  PolygonSpec p;
  for (int i = 0; i < 3; ++i) {
    Complex prev = (ctr[i] + ctr[(i + 2) % 3]) / 2.0, next = (ctr[i] + ctr[(i + 1) % 3]) / 2.0;
    p.sides.push_back({GenCircle::circle(ctr[i], 1.0), prev, next});
  }
  return p;
}

/// Holomorphic Moebius map with small integer coefficients keeping every vertex finite.
inline MoebiusLike random_moebius(std::mt19937_64& rng, const PolygonSpec& poly) {
  std::uniform_int_distribution<int> coef(-3, 3);
  for (;;) {
    MoebiusLike t;
    t.m << double(coef(rng)), double(coef(rng)), double(coef(rng)), double(coef(rng));
    if (std::abs(t.m.determinant()) < 0.5) continue;
    bool ok = true;
    for (const auto& s : poly.sides)
      for (Complex z : {s.from, s.to}) ok = ok && std::abs(t.m(1, 0) * z + t.m(1, 1)) > 0.2;
    if (ok) return t.normalized();
  }
}

inline CMatrix m2(Complex a, Complex b, Complex c, Complex d) {
  CMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

/// Poles {0, 1}, residues eps * E and eps * F (sl2 generators).
inline FuchsianSystem sl2_system(double eps) {
  return {{Complex(0, 0), Complex(1, 0)}, {eps * m2(0, 1, 0, 0), eps * m2(0, 0, 1, 0)}};
}

inline FuchsianSystem triangular_system(double eps) {
  return {{Complex(0, 0), Complex(1, 0)}, {eps * m2(0.5, 1, 0, -0.25), eps * m2(0.1, -2, 0, 0.3)}};
}

}  // namespace fixtures
