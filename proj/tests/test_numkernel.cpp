#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <random>

#include "monokit/errors.hpp"
#include "monokit/linalg.hpp"
#include "monokit/ode.hpp"
#include "monokit/resultant.hpp"
#include "monokit/roots.hpp"

using namespace monokit;

namespace {

CPoly random_cpoly(std::mt19937_64& rng, int degree) {
  std::normal_distribution<double> g;
  std::vector<Complex> c(static_cast<size_t>(degree) + 1);
  for (auto& v : c) v = {g(rng), g(rng)};
  return CPoly(c);
}

BiPoly random_bipoly(std::mt19937_64& rng, int dx, int dy) {
  std::uniform_int_distribution<int> coef(-4, 4);
  std::map<BiPoly::Key, Rational> t;
  for (int i = 0; i <= dx; ++i)
    for (int j = 0; j <= dy; ++j)
      if (int c = coef(rng)) t[{i, j}] = Rational(c, 1 + (i + j) % 3);
  t[{0, dy}] = 1;
  return BiPoly(t);
}

PathPolyline circle(Complex center, double r, Complex start_dir, int n = 96) {
  PathPolyline p;
  for (int k = 0; k <= n; ++k)
    p.vertices.push_back(center + r * start_dir * std::polar(1.0, 2 * std::numbers::pi * (k % n) / n));
  return p;
}

FuchsianSystem random_system(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  FuchsianSystem s;
  s.poles = {Complex(0, 0), Complex(1.5, 0.5)};
  for (int i = 0; i < 2; ++i) {
    CMatrix a(3, 3);
    for (int k = 0; k < 9; ++k) a(k / 3, k % 3) = 0.3 * Complex(g(rng), g(rng));
    s.residues.push_back(a);
  }
  return s;
}

}  // namespace

TEST_CASE("roots reconstruct the monic polynomial") {
  std::mt19937_64 rng(42);
  const double tol = 1e-10;
  for (int t = 0; t < 100; ++t) {
    CPoly p = random_cpoly(rng, 2 + t % 12);
    auto roots = roots_all(p, tol);
    CPoly prod = CPoly::constant(1);
    int count = 0;
    for (const auto& r : roots)
      for (int m = 0; m < r.multiplicity; ++m, ++count) prod = prod * CPoly(std::vector<Complex>{-r.value, 1});
    REQUIRE(count == p.degree());
    double scale = 0;
    for (const auto& c : p.coeffs()) scale = std::max(scale, std::abs(c / p.leading()));
    for (int i = 0; i <= p.degree(); ++i)
      CHECK(std::abs(prod.coeff(i) - p.coeff(i) / p.leading()) <= 100 * tol * std::max(1.0, scale));
  }
}

TEST_CASE("rational roots carry exact multiplicities") {
  // (z - 1)^3 (z + 2)^2 (z^2 + 1)
  RatPoly p(std::vector<Rational>{1, -1, 1, -1, 1, -1, 1});
  RatPoly q = RatPoly(std::vector<Rational>{-1, 1}).pow(3) * RatPoly(std::vector<Rational>{2, 1}).pow(2) *
              RatPoly(std::vector<Rational>{1, 0, 1});
  auto roots = roots_all(q, 1e-10);
  REQUIRE(roots.size() == 4);
  int total = 0;
  for (const auto& r : roots) {
    total += r.multiplicity;
    if (std::abs(r.value - 1.0) < 1e-8) CHECK(r.multiplicity == 3);
    if (std::abs(r.value + 2.0) < 1e-8) CHECK(r.multiplicity == 2);
  }
  CHECK(total == 7);
  CHECK(roots_all(p, 1e-10).size() == 6);
}

TEST_CASE("resultant is exact") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 7);
  for (int t = 0; t < 20; ++t) {
    BiPoly f = random_bipoly(rng, 1 + t % 3, 2 + t % 2);
    BiPoly g = t % 2 ? f.derivative_y() : random_bipoly(rng, 2, 2);
    RatPoly r = resultant_in_y(f, g);
    for (int k = 0; k < 3; ++k) {
      Rational x0(num(rng), den(rng));
      CHECK(sylvester_determinant(f.at_x(x0), f.degree_y(), g.at_x(x0), g.degree_y()) == r.eval(x0));
    }
  }
}

TEST_CASE("discriminant of y^5 + y - x") {
  std::map<BiPoly::Key, Rational> t{{{0, 5}, 1}, {{0, 1}, 1}, {{1, 0}, -1}};
  RatPoly d = discriminant_in_y(BiPoly(t));
  CHECK(d.degree() == 4);
  CHECK(d.coeff(4) == 3125);
  CHECK(d.coeff(0) == 256);
  CHECK(d.coeff(1) == 0);
}

TEST_CASE("interpolation is exact") {
  RatPoly p(std::vector<Rational>{Rational(1, 3), -2, 0, Rational(5, 7)});
  std::vector<Rational> xs{0, 1, -1, Rational(1, 2)}, ys;
  for (const auto& x : xs) ys.push_back(p.eval(x));
  CHECK(interpolate(xs, ys) == p);
}

TEST_CASE("transfer matrices: reversal, composition, Liouville") {
  std::mt19937_64 rng(42);
  const double tol = 1e-10;
  for (int t = 0; t < 5; ++t) {
    FuchsianSystem s = random_system(rng);
    PathPolyline p1{{Complex(-0.7, 0.4), Complex(0.6, 1.2), Complex(2.4, 0.9)}};
    PathPolyline p2{{Complex(2.4, 0.9), Complex(1.0, -0.8), Complex(-0.3, -0.5)}};
    CMatrix t1 = integrate_linear_ode(s, p1, tol);
    CMatrix t2 = integrate_linear_ode(s, p2, tol);
    CMatrix back = integrate_linear_ode(s, p1.then(p1.reversed()), tol);
    CHECK((back - CMatrix::Identity(3, 3)).norm() <= 10 * tol * std::max(1.0, t1.norm() * t1.inverse().norm()));
    CMatrix both = integrate_linear_ode(s, p1.then(p2), tol);
    CHECK((both - t2 * t1).norm() <= 10 * tol * std::max(1.0, both.norm()));

    for (int j = 0; j < 2; ++j) {
      PathPolyline loop = circle(s.poles[j], 0.4, 1.0);
      CMatrix m = integrate_linear_ode(s, loop, tol);
      Complex expected = std::exp(Complex(0, 2 * std::numbers::pi) * s.residues[j].trace());
      CHECK(std::abs(m.determinant() - expected) <= 100 * tol * std::max(1.0, std::abs(expected)));
    }
  }
}

TEST_CASE("paths too close to a pole are rejected") {
  FuchsianSystem s{{Complex(0, 0), Complex(1, 0)}, {CMatrix::Identity(2, 2), CMatrix::Identity(2, 2)}};
  PathPolyline p{{Complex(-1, 0.01), Complex(2, 0.01)}};
  CHECK_THROWS_AS(integrate_linear_ode(s, p, 1e-10), Error);
}

TEST_CASE("matrix exponential") {
  CMatrix n = CMatrix::Zero(2, 2);
  n(0, 1) = 3.0;
  CMatrix e = matrix_exp(n);
  CHECK(std::abs(e(0, 1) - 3.0) < 1e-14);
  CHECK(std::abs(e(0, 0) - 1.0) < 1e-14);
  CMatrix d = CMatrix::Zero(2, 2);
  d(0, 0) = Complex(0, std::numbers::pi);
  CHECK(std::abs(matrix_exp(d)(0, 0) + 1.0) < 1e-13);
}
