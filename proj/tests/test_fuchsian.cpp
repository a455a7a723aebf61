#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "monokit/fuchsian.hpp"

using namespace monokit;

namespace {
CMatrix m2(Complex a, Complex b, Complex c, Complex d) {
  CMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}
const CMatrix E = m2(0, 1, 0, 0);
const CMatrix F = m2(0, 0, 1, 0);
}  // namespace

TEST_CASE("scalar monodromy") {
  const double lambda = 0.3;
  FuchsianSystem sys{{Complex(0, 0)}, {CMatrix::Constant(1, 1, lambda)}};
  auto mon = fuchsian_monodromy(sys, 1e-10);
  Complex want = std::exp(Complex(0, 2 * std::numbers::pi * lambda));
  CHECK(std::abs(mon.matrices[0](0, 0) - want) < 1e-8);
}

TEST_CASE("loop product is identity when residues sum to zero") {
  FuchsianSystem sys{{Complex(0, 0), Complex(1, 0), Complex(0.3, 0.8)},
                     {m2(0.1, 0.2, 0.05, -0.1), m2(0.02, -0.1, 0.3, 0.04), m2(0, 0, 0, 0)}};
  sys.residues[2] = -(sys.residues[0] + sys.residues[1]);
  auto mon = fuchsian_monodromy(sys, 1e-11);
  CMatrix p = CMatrix::Identity(2, 2);
  for (const auto& m : mon.matrices) p = m * p;
  CHECK((p - CMatrix::Identity(2, 2)).norm() < 1e-7);
}

TEST_CASE("lie closure") {
  auto sl2 = lie_closure({E, F}, 1e-9);
  CHECK(sl2.dimension() == 3);
  CHECK_FALSE(sl2.solvable());
  auto diag = lie_closure({m2(1, 0, 0, 2), m2(3, 0, 0, -1)}, 1e-9);
  CHECK(diag.dimension() == 2);
  CHECK(diag.solvable());
}

TEST_CASE("triangularization witness") {
  CMatrix a(3, 3);
  a << 1, 2, 0, -1, 4, 1, 0.5, 0, 2;
  auto t = is_simultaneously_triangularizable({a, a * a}, 1e-9);
  CHECK(t.triangularizable);
  REQUIRE(t.witness);
  auto t2 = is_simultaneously_triangularizable({m2(1, 1, 0, 2), m2(0, 1, 0, 0)}, 1e-9);
  CHECK(t2.triangularizable);
  CHECK(t2.subdiagonal_mass < 1e-7);
}
