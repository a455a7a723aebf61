#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monokit/algebraic.hpp"

namespace monokit {

enum class ComponentTag { Linear, Power, Chebyshev, DegreeAtMost4, DegreeAtMostK, OtherPrimitive };
std::string to_string(ComponentTag t);

/// z -> a z + b.
struct LinearChange {
  Complex a{1.0, 0.0};
  Complex b{0.0, 0.0};
  Complex operator()(Complex z) const { return a * z + b; }
};

struct Decomposition {
  /// Outermost first: p = components[0] o components[1] o ...
  std::vector<RatPoly> components;
  std::vector<ComponentTag> tags;

  RatPoly compose() const;
  std::vector<int> degrees() const;
  std::string to_string() const;
};

/// Every complete decomposition into primitive components, one per chain of
/// component degrees. Inner components are normalised monic with zero
/// constant term. Components of composite degree are certified primitive
/// through the block systems of their inverse monodromy.
std::vector<Decomposition> decompose(const RatPoly& p, const ToleranceConfig& tol = {});

/// Candidate right factor of degree d (monic, zero constant) with its left
/// factor, or nullopt when p has no decomposition with that inner degree.
std::optional<std::pair<RatPoly, RatPoly>> split_with_inner_degree(const RatPoly& p, int d);

/// p = outer(P_n(inner(z))) where P_n is z^n or T_n.
struct Recognition {
  int n = 0;
  LinearChange outer;
  LinearChange inner;
};

/// Exact test: p = a (z + c)^n + b. Throws NotPrimitiveInput for degree < 2.
std::optional<Recognition> recognize_power(const RatPoly& p);
/// n - 1 simple critical points with exactly two critical values, confirmed
/// against T_n to 1e-10. Throws NotPrimitiveInput for degree < 2.
std::optional<Recognition> recognize_chebyshev(const RatPoly& p);
/// T_n from the three-term recurrence.
RatPoly chebyshev(int n);

/// Monodromy of p^{-1}, i.e. of p(y) - x. The loop around infinity must be an n-cycle.
AlgebraicMonodromyReport inverse_monodromy(const RatPoly& p, const MonodromyOptions& opts = {});

struct RadicalInversion {
  Verdict verdict;
  std::vector<Decomposition> decompositions;
  /// A decomposition whose components are all linear, power, Chebyshev or of degree <= 4.
  std::optional<Decomposition> certificate;
  bool structural = false;
  bool group_solvable = false;
  Integer group_order;
};

/// Structural Ritt test, cross-checked against solvability of the inverse
/// monodromy; disagreement throws CrossCheckMismatch.
RadicalInversion invertible_by_radicals(const RatPoly& p, const MonodromyOptions& opts = {});

struct ComponentCheck {
  RatPoly component;
  ComponentTag tag = ComponentTag::OtherPrimitive;
  Integer group_order;
  bool k_solvable = false;
  /// k-solvable although of degree above k and neither power nor Chebyshev.
  bool exceptional = false;
};

struct KRadicalInversion {
  Verdict verdict;
  Decomposition decomposition;
  std::vector<ComponentCheck> components;
};

KRadicalInversion invertible_by_k_radicals(const RatPoly& p, int k, const MonodromyOptions& opts = {});

}  // namespace monokit
