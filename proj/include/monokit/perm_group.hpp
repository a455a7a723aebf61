#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "monokit/numeric.hpp"
#include "monokit/permutation.hpp"

namespace monokit {

namespace detail {
struct GroupCache;
class StabilizerChain;
}  // namespace detail

/// Finitely generated permutation group. The stabilizer chain (Schreier-Sims)
/// is built on first use and shared, write-once, between copies.
class PermutationGroup {
 public:
  PermutationGroup(int degree, std::vector<Permutation> generators);

  static PermutationGroup symmetric(int n);
  static PermutationGroup alternating(int n);
  static PermutationGroup cyclic(int n);
  static PermutationGroup trivial(int n) { return {n, {}}; }

  int degree() const { return degree_; }
  /// Non-identity generators as supplied.
  const std::vector<Permutation>& generators() const { return generators_; }

  Integer order() const;
  bool contains(const Permutation& p) const;
  bool is_trivial() const { return generators_.empty(); }

  std::vector<int> orbit(int point) const;
  /// Orbits sorted by smallest point.
  std::vector<std::vector<int>> orbits() const;

  /// Generators of the pointwise stabilizer of `points`.
  PermutationGroup pointwise_stabilizer(const std::vector<int>& points) const;
  PermutationGroup normal_closure(const std::vector<Permutation>& elements) const;
  PermutationGroup derived_subgroup() const;
  bool is_subgroup_of(const PermutationGroup& other) const;

  /// Uniformly random element (product of random coset representatives).
  Permutation random_element(std::mt19937_64& rng) const;
  /// Every element, in chain order. Throws OrderTooLarge above `cap`.
  std::vector<Permutation> elements(std::uint64_t cap) const;

 private:
  const detail::StabilizerChain& chain() const;

  int degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<detail::GroupCache> cache_;
};

struct MonodromyPair {
  PermutationGroup group;
  int stabilized_point = 0;
  PermutationGroup stabilizer;
};

struct PrimitivityResult {
  bool primitive = true;
  /// A nontrivial block system preserved by every generator when imprimitive.
  std::vector<std::vector<int>> blocks;
};

/// A composition factor: cyclic of prime order, or nonabelian simple.
struct CompositionFactor {
  bool cyclic = true;
  Integer order;
  /// Minimal faithful permutation degree; -1 when the factor is unidentified.
  int min_degree = -1;
  std::string name;

  std::string to_string() const;
  friend bool operator==(const CompositionFactor&, const CompositionFactor&) = default;
};

struct FactorSignature {
  /// Sorted: cyclic factors by prime, then nonabelian factors by order.
  std::vector<CompositionFactor> factors;

  Integer order_product() const;
  bool all_cyclic() const;
  std::string to_string() const;
  friend bool operator==(const FactorSignature&, const FactorSignature&) = default;
};

Integer group_order(const PermutationGroup& g);
bool is_transitive(const PermutationGroup& g);
/// Throws NotTransitive for intransitive groups.
PrimitivityResult is_primitive(const PermutationGroup& g);
/// Finest block system preserved by g that puts a and b in one block.
std::vector<std::vector<int>> minimal_block_system(const PermutationGroup& g, int a, int b);

/// G, G', G'', ... stopping at the first repeat.
std::vector<PermutationGroup> derived_series(const PermutationGroup& g);
bool is_solvable(const PermutationGroup& g);

/// Throws OrderTooLarge above 10^9.
FactorSignature composition_factor_signature(const PermutationGroup& g);
/// Every composition factor cyclic or simple with minimal degree <= k.
bool is_k_solvable(const PermutationGroup& g, int k);

struct AlmostSolvableWitness {
  bool almost_solvable = true;
  std::string chain;
};
AlmostSolvableWitness is_almost_solvable_finite(const PermutationGroup& g);

/// Throws NotTransitive.
PermutationGroup stabilizer(const PermutationGroup& g, int point);
MonodromyPair monodromy_pair(const PermutationGroup& g, int point);

/// True iff the group contains an n-cycle. When `infinity_loop` is an
/// n-cycle the answer is immediate; otherwise generators and then all
/// elements (up to 10^6, else OrderTooLarge) are searched.
bool contains_full_cycle(const PermutationGroup& g,
                         const std::optional<Permutation>& infinity_loop = std::nullopt);

}  // namespace monokit
