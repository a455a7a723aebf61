#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "monokit/perm_group.hpp"
#include "monokit/simple_groups.hpp"

using namespace monokit;

TEST_CASE("orders") {
  CHECK(PermutationGroup::symmetric(5).order() == 120);
  CHECK(PermutationGroup::alternating(7).order() == 2520);
  CHECK(PermutationGroup::cyclic(9).order() == 9);
}

TEST_CASE("blocks of C4") {
  auto g = PermutationGroup::cyclic(4);
  auto r = is_primitive(g);
  CHECK_FALSE(r.primitive);
  CHECK(minimal_block_system(g, 0, 2) == std::vector<std::vector<int>>{{0, 2}, {1, 3}});
}

TEST_CASE("signatures") {
  CHECK(composition_factor_signature(PermutationGroup::symmetric(4)).to_string() == "[C2, C2, C2, C3]");
  CHECK(composition_factor_signature(PermutationGroup::symmetric(5)).to_string() == "[C2, A5]");
  CHECK(composition_factor_signature(PermutationGroup::alternating(8)).to_string() == "[A8]");
  CHECK(is_k_solvable(PermutationGroup::symmetric(5), 5));
  CHECK_FALSE(is_k_solvable(PermutationGroup::symmetric(6), 5));
}

TEST_CASE("simple group table") {
  int below = 0;
  for (const auto& e : simple_group_table()) below += e.order < 1'000'000;
  CHECK(below == 56);
}
