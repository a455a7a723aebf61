#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "monokit/ritt.hpp"

using namespace monokit;

namespace {
RatPoly poly(std::vector<int> c) {
  std::vector<Rational> r;
  for (int v : c) r.emplace_back(v);
  return RatPoly(r);
}
std::set<std::vector<int>> chains(const std::vector<Decomposition>& ds) {
  std::set<std::vector<int>> s;
  for (const auto& d : ds) s.insert(d.degrees());
  return s;
}
}  // namespace

TEST_CASE("chebyshev recurrence") {
  CHECK(chebyshev(5) == poly({0, 5, 0, -20, 0, 16}));
  CHECK(chebyshev(6) == poly({-1, 0, 18, 0, -48, 0, 32}));
}

TEST_CASE("decompose") {
  auto z6 = decompose(poly({0, 0, 0, 0, 0, 0, 1}));
  CHECK(chains(z6) == std::set<std::vector<int>>{{2, 3}, {3, 2}});
  for (const auto& d : z6)
    for (auto t : d.tags) CHECK(t == ComponentTag::Power);
  auto t6 = decompose(chebyshev(6));
  CHECK(chains(t6) == std::set<std::vector<int>>{{2, 3}, {3, 2}});
  auto q = decompose(poly({1, -1, 0, 0, 0, 1}));
  REQUIRE(q.size() == 1);
  CHECK(q[0].components.size() == 1);
  CHECK(q[0].tags[0] == ComponentTag::OtherPrimitive);
}

TEST_CASE("recognizers") {
  auto p = recognize_power(poly({-2, 6, -6, 2}));
  REQUIRE(p);
  CHECK(p->n == 3);
  CHECK(recognize_chebyshev(chebyshev(5)));
  CHECK(recognize_chebyshev(poly({1, -3, 0, 1})));
  CHECK_FALSE(recognize_chebyshev(poly({1, -1, 0, 0, 0, 1})));
  CHECK_FALSE(recognize_power(chebyshev(5)));
}

TEST_CASE("radicals") {
  auto t6 = invertible_by_radicals(chebyshev(6));
  CHECK(t6.verdict.status == VerdictStatus::Representable);
  auto q = invertible_by_radicals(poly({1, -1, 0, 0, 0, 1}));
  CHECK(q.verdict.status == VerdictStatus::StronglyNonRepresentable);
  CHECK(q.group_order == 120);
  CHECK(invertible_by_k_radicals(poly({1, -1, 0, 0, 0, 1}), 5).verdict.status == VerdictStatus::Representable);
  auto inv = inverse_monodromy(chebyshev(6));
  CHECK_FALSE(is_primitive(inv.group).primitive);
}
