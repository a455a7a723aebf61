#include "monokit/simple_groups.hpp"

#include <algorithm>

namespace monokit {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// q = p^k for prime p, k >= 1.
bool is_prime_power(std::uint64_t q) {
  for (std::uint64_t p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    if (!is_prime(p)) return false;
    while (q % p == 0) q /= p;
    return q == 1;
  }
  return false;
}

std::vector<SimpleGroupInfo> build_table() {
  constexpr std::uint64_t kMaxOrder = 10'000'000;
  std::vector<SimpleGroupInfo> t;

  std::uint64_t fact = 1;  // n! / 2 for n = 2
  for (int n = 3; n <= 12; ++n) {
    fact *= n;
    if (n >= 5 && fact <= kMaxOrder) t.push_back({"A" + std::to_string(n), fact, n});
  }

  // PSL(2,q); q = 4, 5, 9 coincide with A5, A5, A6.
  for (std::uint64_t q = 7; q < 400; ++q) {
    if (!is_prime_power(q) || q == 9) continue;
    std::uint64_t order = q * (q * q - 1) / (q % 2 == 1 ? 2 : 1);
    if (order > kMaxOrder) continue;
    int degree = (q == 7 || q == 11) ? static_cast<int>(q) : static_cast<int>(q + 1);
    t.push_back({"PSL(2," + std::to_string(q) + ")", order, degree});
  }

  const std::vector<SimpleGroupInfo> sporadic_and_others = {
      {"PSL(3,3)", 5616, 13},        {"PSU(3,3)", 6048, 28},       {"M11", 7920, 11},
      {"PSL(3,4)", 20160, 21},       {"PSp(4,3)", 25920, 27},      {"Sz(8)", 29120, 65},
      {"PSU(3,4)", 62400, 65},       {"M12", 95040, 12},           {"PSU(3,5)", 126000, 50},
      {"J1", 175560, 266},           {"PSL(3,5)", 372000, 31},     {"M22", 443520, 22},
      {"J2", 604800, 100},           {"PSp(4,4)", 979200, 85},     {"PSp(6,2)", 1451520, 28},
      {"PSL(3,7)", 1876896, 57},     {"PSU(4,3)", 3265920, 112},   {"G2(3)", 4245696, 351},
      {"PSp(4,5)", 4680000, 156},    {"PSU(3,8)", 5515776, 513},   {"PSU(3,7)", 5663616, 344},
      {"PSL(4,3)", 6065280, 40},     {"PSL(5,2)", 9999360, 31},
  };
  t.insert(t.end(), sporadic_and_others.begin(), sporadic_and_others.end());
  std::stable_sort(t.begin(), t.end(), [](const auto& a, const auto& b) { return a.order < b.order; });
  return t;
}

}  // namespace

const std::vector<SimpleGroupInfo>& simple_group_table() {
  static const std::vector<SimpleGroupInfo> table = build_table();
  return table;
}

std::vector<SimpleGroupInfo> simple_groups_of_order(std::uint64_t order) {
  std::vector<SimpleGroupInfo> out;
  for (const auto& e : simple_group_table())
    if (e.order == order) out.push_back(e);
  return out;
}

}  // namespace monokit
