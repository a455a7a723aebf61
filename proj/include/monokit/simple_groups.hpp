#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace monokit {

struct SimpleGroupInfo {
  std::string name;
  std::uint64_t order;
  /// Minimal degree of a faithful permutation representation.
  int min_degree;
};

/// Every nonabelian simple group of order at most 10^7, sorted by order.
const std::vector<SimpleGroupInfo>& simple_group_table();

/// Table entries of the given order (two entries for 20160: A8 and PSL(3,4)).
std::vector<SimpleGroupInfo> simple_groups_of_order(std::uint64_t order);

}  // namespace monokit
