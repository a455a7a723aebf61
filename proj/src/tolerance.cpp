#include "monokit/tolerance.hpp"

#include <algorithm>
#include <string>

#include "monokit/errors.hpp"

namespace monokit {

ToleranceConfig ToleranceConfig::tightened(double factor) const {
  auto t = [&](double v) { return std::max(v / factor, kFloor); };
  return {t(root), t(ode), t(cluster), t(rank)};
}

void ToleranceConfig::validate() const {
  for (auto [name, v] : {std::pair{"root", root}, {"ode", ode}, {"cluster", cluster}, {"rank", rank}}) {
    if (!(v >= kFloor))
      throw Error(ErrorKind::InvalidInput,
                  std::string(name) + " tolerance must be at least 1e-13, got " + std::to_string(v));
  }
}

}  // namespace monokit
