#include "lensfiber/config.hpp"

#include <algorithm>
#include <string>

namespace lensfiber {

Config& global_config() {
  static Config cfg;
  return cfg;
}

void check_materializable(const Int& p, const char* op) {
  const std::int64_t lim = std::min(global_config().materialize_limit, kMaterializeHardCap);
  if (p > lim)
    throw size_limit_error(std::string(op) + ": p=" + to_string(p) +
                           " exceeds the materialization limit " + std::to_string(lim) +
                           "; use the point-evaluation and locator paths instead");
}

}  // namespace lensfiber
