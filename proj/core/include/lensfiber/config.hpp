#pragma once

#include <cstdint>

#include "lensfiber/int.hpp"

namespace lensfiber {

// Runtime knobs. The materialization limit bounds every O(p) code path;
// it is hard-capped at 10^9 so that materialized sequence values provably
// fit in 64 bits (|g| <= 2*p^2 < 2^63).
struct Config {
  std::int64_t materialize_limit = 10'000'000;
  std::int64_t minima_cap = 100'000;
};

inline constexpr std::int64_t kMaterializeHardCap = 1'000'000'000;

Config& global_config();

// Throws size_limit_error when p exceeds the configured limit.
void check_materializable(const Int& p, const char* op);

}  // namespace lensfiber
