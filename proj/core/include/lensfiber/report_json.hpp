#pragma once

#include <json.hpp>

#include "lensfiber/fibering.hpp"

namespace lensfiber {

// Integers are serialized as JSON numbers up to 2^53 - 1 and as decimal
// strings beyond, so any consumer can parse them losslessly.
nlohmann::json int_to_json(const Int& v);

nlohmann::json report_to_json(const FiberReport& rep);

}  // namespace lensfiber
