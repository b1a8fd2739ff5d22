#pragma once

#include <json.hpp>

#include "ltic/numeric/properties.hpp"

namespace ltic {

/// {property, max_abs_error, tolerance, passed, configuration{}}.
nlohmann::json to_json(const PropertyReport& report);

}  // namespace ltic
