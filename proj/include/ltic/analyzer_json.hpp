#pragma once

#include <optional>

#include <json.hpp>

#include "ltic/analyzer.hpp"

namespace ltic {

/// {verdict, defects[], proof_trace[], witness?, canonical?}. Expressions are
/// rendered in the input DSL, so every string parses back.
nlohmann::json to_json(const LinearityReport& report,
                       const std::optional<CanonicalForm>& canonical = std::nullopt);

nlohmann::json to_json(const CanonicalForm& cf);

}  // namespace ltic
