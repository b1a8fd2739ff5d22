#include "ltic/numeric/report_json.hpp"

namespace ltic {

nlohmann::json to_json(const PropertyReport& report) {
  nlohmann::json config = nlohmann::json::object();
  for (const auto& [k, v] : report.configuration) config[k] = v;
  return {{"property", to_string(report.property)},
          {"max_abs_error", static_cast<double>(report.max_abs_error)},
          {"tolerance", static_cast<double>(report.tolerance)},
          {"passed", report.passed},
          {"configuration", config}};
}

}  // namespace ltic
