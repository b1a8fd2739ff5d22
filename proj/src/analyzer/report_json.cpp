#include "ltic/analyzer_json.hpp"

namespace ltic {

namespace {

nlohmann::json exprs(const std::vector<SignalExpr>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : v) out.push_back(to_string(e, true));
  return out;
}

}  // namespace

nlohmann::json to_json(const CanonicalForm& cf) {
  return {{"a", exprs(cf.a)}, {"b", exprs(cf.b)}};
}

nlohmann::json to_json(const LinearityReport& report,
                       const std::optional<CanonicalForm>& canonical) {
  nlohmann::json out;
  out["verdict"] = to_string(report.verdict);
  out["defects"] = nlohmann::json::array();
  for (const auto& d : report.defects) {
    out["defects"].push_back({{"kind", to_string(d.kind)}, {"term", to_string(d.term, true)}});
  }
  out["proof_trace"] = nlohmann::json::array();
  for (const auto& step : report.proof_trace) {
    out["proof_trace"].push_back({{"rule", step.rule},
                                  {"before", to_string(step.before, true)},
                                  {"after", to_string(step.after, true)}});
  }
  if (report.witness) {
    const Witness& w = *report.witness;
    out["witness"] = {{"kind", to_string(w.kind)},
                      {"x1", w.x1},
                      {"x2", w.x2},
                      {"alpha", to_string(w.alpha)},
                      {"beta", to_string(w.beta)},
                      {"delta", to_string(w.delta)},
                      {"lhs", to_string(w.lhs, true)},
                      {"rhs", to_string(w.rhs, true)}};
  }
  if (canonical) out["canonical"] = to_json(*canonical);
  return out;
}

}  // namespace ltic
