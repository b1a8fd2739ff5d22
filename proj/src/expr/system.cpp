#include "ltic/system.hpp"

#include "ltic/calculus.hpp"

namespace ltic {

SystemDef::SystemDef(const SignalExpr& rhs, std::string source_text)
    : rhs_(normalize(rhs)),
      has_feedback_(mentions(rhs_, SignalKind::Y)),
      source_text_(std::move(source_text)) {}

}  // namespace ltic
