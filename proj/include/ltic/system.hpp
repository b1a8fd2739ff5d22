#pragma once

#include <string>

#include "ltic/expr.hpp"

namespace ltic {

/// A system definition y = S[x, y].
class SystemDef {
 public:
  /// Stores the normalized right-hand side; has_feedback is derived from it.
  explicit SystemDef(const SignalExpr& rhs, std::string source_text = {});

  const SignalExpr& rhs() const { return rhs_; }
  bool has_feedback() const { return has_feedback_; }
  const std::string& source_text() const { return source_text_; }

 private:
  SignalExpr rhs_;
  bool has_feedback_;
  std::string source_text_;
};

}  // namespace ltic
