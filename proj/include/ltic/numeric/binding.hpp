#pragma once

#include <limits>
#include <map>
#include <string>
#include <string_view>

#include "ltic/expr.hpp"

namespace ltic {

/// Working precision of the numeric engine.
using Real = long double;

/// Shortest round-trippable-enough rendering, 12 significant digits.
std::string format_real(Real v);

/// Concrete values for the named parameters of a system.
class ParameterBinding {
 public:
  ParameterBinding() = default;

  /// Parses "a=-1,b=2". Throws NumericError(InvalidBinding) on malformed text.
  static ParameterBinding parse(std::string_view text);

  /// Reads `name=value` lines; blank lines and `#` comments are skipped.
  static ParameterBinding parse_file_text(std::string_view text);

  void set(const std::string& name, Real value) { values_[name] = value; }
  /// Later entries override earlier ones.
  void merge(const ParameterBinding& other);
  bool contains(const std::string& name) const { return values_.count(name) != 0; }
  Real at(const std::string& name) const;
  const std::map<std::string, Real>& values() const { return values_; }

  /// Throws MissingBinding for a parameter of `e` without a value.
  void require_covers(const SignalExpr& e) const;
  /// Throws UnknownParameter for a bound name that `e` does not mention.
  void require_known(const SignalExpr& e) const;

 private:
  std::map<std::string, Real> values_;
};

/// Values of t and x for pointwise evaluation; NaN marks "not available".
struct PointContext {
  Real t = std::numeric_limits<Real>::quiet_NaN();
  Real x = std::numeric_limits<Real>::quiet_NaN();
};

/// Evaluates a memoryless expression. Throws MissingBinding, SingularDenominator
/// (|den| <= 1e-12) and Unsupported for D, I, y, or t/x without a value.
Real evaluate(const SignalExpr& e, const ParameterBinding& binding, const PointContext& at = {});

}  // namespace ltic
