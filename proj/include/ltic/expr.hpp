#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ltic/rational.hpp"

namespace ltic {

/// y sorts before x so that normalized sums read output-first.
enum class SignalKind { Y, X };

/// A reference to one signal. The plain input/output are x and y; indexed
/// copies (x1, y2, ...) and time-shifted copies only appear inside
/// derivations built by the analyzer.
struct SignalRef {
  SignalKind kind = SignalKind::X;
  int index = 0;
  bool shifted = false;

  static SignalRef x(int index = 0) { return {SignalKind::X, index, false}; }
  static SignalRef y(int index = 0) { return {SignalKind::Y, index, false}; }

  friend auto operator<=>(const SignalRef&, const SignalRef&) = default;
};

enum class Func { Sin, Exp, Abs, Sq };

const char* to_string(Func f);
std::optional<Func> func_from_name(std::string_view name);

/// Immutable symbolic expression over x, y, t and named parameters.
///
/// Nodes are shared and never mutated, so copies are cheap and values can be
/// handed between threads freely. Equality is structural; use `expr_equal`
/// for equality modulo normalization.
class SignalExpr {
 public:
  enum class Kind { Const, Param, Time, Signal, Deriv, Integ, Recip, Apply, Sum, Product };

  /// The constant zero.
  SignalExpr();

  static SignalExpr constant(Rational value);
  static SignalExpr constant(long value) { return constant(Rational(value)); }
  static SignalExpr param(std::string name);
  static SignalExpr time();
  static SignalExpr signal(SignalRef ref);
  static SignalExpr x() { return signal(SignalRef::x()); }
  static SignalExpr y() { return signal(SignalRef::y()); }
  /// Throws std::invalid_argument unless order >= 1.
  static SignalExpr deriv(SignalExpr child, int order);
  /// Definite integral from 0 to t.
  static SignalExpr integ(SignalExpr child);
  static SignalExpr recip(SignalExpr child);
  static SignalExpr apply(Func f, SignalExpr child);
  /// An empty sum is 0 and a singleton collapses to its element.
  static SignalExpr sum(std::vector<SignalExpr> terms);
  /// An empty product is 1 and a singleton collapses to its element.
  static SignalExpr product(std::vector<SignalExpr> factors);

  Kind kind() const;
  const Rational& value() const;
  const std::string& name() const;
  const SignalRef& signal_ref() const;
  int order() const;
  Func func() const;
  std::span<const SignalExpr> children() const;
  /// The operand of Deriv, Integ, Recip and Apply.
  const SignalExpr& child() const;

  bool is_zero() const;
  bool is_const() const { return kind() == Kind::Const; }
  bool contains_signal() const;
  bool contains_time() const;

  friend bool operator==(const SignalExpr& a, const SignalExpr& b);

 private:
  struct Node;
  explicit SignalExpr(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

/// Total structural order. Signal-free nodes sort first; signal-bearing nodes
/// sort y before x and by descending derivative order (integrals count as
/// negative orders). Normalized products and sums are kept in this order.
std::strong_ordering compare(const SignalExpr& a, const SignalExpr& b);

/// Derivative order of the leading signal inside `e` (integrals count -1).
int signal_order(const SignalExpr& e);

SignalExpr operator+(const SignalExpr& a, const SignalExpr& b);
SignalExpr operator-(const SignalExpr& a, const SignalExpr& b);
SignalExpr operator-(const SignalExpr& a);
SignalExpr operator*(const SignalExpr& a, const SignalExpr& b);
SignalExpr operator/(const SignalExpr& a, const SignalExpr& b);

/// DSL text for `e`. With `spaced`, the outermost sum is joined by " + " and
/// " - "; nested sums are always printed tight ("1-a").
std::string to_string(const SignalExpr& e, bool spaced = false);

}  // namespace ltic
