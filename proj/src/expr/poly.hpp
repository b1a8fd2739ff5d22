#pragma once

// Internal sum-of-products representation behind normalize().

#include <map>
#include <optional>
#include <vector>

#include "ltic/expr.hpp"

namespace ltic::detail {

struct Factor {
  SignalExpr atom;
  int exp = 1;
};

/// Factors sorted by `compare` on the atom, exponents nonzero, atoms unique.
using Monomial = std::vector<Factor>;

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// True when the atom neither depends on t nor on any signal.
bool is_constant_atom(const SignalExpr& atom);

class Poly {
 public:
  using Terms = std::map<Monomial, Rational, MonomialLess>;

  Poly() = default;
  static Poly constant(const Rational& c);
  static Poly atom(const SignalExpr& atom, int exp = 1);
  /// c * m, expanding reciprocal atoms that end up with negative exponents.
  static Poly monomial(const Rational& c, const Monomial& m);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::optional<Rational> as_constant() const;

  Poly& operator+=(const Poly& other);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Rational& c) const;
  friend bool operator==(const Poly& a, const Poly& b);

  SignalExpr to_expr() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  Terms terms_;
};

Poly to_poly(const SignalExpr& e);

/// d/dt; throws UnsupportedDifferentiation.
Poly derivative(const Poly& p);

/// Expression for c * m in canonical factor order.
SignalExpr term_expr(const Rational& c, const Monomial& m);

}  // namespace ltic::detail
