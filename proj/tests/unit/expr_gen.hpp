#pragma once

// Random SignalExpr generator for property tests.

#include <random>

#include "ltic/expr.hpp"

namespace ltic::testing {

struct ExprGen {
  explicit ExprGen(unsigned seed) : rng(seed) {}

  std::mt19937 rng;
  bool allow_integrals = true;
  bool allow_nonlinear = true;

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

  SignalExpr leaf() {
    switch (pick(8)) {
      case 0: return SignalExpr::constant(Rational(pick(9) - 4, 1 + pick(3)));
      case 1: return SignalExpr::param(pick(2) ? "a" : "b");
      case 2: return SignalExpr::time();
      case 3: return SignalExpr::x();
      case 4: return SignalExpr::y();
      case 5: return SignalExpr::deriv(pick(2) ? SignalExpr::x() : SignalExpr::y(), 1 + pick(2));
      case 6:
        if (allow_integrals) return SignalExpr::integ(pick(2) ? SignalExpr::x() : SignalExpr::y());
        return SignalExpr::param("c");
      default: return SignalExpr::constant(1 + pick(3));
    }
  }

  SignalExpr operator()(int depth = 3) {
    if (depth == 0 || pick(4) == 0) return leaf();
    switch (pick(allow_nonlinear ? 7 : 5)) {
      case 0:
      case 1: {
        std::vector<SignalExpr> terms;
        for (int i = 0, n = 2 + pick(2); i < n; ++i) terms.push_back((*this)(depth - 1));
        return SignalExpr::sum(terms);
      }
      case 2:
      case 3: return (*this)(depth - 1) * (*this)(depth - 1);
      case 4:
        // 1 + a^2 never vanishes, so the reciprocal is always defined.
        return (*this)(depth - 1) /
               (SignalExpr::constant(1) + SignalExpr::param("a") * SignalExpr::param("a"));
      case 5: return SignalExpr::apply(Func::Sq, (*this)(depth - 1));
      default: return SignalExpr::apply(pick(2) ? Func::Sin : Func::Abs, (*this)(depth - 1));
    }
  }
};

}  // namespace ltic::testing
