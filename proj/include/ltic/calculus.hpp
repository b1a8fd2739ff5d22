#pragma once

#include <functional>
#include <set>
#include <string>

#include "ltic/expr.hpp"

namespace ltic {

/// Flattened sum-of-products form: constants folded, like terms combined,
/// sq() expanded, derivatives pushed onto signal atoms, t-free factors pulled
/// out of integrals, and terms in the deterministic order of `compare`.
/// Idempotent. Throws DivisionByZero for a reciprocal of zero.
SignalExpr normalize(const SignalExpr& e);

/// Time derivative of `e`, normalized. Throws UnsupportedDifferentiation when
/// a sin/exp/abs application or reciprocal depends on a signal or on t.
SignalExpr differentiate(const SignalExpr& e);

/// Replaces every occurrence of `target` with `replacement` and normalizes.
SignalExpr substitute(const SignalExpr& e, const SignalRef& target, const SignalExpr& replacement);

/// Replaces the time variable t and normalizes.
SignalExpr substitute_time(const SignalExpr& e, const SignalExpr& replacement);

/// Replaces the named parameter and normalizes.
SignalExpr substitute_param(const SignalExpr& e, const std::string& name,
                            const SignalExpr& replacement);

/// Rewrites every signal leaf through `fn`; the result is not normalized.
SignalExpr map_signals(const SignalExpr& e,
                       const std::function<SignalExpr(const SignalRef&)>& fn);

/// Structural equality after normalization.
bool expr_equal(const SignalExpr& a, const SignalExpr& b);

std::set<std::string> parameters(const SignalExpr& e);
bool mentions(const SignalExpr& e, SignalKind kind);

/// Exact quotient num/den. Proportional operands give a rational; a single-term
/// denominator is inverted factorwise; anything else keeps a formal
/// reciprocal of the (monic) denominator. Throws DivisionByZero for den = 0.
SignalExpr divide(const SignalExpr& num, const SignalExpr& den);

/// Additive terms of a normalized expression (empty for 0).
std::vector<SignalExpr> terms_of(const SignalExpr& normalized);

/// Splits a normalized term into its signal-free coefficient and the product of
/// its signal-bearing factors (1 when there are none).
std::pair<SignalExpr, SignalExpr> split_term(const SignalExpr& normalized_term);

}  // namespace ltic
