#include "ltic/calculus.hpp"

#include "ltic/errors.hpp"
#include "poly.hpp"

namespace ltic {

using detail::Poly;
using detail::to_poly;
using K = SignalExpr::Kind;

SignalExpr normalize(const SignalExpr& e) { return to_poly(e).to_expr(); }

SignalExpr differentiate(const SignalExpr& e) {
  return detail::derivative(to_poly(e)).to_expr();
}

namespace {

SignalExpr rebuild(const SignalExpr& e, std::vector<SignalExpr> children) {
  switch (e.kind()) {
    case K::Deriv: return SignalExpr::deriv(std::move(children[0]), e.order());
    case K::Integ: return SignalExpr::integ(std::move(children[0]));
    case K::Recip: return SignalExpr::recip(std::move(children[0]));
    case K::Apply: return SignalExpr::apply(e.func(), std::move(children[0]));
    case K::Sum: return SignalExpr::sum(std::move(children));
    case K::Product: return SignalExpr::product(std::move(children));
    default: return e;
  }
}

/// Bottom-up rewrite of leaves; `leaf` returns nullopt to keep a leaf as is.
template <class Fn>
SignalExpr rewrite_leaves(const SignalExpr& e, const Fn& leaf) {
  if (e.children().empty()) {
    if (auto r = leaf(e)) return *r;
    return e;
  }
  std::vector<SignalExpr> children;
  children.reserve(e.children().size());
  for (const auto& c : e.children()) children.push_back(rewrite_leaves(c, leaf));
  return rebuild(e, std::move(children));
}

}  // namespace

SignalExpr map_signals(const SignalExpr& e,
                       const std::function<SignalExpr(const SignalRef&)>& fn) {
  return rewrite_leaves(e, [&](const SignalExpr& leaf) -> std::optional<SignalExpr> {
    if (leaf.kind() == K::Signal) return fn(leaf.signal_ref());
    return std::nullopt;
  });
}

SignalExpr substitute(const SignalExpr& e, const SignalRef& target,
                      const SignalExpr& replacement) {
  return normalize(map_signals(e, [&](const SignalRef& ref) {
    return ref == target ? replacement : SignalExpr::signal(ref);
  }));
}

SignalExpr substitute_time(const SignalExpr& e, const SignalExpr& replacement) {
  return normalize(rewrite_leaves(e, [&](const SignalExpr& leaf) -> std::optional<SignalExpr> {
    if (leaf.kind() == K::Time) return replacement;
    return std::nullopt;
  }));
}

SignalExpr substitute_param(const SignalExpr& e, const std::string& name,
                            const SignalExpr& replacement) {
  return normalize(rewrite_leaves(e, [&](const SignalExpr& leaf) -> std::optional<SignalExpr> {
    if (leaf.kind() == K::Param && leaf.name() == name) return replacement;
    return std::nullopt;
  }));
}

bool expr_equal(const SignalExpr& a, const SignalExpr& b) { return to_poly(a) == to_poly(b); }

namespace {

void collect_params(const SignalExpr& e, std::set<std::string>& out) {
  if (e.kind() == K::Param) out.insert(e.name());
  for (const auto& c : e.children()) collect_params(c, out);
}

}  // namespace

std::set<std::string> parameters(const SignalExpr& e) {
  std::set<std::string> out;
  collect_params(e, out);
  return out;
}

bool mentions(const SignalExpr& e, SignalKind kind) {
  if (!e.contains_signal()) return false;
  if (e.kind() == K::Signal) return e.signal_ref().kind == kind;
  for (const auto& c : e.children()) {
    if (mentions(c, kind)) return true;
  }
  return false;
}

SignalExpr divide(const SignalExpr& num, const SignalExpr& den) {
  const Poly pn = to_poly(num);
  const Poly pd = to_poly(den);
  if (pd.is_zero()) throw DivisionByZero("division by an expression that normalizes to 0");
  if (pn.is_zero()) return SignalExpr();
  if (pn.terms().size() == pd.terms().size()) {
    const Rational ratio = pn.terms().begin()->second / pd.terms().begin()->second;
    if (pd.scaled(ratio) == pn) return SignalExpr::constant(ratio);
  }
  return (pn * to_poly(SignalExpr::recip(pd.to_expr()))).to_expr();
}

std::vector<SignalExpr> terms_of(const SignalExpr& normalized) {
  if (normalized.is_zero()) return {};
  if (normalized.kind() == K::Sum) {
    return {normalized.children().begin(), normalized.children().end()};
  }
  return {normalized};
}

std::pair<SignalExpr, SignalExpr> split_term(const SignalExpr& term) {
  if (term.kind() != K::Product) {
    if (term.contains_signal()) return {SignalExpr::constant(1), term};
    return {term, SignalExpr::constant(1)};
  }
  std::vector<SignalExpr> coef, sig;
  for (const auto& f : term.children()) (f.contains_signal() ? sig : coef).push_back(f);
  return {SignalExpr::product(std::move(coef)), SignalExpr::product(std::move(sig))};
}

}  // namespace ltic
