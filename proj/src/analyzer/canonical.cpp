#include <algorithm>

#include "ltic/analyzer.hpp"
#include "ltic/calculus.hpp"
#include "ltic/errors.hpp"

namespace ltic {

namespace {

using K = SignalExpr::Kind;
using MK = MonomialClass::Kind;

int integral_depth(const SignalExpr& e) {
  int inner = 0;
  for (const auto& ch : e.children()) inner = std::max(inner, integral_depth(ch));
  return inner + (e.kind() == K::Integ ? 1 : 0);
}

void add_at(std::vector<SignalExpr>& v, int index, const SignalExpr& value) {
  if (static_cast<int>(v.size()) <= index) v.resize(index + 1);
  v[index] = v[index] + value;
}

struct Collected {
  std::vector<SignalExpr> a;
  std::vector<SignalExpr> b;
  SignalExpr offset;
};

/// Collects y - rhs, differentiated until no integral remains, by signal and
/// order. Throws NotLTI on a term that is neither linear nor a t-free offset.
Collected collect(const SystemDef& sys, bool allow_offset) {
  const int depth = integral_depth(sys.rhs());
  SignalExpr eq = normalize(SignalExpr::y() - sys.rhs());
  Collected out;
  for (const auto& term : terms_of(eq)) {
    const MonomialClass mc = classify_term(term);
    if (mc.kind == MK::ConstantOffset && allow_offset && !mc.term.contains_time()) {
      if (depth > 0) {
        throw AnalysisError(AnalysisErrc::NotAffine,
                            "a constant offset cannot be kept when integrals are differentiated away");
      }
      out.offset = out.offset - term;
    } else if (mc.kind != MK::LinearInX && mc.kind != MK::LinearInY) {
      throw AnalysisError(allow_offset ? AnalysisErrc::NotAffine : AnalysisErrc::NotLTI,
                          "term " + to_string(term) + " is not linear with a constant coefficient");
    }
  }
  for (int i = 0; i < depth; ++i) eq = differentiate(eq);
  for (const auto& term : terms_of(eq)) {
    const MonomialClass mc = classify_term(term);
    if (mc.kind == MK::LinearInY) {
      add_at(out.a, mc.order, mc.coeff);
    } else if (mc.kind == MK::LinearInX) {
      add_at(out.b, mc.order, -mc.coeff);
    }
  }
  out.offset = normalize(out.offset);
  return out;
}

AffineForm finish(Collected c, const std::string& source) {
  for (auto& e : c.a) e = normalize(e);
  for (auto& e : c.b) e = normalize(e);
  while (!c.a.empty() && c.a.back().is_zero()) c.a.pop_back();
  if (c.a.empty()) {
    throw AnalysisError(AnalysisErrc::DegenerateEquation,
                        "every output coefficient cancels in " + source);
  }
  while (c.b.size() > 1 && c.b.back().is_zero()) c.b.pop_back();
  if (c.b.empty()) c.b.emplace_back();
  const SignalExpr lead = c.a.back();
  AffineForm out;
  for (const auto& e : c.a) out.form.a.push_back(divide(e, lead));
  for (const auto& e : c.b) out.form.b.push_back(divide(e, lead));
  out.offset = divide(c.offset, lead);
  return out;
}

}  // namespace

CanonicalForm canonicalize(const SystemDef& sys) {
  return finish(collect(sys, false), to_string(sys.rhs())).form;
}

AffineForm canonicalize_affine(const SystemDef& sys) {
  return finish(collect(sys, true), to_string(sys.rhs()));
}

SystemDef to_system(const CanonicalForm& cf) {
  SignalExpr lhs;
  for (int i = 0; i <= cf.n(); ++i) {
    const SignalExpr yi = i == 0 ? SignalExpr::y() : SignalExpr::deriv(SignalExpr::y(), i);
    lhs = lhs + cf.a[i] * yi;
  }
  for (int j = 0; j <= cf.m(); ++j) {
    const SignalExpr xj = j == 0 ? SignalExpr::x() : SignalExpr::deriv(SignalExpr::x(), j);
    lhs = lhs - cf.b[j] * xj;
  }
  return SystemDef(SignalExpr::y() - lhs);
}

bool check_equivalence(const SystemDef& s1, const SystemDef& s2) {
  const CanonicalForm c1 = canonicalize(s1);
  const CanonicalForm c2 = canonicalize(s2);
  if (c1.a.size() != c2.a.size() || c1.b.size() != c2.b.size()) return false;
  for (std::size_t i = 0; i < c1.a.size(); ++i) {
    if (!expr_equal(c1.a[i], c2.a[i])) return false;
  }
  for (std::size_t j = 0; j < c1.b.size(); ++j) {
    if (!expr_equal(c1.b[j], c2.b[j])) return false;
  }
  return true;
}

SystemDef unroll_zero_order(const SystemDef& sys) {
  SignalExpr c;
  SignalExpr rest;
  for (const auto& term : terms_of(sys.rhs())) {
    if (!mentions(term, SignalKind::Y)) {
      rest = rest + term;
      continue;
    }
    auto [coeff, part] = split_term(term);
    if (part != SignalExpr::y()) {
      throw AnalysisError(AnalysisErrc::NotZeroOrder,
                          "y appears as " + to_string(part) + ", not as a plain zero-order term");
    }
    c = c + coeff;
  }
  const SignalExpr den = normalize(SignalExpr::constant(1) - c);
  if (den.is_zero()) {
    throw AnalysisError(AnalysisErrc::SingularUnroll, "the coefficient of y is exactly 1");
  }
  return SystemDef(divide(rest, den));
}

}  // namespace ltic
