#include <functional>

#include "ltic/analyzer.hpp"
#include "ltic/calculus.hpp"
#include "ltic/errors.hpp"

namespace ltic {

const char* to_string(Witness::Kind k) {
  switch (k) {
    case Witness::Kind::Superposition: return "Superposition";
    case Witness::Kind::Shift: return "Shift";
    case Witness::Kind::ZeroInZeroOut: return "ZeroInZeroOut";
  }
  return "?";
}

namespace {

using SK = SignalKind;
using WK = Witness::Kind;

const SignalExpr kAlpha = SignalExpr::param("α");
const SignalExpr kBeta = SignalExpr::param("β");
const SignalExpr kDelta = SignalExpr::param("δ");

SignalExpr c(long v) { return SignalExpr::constant(v); }
SignalExpr sig(SK kind, int index = 0, bool shifted = false) {
  return SignalExpr::signal({kind, index, shifted});
}

/// S[xr, yr], normalized.
SignalExpr plug(const SignalExpr& rhs, const SignalExpr& xr, const SignalExpr& yr) {
  return normalize(map_signals(rhs, [&](const SignalRef& ref) {
    if (ref == SignalRef::x()) return xr;
    if (ref == SignalRef::y()) return yr;
    return SignalExpr::signal(ref);
  }));
}

/// Both sides must differ symbolically and after binding α, β, δ to the
/// witness instance.
bool differs(const Witness& w) {
  if (expr_equal(w.lhs, w.rhs)) return false;
  auto inst = [&](SignalExpr e) {
    e = substitute_param(e, "α", SignalExpr::constant(w.alpha));
    e = substitute_param(e, "β", SignalExpr::constant(w.beta));
    return substitute_param(e, "δ", SignalExpr::constant(w.delta));
  };
  return !expr_equal(inst(w.lhs), inst(w.rhs));
}

struct Template {
  const char* name;
  std::function<std::optional<Witness>(const SystemDef&)> build;
};

std::string const_desc(long v) { return "const:c=" + std::to_string(v); }

Witness additivity(const SystemDef& sys, long v1, long v2) {
  const SignalExpr& s = sys.rhs();
  const bool fb = sys.has_feedback();
  const SignalExpr y1 = fb ? sig(SK::Y, 1) : SignalExpr();
  const SignalExpr y2 = fb ? sig(SK::Y, 2) : SignalExpr();
  Witness w;
  w.kind = WK::Superposition;
  w.x1 = const_desc(v1);
  w.x2 = const_desc(v2);
  w.beta = 1;
  w.lhs = plug(s, c(v1 + v2), y1 + y2);
  w.rhs = normalize(plug(s, c(v1), y1) + plug(s, c(v2), y2));
  return w;
}

Witness homogeneity(const SystemDef& sys, long alpha) {
  const SignalExpr& s = sys.rhs();
  const SignalExpr y = sys.has_feedback() ? sig(SK::Y, 1) : SignalExpr();
  Witness w;
  w.kind = WK::Superposition;
  w.x1 = const_desc(1);
  w.x2 = "zero";
  w.alpha = alpha;
  w.lhs = plug(s, c(alpha), c(alpha) * y);
  w.rhs = normalize(c(alpha) * plug(s, c(1), y));
  return w;
}

/// α·S[x, y] against S[αx, αy] with α symbolic; instance α = 2.
Witness scaling_symbolic(const SystemDef& sys) {
  const SignalExpr& s = sys.rhs();
  Witness w;
  w.kind = WK::Superposition;
  w.x1 = "x";
  w.x2 = "zero";
  w.alpha = 2;
  w.lhs = normalize(kAlpha * s);
  w.rhs = plug(s, kAlpha * sig(SK::X), kAlpha * sig(SK::Y));
  return w;
}

/// S[αx1 + βx2, αy1 + βy2] against α·S[x1, y1] + β·S[x2, y2]; instance (2, -3).
Witness additivity_symbolic(const SystemDef& sys) {
  const SignalExpr& s = sys.rhs();
  Witness w;
  w.kind = WK::Superposition;
  w.x1 = "x";
  w.x2 = "x";
  w.alpha = 2;
  w.beta = -3;
  w.lhs = plug(s, kAlpha * sig(SK::X, 1) + kBeta * sig(SK::X, 2),
               kAlpha * sig(SK::Y, 1) + kBeta * sig(SK::Y, 2));
  w.rhs = normalize(kAlpha * plug(s, sig(SK::X, 1), sig(SK::Y, 1)) +
                    kBeta * plug(s, sig(SK::X, 2), sig(SK::Y, 2)));
  return w;
}

Witness zero_in(const SystemDef& sys) {
  Witness w;
  w.kind = WK::ZeroInZeroOut;
  w.x1 = "zero";
  w.x2 = "zero";
  w.lhs = plug(sys.rhs(), SignalExpr(), SignalExpr());
  w.rhs = SignalExpr();
  return w;
}

/// S[x(t+δ), y(t+δ)] against y(t+δ) = S[x, y] evaluated at t+δ, for x ≡ 1 and δ = 1.
std::optional<Witness> shift_unit(const SystemDef& sys) {
  const SignalExpr& s = sys.rhs();
  for (const auto& term : terms_of(s)) {
    if (classify_term(term).order < 0) return std::nullopt;
  }
  const SignalExpr yd = sys.has_feedback() ? sig(SK::Y, 0, true) : SignalExpr();
  Witness w;
  w.kind = WK::Shift;
  w.x1 = const_desc(1);
  w.x2 = "zero";
  w.delta = 1;
  w.lhs = plug(s, c(1), yd);
  w.rhs = substitute_time(plug(s, c(1), yd), SignalExpr::time() + c(1));
  return w;
}

/// The same comparison for an arbitrary input and symbolic δ; instance δ = 1.
Witness shift_symbolic(const SystemDef& sys) {
  const SignalExpr& s = sys.rhs();
  const SignalExpr moved = map_signals(s, [](SignalRef ref) {
    ref.shifted = true;
    return SignalExpr::signal(ref);
  });
  Witness w;
  w.kind = WK::Shift;
  w.x1 = "x";
  w.x2 = "zero";
  w.delta = 1;
  w.lhs = normalize(moved);
  w.rhs = substitute_time(moved, SignalExpr::time() + kDelta);
  return w;
}

}  // namespace

Witness find_counterexample(const SystemDef& sys, const LinearityReport& report) {
  bool affine = false;
  bool nonlinear = false;
  for (const auto& d : report.defects) {
    affine |= d.kind == Defect::Kind::AffineOffset;
    nonlinear |= d.kind == Defect::Kind::NonlinearTerm;
  }
  const Template add34{"additivity 3+4", [](const SystemDef& s) -> std::optional<Witness> {
                         return additivity(s, 3, 4);
                       }};
  const Template hom2{"homogeneity 2", [](const SystemDef& s) -> std::optional<Witness> {
                        return homogeneity(s, 2);
                      }};
  const Template homneg{"homogeneity -1", [](const SystemDef& s) -> std::optional<Witness> {
                          return homogeneity(s, -1);
                        }};
  const Template scale_sym{"symbolic scaling", [](const SystemDef& s) -> std::optional<Witness> {
                             return scaling_symbolic(s);
                           }};
  const Template add_sym{"symbolic additivity", [](const SystemDef& s) -> std::optional<Witness> {
                           return additivity_symbolic(s);
                         }};
  const Template zero{"zero input", [](const SystemDef& s) -> std::optional<Witness> {
                        return zero_in(s);
                      }};
  const Template shift1{"unit shift", shift_unit};
  const Template shift_sym{"symbolic shift", [](const SystemDef& s) -> std::optional<Witness> {
                             return shift_symbolic(s);
                           }};

  std::vector<Template> order;
  if (affine && !sys.has_feedback()) {
    order = {add34, scale_sym, zero, hom2, add_sym};
  } else if (affine) {
    order = {scale_sym, add34, zero, hom2, add_sym};
  } else if (nonlinear) {
    order = {hom2, homneg, scale_sym, add_sym, add34};
  } else {
    order = {shift1, shift_sym};
  }
  for (const auto& t : {add34, hom2, homneg, scale_sym, add_sym, zero, shift1, shift_sym}) {
    order.push_back(t);
  }
  for (const auto& t : order) {
    std::optional<Witness> w = t.build(sys);
    if (w && differs(*w)) return *w;
  }
  throw AnalysisError(AnalysisErrc::WitnessSearchFailed,
                      "no witness template separates the sides of " + to_string(sys.rhs()));
}

}  // namespace ltic
