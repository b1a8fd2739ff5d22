#include <stdexcept>

#include "ltic/analyzer.hpp"
#include "ltic/calculus.hpp"

namespace ltic {

using K = SignalExpr::Kind;

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::LTI: return "LTI";
    case Verdict::NotLinear: return "NotLinear";
    case Verdict::NotTimeInvariant: return "NotTimeInvariant";
    case Verdict::NotLinearAndNotTimeInvariant: return "NotLinearAndNotTimeInvariant";
  }
  return "?";
}

std::optional<Verdict> verdict_from_string(std::string_view s) {
  for (auto v : {Verdict::LTI, Verdict::NotLinear, Verdict::NotTimeInvariant,
                 Verdict::NotLinearAndNotTimeInvariant}) {
    if (s == to_string(v)) return v;
  }
  return std::nullopt;
}

const char* to_string(Defect::Kind k) {
  switch (k) {
    case Defect::Kind::AffineOffset: return "AffineOffset";
    case Defect::Kind::NonlinearTerm: return "NonlinearTerm";
    case Defect::Kind::TimeVaryingCoeff: return "TimeVaryingCoeff";
  }
  return "?";
}

namespace {

/// Classifies the signal-bearing factor of a term, ignoring its coefficient.
MonomialClass::Kind classify_signal_part(const SignalExpr& sig, int& order) {
  using MK = MonomialClass::Kind;
  switch (sig.kind()) {
    case K::Signal:
      order = 0;
      return sig.signal_ref().kind == SignalKind::X ? MK::LinearInX : MK::LinearInY;
    case K::Deriv:
    case K::Integ: {
      // Integrals of t-dependent terms and derivatives that could not be
      // pushed onto a signal wrap a whole term; classify it recursively.
      const MonomialClass inner = classify_term(sig.child());
      order = inner.order + (sig.kind() == K::Deriv ? sig.order() : -1);
      if (inner.kind == MK::LinearInX || inner.kind == MK::LinearInY) {
        return inner.coeff.contains_time() ? MK::TimeVaryingCoeff : inner.kind;
      }
      return inner.kind == MK::ConstantOffset ? MK::TimeVaryingCoeff : inner.kind;
    }
    default:
      return MK::NonlinearTerm;
  }
}

}  // namespace

MonomialClass classify_term(const SignalExpr& term) {
  using MK = MonomialClass::Kind;
  auto [coeff, sig] = split_term(term);
  MonomialClass out{MK::ConstantOffset, term, coeff, 0};
  if (!sig.contains_signal()) return out;
  out.kind = classify_signal_part(sig, out.order);
  if ((out.kind == MK::LinearInX || out.kind == MK::LinearInY) && coeff.contains_time()) {
    out.kind = MK::TimeVaryingCoeff;
  }
  return out;
}

namespace {

const SignalExpr kAlpha = SignalExpr::param("α");
const SignalExpr kBeta = SignalExpr::param("β");
const SignalExpr kDelta = SignalExpr::param("δ");

SignalExpr sig(SignalKind kind, int index = 0) { return SignalExpr::signal({kind, index, false}); }

/// S[xr, yr] as an unnormalized tree.
SignalExpr plug(const SignalExpr& rhs, const SignalExpr& xr, const SignalExpr& yr) {
  return map_signals(rhs, [&](const SignalRef& ref) {
    if (ref == SignalRef::x()) return xr;
    if (ref == SignalRef::y()) return yr;
    return SignalExpr::signal(ref);
  });
}

SignalExpr shifted(const SignalExpr& e) {
  return map_signals(e, [](SignalRef ref) {
    ref.shifted = true;
    return SignalExpr::signal(ref);
  });
}

void require_equal(const SignalExpr& a, const SignalExpr& b, const char* step) {
  if (!expr_equal(a, b)) {
    throw std::logic_error(std::string("derivation step '") + step + "' does not hold: " +
                           to_string(a) + " vs " + to_string(b));
  }
}

std::vector<DerivationStep> lti_derivation(const SystemDef& sys) {
  using SK = SignalKind;
  const SignalExpr& s = sys.rhs();
  const bool fb = sys.has_feedback();
  std::vector<DerivationStep> trace;

  // Superposition: S[αx1 + βx2, αy1 + βy2] = αy1 + βy2.
  const SignalExpr y1 = fb ? sig(SK::Y, 1) : sig(SK::Y);
  const SignalExpr y2 = fb ? sig(SK::Y, 2) : sig(SK::Y);
  const SignalExpr combined = plug(s, kAlpha * sig(SK::X, 1) + kBeta * sig(SK::X, 2),
                                   kAlpha * y1 + kBeta * y2);
  trace.push_back({"substitute inputs α·x1 + β·x2" + std::string(fb ? " and outputs α·y1 + β·y2" : ""),
                   s, combined});
  const SignalExpr expanded = normalize(combined);
  trace.push_back({"expand by linearity of products, D and I", combined, expanded});
  const SignalExpr s1 = normalize(plug(s, sig(SK::X, 1), y1));
  const SignalExpr s2 = normalize(plug(s, sig(SK::X, 2), y2));
  const SignalExpr regrouped = kAlpha * s1 + kBeta * s2;
  require_equal(expanded, regrouped, "regroup");
  trace.push_back({"regroup as α·S[x1] + β·S[x2]", expanded, regrouped});
  const SignalExpr superposed = kAlpha * sig(SK::Y, 1) + kBeta * sig(SK::Y, 2);
  trace.push_back({"apply hypotheses S[x1] = y1, S[x2] = y2", regrouped, superposed});

  // Corollary of superposition: zero maps to zero.
  const SignalExpr zero_in = plug(s, SignalExpr(), SignalExpr());
  require_equal(zero_in, SignalExpr(), "zero input");
  trace.push_back({"zero input gives zero output", zero_in, normalize(zero_in)});

  // Shift invariance: S[x(t+δ), y(t+δ)] = S[x, y](t+δ) = y(t+δ).
  const SignalExpr shifted_inputs = normalize(shifted(s));
  trace.push_back({"substitute shifted signals x(t+δ)" + std::string(fb ? ", y(t+δ)" : ""), s,
                   shifted_inputs});
  const SignalExpr later = substitute_time(shifted(s), SignalExpr::time() + kDelta);
  require_equal(shifted_inputs, later, "shift");
  trace.push_back({"time invariance: equal to S[x, y] evaluated at t+δ", shifted_inputs, later});
  trace.push_back({"apply hypothesis S[x, y] = y at time t+δ", later,
                   SignalExpr::signal({SK::Y, 0, true})});
  return trace;
}

}  // namespace

LinearityReport classify(const SystemDef& sys) {
  using MK = MonomialClass::Kind;
  LinearityReport report;
  bool nonlinear = false;
  bool time_varying = false;
  for (const auto& term : terms_of(sys.rhs())) {
    const MonomialClass mc = classify_term(term);
    switch (mc.kind) {
      case MK::ConstantOffset:
        report.defects.push_back({Defect::Kind::AffineOffset, term});
        nonlinear = true;
        if (term.contains_time()) {
          report.defects.push_back({Defect::Kind::TimeVaryingCoeff, term});
          time_varying = true;
        }
        break;
      case MK::NonlinearTerm:
        report.defects.push_back({Defect::Kind::NonlinearTerm, term});
        nonlinear = true;
        break;
      case MK::TimeVaryingCoeff:
        report.defects.push_back({Defect::Kind::TimeVaryingCoeff, term});
        time_varying = true;
        break;
      default:
        break;
    }
  }
  if (nonlinear && time_varying) {
    report.verdict = Verdict::NotLinearAndNotTimeInvariant;
  } else if (nonlinear) {
    report.verdict = Verdict::NotLinear;
  } else if (time_varying) {
    report.verdict = Verdict::NotTimeInvariant;
  }
  if (report.verdict == Verdict::LTI) {
    report.proof_trace = lti_derivation(sys);
  } else {
    report.witness = find_counterexample(sys, report);
  }
  return report;
}

}  // namespace ltic
