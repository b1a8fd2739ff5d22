#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ltic/system.hpp"

namespace ltic {

enum class Verdict { LTI, NotLinear, NotTimeInvariant, NotLinearAndNotTimeInvariant };

const char* to_string(Verdict v);
std::optional<Verdict> verdict_from_string(std::string_view s);

/// Classification of one additive term of a normalized right-hand side.
struct MonomialClass {
  enum class Kind { ConstantOffset, LinearInX, LinearInY, TimeVaryingCoeff, NonlinearTerm };

  Kind kind;
  SignalExpr term;
  /// Signal-free factor of the term.
  SignalExpr coeff;
  /// Derivative order of the signal atom; each integral counts -1.
  int order = 0;
};

MonomialClass classify_term(const SignalExpr& normalized_term);

struct Defect {
  enum class Kind { AffineOffset, NonlinearTerm, TimeVaryingCoeff };
  Kind kind;
  SignalExpr term;
};

const char* to_string(Defect::Kind k);

/// One rewriting step of a proof that a system is LTI.
struct DerivationStep {
  std::string rule;
  SignalExpr before;
  SignalExpr after;
};

/// A concrete configuration violating superposition, shift invariance or
/// zero-in/zero-out. `lhs` and `rhs` are the two sides of the violated
/// identity; they may mention the symbolic scalars α, β, δ, in which case
/// `alpha`, `beta`, `delta` hold the numeric instance that also violates it.
struct Witness {
  enum class Kind { Superposition, Shift, ZeroInZeroOut };

  Kind kind = Kind::Superposition;
  /// Test signal descriptors: "const:c=3", "zero", or "x" for an arbitrary input.
  std::string x1;
  std::string x2;
  Rational alpha = 1;
  Rational beta = 0;
  Rational delta = 0;
  SignalExpr lhs;
  SignalExpr rhs;
};

const char* to_string(Witness::Kind k);

struct LinearityReport {
  Verdict verdict = Verdict::LTI;
  std::vector<Defect> defects;
  std::vector<DerivationStep> proof_trace;
  std::optional<Witness> witness;
};

/// Structural decision: LTI iff every term is linear in one signal atom with a
/// t-free coefficient. LTI reports carry a superposition and shift derivation;
/// every other report carries a witness.
LinearityReport classify(const SystemDef& sys);

/// Builds a witness for a non-LTI report from fixed templates. Throws
/// AnalysisError(WitnessSearchFailed) when none applies.
Witness find_counterexample(const SystemDef& sys, const LinearityReport& report);

/// Solves y = c*y + rest for y. Throws AnalysisError(NotZeroOrder) when y
/// appears other than linearly at order zero, and SingularUnroll when c = 1.
SystemDef unroll_zero_order(const SystemDef& sys);

/// sum_i a[i] y^(i) = sum_j b[j] x^(j), divided through so that a.back() = 1.
struct CanonicalForm {
  std::vector<SignalExpr> a;
  std::vector<SignalExpr> b;

  int n() const { return static_cast<int>(a.size()) - 1; }
  int m() const { return static_cast<int>(b.size()) - 1; }
};

/// A canonical form with a constant forcing term on the right-hand side:
/// sum_i a[i] y^(i) = sum_j b[j] x^(j) + offset.
struct AffineForm {
  CanonicalForm form;
  SignalExpr offset;
};

/// Differentiates away integrals and collects coefficients. Throws
/// AnalysisError(NotLTI) unless classify(sys) is LTI, and DegenerateEquation
/// when every output coefficient cancels (e.g. y = y).
CanonicalForm canonicalize(const SystemDef& sys);

/// Like canonicalize, but also admits a t-free constant offset. Offsets are
/// refused (NotAffine) when integrals are present, since differentiating them
/// away would drop the offset.
AffineForm canonicalize_affine(const SystemDef& sys);

/// The system y = y - (sum a_i y^(i) - sum b_j x^(j)).
SystemDef to_system(const CanonicalForm& cf);

/// Coefficientwise equality of canonical forms. Throws AnalysisError(NotLTI).
bool check_equivalence(const SystemDef& s1, const SystemDef& s2);

}  // namespace ltic
