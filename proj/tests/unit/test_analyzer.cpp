#include "doctest.h"

#include "expr_gen.hpp"
#include "ltic/analyzer.hpp"
#include "ltic/analyzer_json.hpp"
#include "ltic/calculus.hpp"
#include "ltic/errors.hpp"
#include "ltic/parser.hpp"

using namespace ltic;

namespace {

const SignalExpr a = SignalExpr::param("a");
const SignalExpr b = SignalExpr::param("b");
const SignalExpr x = SignalExpr::x();
const SignalExpr y = SignalExpr::y();
const SignalExpr alpha = SignalExpr::param("α");

SignalExpr c(long v) { return SignalExpr::constant(v); }
SignalExpr q(long p, long d) { return SignalExpr::constant(Rational(p, d)); }
SignalExpr D(const SignalExpr& e, int k) { return SignalExpr::deriv(e, k); }

Verdict verdict(const char* text) { return classify(parse_system(text)).verdict; }

bool same(const std::vector<SignalExpr>& got, const std::vector<SignalExpr>& want) {
  if (got.size() != want.size()) return false;
  for (std::size_t i = 0; i < got.size(); ++i) {
    if (!expr_equal(got[i], want[i])) return false;
  }
  return true;
}

AnalysisErrc analysis_code(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const AnalysisError& e) {
    return e.code();
  }
  FAIL("expected AnalysisError");
  return AnalysisErrc::NotLTI;
}

/// Random sum of constant-coefficient signal atoms, so always LTI.
SignalExpr random_lti(testing::ExprGen& g) {
  const SignalExpr atoms[] = {x, y, D(x, 1), D(y, 1), D(y, 2), SignalExpr::integ(x),
                              SignalExpr::integ(y), SignalExpr::integ(SignalExpr::integ(x))};
  SignalExpr out;
  const int n = 1 + g.pick(4);
  for (int i = 0; i < n; ++i) {
    SignalExpr coeff = q(g.pick(9) - 4, 1 + g.pick(3));
    if (g.pick(3) == 0) coeff = coeff * (g.pick(2) ? a : b);
    out = out + coeff * atoms[g.pick(8)];
  }
  return out;
}

}  // namespace

TEST_CASE("corpus systems classify as expected") {
  CHECK(verdict("y = a*x") == Verdict::LTI);
  CHECK(verdict("y = a*x + b") == Verdict::NotLinear);
  CHECK(verdict("y = a*y + b*x") == Verdict::LTI);
  CHECK(verdict("y = a*D[y,1] + b*x") == Verdict::LTI);
  CHECK(verdict("y = D[y,1] + x + a") == Verdict::NotLinear);
  CHECK(verdict("y = D[y,1] + I[y] + x") == Verdict::LTI);
  CHECK(verdict("y = -D[y,2] + D[y,1] - D[x,1]") == Verdict::LTI);
  CHECK(verdict("y = D[y,1] + I[x]") == Verdict::LTI);
  CHECK(verdict("y = t*x") == Verdict::NotTimeInvariant);
  CHECK(verdict("y = sq(x)") == Verdict::NotLinear);
}

TEST_CASE("other verdicts") {
  CHECK(verdict("y = 0") == Verdict::LTI);
  CHECK(verdict("y = t*x + 1") == Verdict::NotLinearAndNotTimeInvariant);
  CHECK(verdict("y = t") == Verdict::NotLinearAndNotTimeInvariant);
  CHECK(verdict("y = sin(x)") == Verdict::NotLinear);
  CHECK(verdict("y = abs(x)") == Verdict::NotLinear);
  CHECK(verdict("y = x*y") == Verdict::NotLinear);
  CHECK(verdict("y = x/(1+y)") == Verdict::NotLinear);
  CHECK(verdict("y = I[t*x]") == Verdict::NotTimeInvariant);
  CHECK(verdict("y = D[t*x,1]") == Verdict::NotTimeInvariant);
  CHECK(verdict("y = sin(a)*x + exp(b)*D[y,1]") == Verdict::LTI);
  CHECK(verdict("y = x/(1-a)") == Verdict::LTI);
  CHECK(verdict("y = D[sin(x),1]") == Verdict::NotLinear);
}

TEST_CASE("defects name the offending terms") {
  const auto affine = classify(parse_system("y = a*x + b"));
  REQUIRE(affine.defects.size() == 1);
  CHECK(affine.defects[0].kind == Defect::Kind::AffineOffset);
  CHECK(affine.defects[0].term == b);

  const auto tv = classify(parse_system("y = t*x"));
  REQUIRE(tv.defects.size() == 1);
  CHECK(tv.defects[0].kind == Defect::Kind::TimeVaryingCoeff);

  const auto sq = classify(parse_system("y = sq(x) + x"));
  REQUIRE(sq.defects.size() == 1);
  CHECK(sq.defects[0].kind == Defect::Kind::NonlinearTerm);
  CHECK(expr_equal(sq.defects[0].term, x * x));
}

TEST_CASE("monomial classification") {
  CHECK(classify_term(normalize(a * D(y, 2))).kind == MonomialClass::Kind::LinearInY);
  CHECK(classify_term(normalize(a * D(y, 2))).order == 2);
  CHECK(classify_term(normalize(SignalExpr::integ(SignalExpr::integ(x)))).order == -2);
  CHECK(classify_term(normalize(b * x)).coeff == b);
  CHECK(classify_term(normalize(a * b)).kind == MonomialClass::Kind::ConstantOffset);
  CHECK(classify_term(normalize(SignalExpr::time() * y)).kind ==
        MonomialClass::Kind::TimeVaryingCoeff);
  CHECK(classify_term(normalize(x * x)).kind == MonomialClass::Kind::NonlinearTerm);
}

TEST_CASE("affine witness reproduces 7a+b vs 7a+2b") {
  const auto report = classify(parse_system("y = a*x + b"));
  REQUIRE(report.witness);
  const Witness& w = *report.witness;
  CHECK(w.kind == Witness::Kind::Superposition);
  CHECK(w.x1 == "const:c=3");
  CHECK(w.x2 == "const:c=4");
  CHECK(w.alpha == 1);
  CHECK(w.beta == 1);
  CHECK(w.lhs == normalize(c(7) * a + b));
  CHECK(w.rhs == normalize(c(7) * a + c(2) * b));
  CHECK(to_string(w.lhs, true) == "7*a + b");
  CHECK(to_string(w.rhs, true) == "7*a + 2*b");
}

TEST_CASE("feedback affine witness uses symbolic scaling") {
  const auto report = classify(parse_system("y = D[y,1] + x + a"));
  REQUIRE(report.witness);
  const Witness& w = *report.witness;
  CHECK(w.kind == Witness::Kind::Superposition);
  CHECK(expr_equal(w.lhs, alpha * (D(y, 1) + x + a)));
  CHECK(expr_equal(w.rhs, alpha * D(y, 1) + alpha * x + a));
}

TEST_CASE("nonlinear and time-varying witnesses") {
  const auto sq = classify(parse_system("y = sq(x)")).witness;
  REQUIRE(sq);
  CHECK(sq->alpha == 2);
  CHECK(sq->x1 == "const:c=1");
  CHECK(sq->lhs == c(4));
  CHECK(sq->rhs == c(2));

  const auto abs = classify(parse_system("y = abs(x)")).witness;
  REQUIRE(abs);
  CHECK(abs->alpha == -1);

  const auto tv = classify(parse_system("y = t*x")).witness;
  REQUIRE(tv);
  CHECK(tv->kind == Witness::Kind::Shift);
  CHECK(tv->delta == 1);
  CHECK(tv->x1 == "const:c=1");
  CHECK(tv->lhs == SignalExpr::time());
  CHECK(tv->rhs == normalize(SignalExpr::time() + c(1)));

  const auto integ = classify(parse_system("y = I[t*x]")).witness;
  REQUIRE(integ);
  CHECK(integ->kind == Witness::Kind::Shift);
}

TEST_CASE("LTI reports carry a proof trace ending in the shifted output") {
  for (const char* text : {"y = a*x", "y = a*D[y,1] + b*x", "y = D[y,1] + I[y] + x", "y = 0"}) {
    const auto report = classify(parse_system(text));
    CHECK(report.defects.empty());
    CHECK_FALSE(report.witness);
    REQUIRE(report.proof_trace.size() == 8);
    CHECK(report.proof_trace[3].after ==
          normalize(alpha * SignalExpr::signal({SignalKind::Y, 1, false}) +
                    SignalExpr::param("β") * SignalExpr::signal({SignalKind::Y, 2, false})));
    CHECK(report.proof_trace.back().after == SignalExpr::signal({SignalKind::Y, 0, true}));
  }
}

TEST_CASE("unroll zero-order feedback") {
  CHECK(format_system(unroll_zero_order(parse_system("y = 0.5*y + x"))) == "y = 2*x");
  const auto sym = unroll_zero_order(parse_system("y = a*y + b*x"));
  CHECK(format_system(sym) == "y = (b/(1-a))*x");
  CHECK(expr_equal(sym.rhs(), divide(b * x, c(1) - a)));
  CHECK_FALSE(sym.has_feedback());
  CHECK(format_system(unroll_zero_order(parse_system("y = a*x"))) == "y = a*x");
  CHECK(analysis_code([] { unroll_zero_order(parse_system("y = a*D[y,1] + b*x")); }) ==
        AnalysisErrc::NotZeroOrder);
  CHECK(analysis_code([] { unroll_zero_order(parse_system("y = I[y] + x")); }) ==
        AnalysisErrc::NotZeroOrder);
  CHECK(analysis_code([] { unroll_zero_order(parse_system("y = y + x")); }) ==
        AnalysisErrc::SingularUnroll);
}

TEST_CASE("canonical forms") {
  const auto s3 = canonicalize(parse_system("y = D[y,1] + I[y] + x"));
  CHECK(same(s3.a, {c(1), c(-1), c(1)}));
  CHECK(same(s3.b, {c(0), c(-1)}));
  CHECK(s3.n() == 2);
  CHECK(s3.m() == 1);

  const auto implicit_form = canonicalize(parse_system("y = D[y,1] + I[x]"));
  CHECK(same(implicit_form.a, {c(0), c(-1), c(1)}));
  CHECK(same(implicit_form.b, {c(-1)}));

  const auto first_order = canonicalize(parse_system("y = a*D[y,1] + b*x"));
  CHECK(same(first_order.a, {divide(c(-1), a), c(1)}));
  CHECK(same(first_order.b, {divide(-b, a)}));

  const auto fb = canonicalize(parse_system("y = a*y + b*x"));
  CHECK(same(fb.a, {c(1)}));
  CHECK(same(fb.b, {divide(b, c(1) - a)}));

  const auto nested = canonicalize(parse_system("y = I[I[x]]"));
  CHECK(same(nested.a, {c(0), c(0), c(1)}));
  CHECK(same(nested.b, {c(1)}));

  const auto zero = canonicalize(parse_system("y = 0"));
  CHECK(same(zero.a, {c(1)}));
  CHECK(same(zero.b, {c(0)}));
}

TEST_CASE("canonicalize errors") {
  CHECK(analysis_code([] { canonicalize(parse_system("y = a*x + b")); }) == AnalysisErrc::NotLTI);
  CHECK(analysis_code([] { canonicalize(parse_system("y = t*x")); }) == AnalysisErrc::NotLTI);
  CHECK(analysis_code([] { canonicalize(parse_system("y = y + x")); }) ==
        AnalysisErrc::DegenerateEquation);
  CHECK(analysis_code([] { canonicalize_affine(parse_system("y = I[x] + 1")); }) ==
        AnalysisErrc::NotAffine);
  CHECK(analysis_code([] { canonicalize_affine(parse_system("y = sq(x)")); }) ==
        AnalysisErrc::NotAffine);
}

TEST_CASE("affine canonical form keeps the offset") {
  const auto f = canonicalize_affine(parse_system("y = a*x + b"));
  CHECK(same(f.form.a, {c(1)}));
  CHECK(same(f.form.b, {a}));
  CHECK(f.offset == b);

  const auto g = canonicalize_affine(parse_system("y = D[y,1] + x + a"));
  CHECK(same(g.form.a, {c(-1), c(1)}));
  CHECK(same(g.form.b, {c(-1)}));
  CHECK(f.offset == b);
  CHECK(g.offset == -a);
}

TEST_CASE("equivalence of representations") {
  CHECK(check_equivalence(parse_system("y = D[y,1] + I[y] + x"),
                          parse_system("y = -D[y,2] + D[y,1] - D[x,1]")));
  CHECK_FALSE(check_equivalence(parse_system("y = a*x"), parse_system("y = a*D[y,1] + b*x")));
  CHECK(check_equivalence(parse_system("y = a*y + b*x"), parse_system("y = (b/(1-a))*x")));
  CHECK(analysis_code([] {
          check_equivalence(parse_system("y = a*x"), parse_system("y = sq(x)"));
        }) == AnalysisErrc::NotLTI);
}

TEST_CASE("property: witnesses are sound") {
  testing::ExprGen g(7);
  int witnessed = 0;
  for (int i = 0; i < 300; ++i) {
    const SystemDef sys(g(3));
    LinearityReport report;
    try {
      report = classify(sys);
    } catch (const Error&) {
      continue;
    }
    CHECK((report.verdict == Verdict::LTI) == report.defects.empty());
    CHECK((report.verdict == Verdict::LTI) == !report.witness.has_value());
    CHECK((report.verdict == Verdict::LTI) == !report.proof_trace.empty());
    if (report.witness) {
      ++witnessed;
      CHECK_FALSE(expr_equal(report.witness->lhs, report.witness->rhs));
    }
  }
  CHECK(witnessed > 100);
}

TEST_CASE("property: canonical forms are idempotent, reflexive, symmetric and scale-free") {
  testing::ExprGen g(11);
  int checked = 0;
  for (int i = 0; i < 150; ++i) {
    const SystemDef sys(random_lti(g));
    REQUIRE(classify(sys).verdict == Verdict::LTI);
    CanonicalForm cf;
    try {
      cf = canonicalize(sys);
    } catch (const AnalysisError& e) {
      CHECK(e.code() == AnalysisErrc::DegenerateEquation);
      continue;
    } catch (const DivisionByZero&) {
      continue;
    }
    ++checked;
    const SystemDef back = to_system(cf);
    const CanonicalForm again = canonicalize(back);
    CHECK(same(again.a, cf.a));
    CHECK(same(again.b, cf.b));
    CHECK(check_equivalence(sys, sys));
    CHECK(check_equivalence(sys, back));
    CHECK(check_equivalence(back, sys));

    const SignalExpr k = q(g.pick(2) ? 3 : -2, 1 + g.pick(4));
    const SystemDef scaled(SignalExpr::y() - k * (SignalExpr::y() - back.rhs()));
    CHECK(check_equivalence(sys, scaled));
  }
  CHECK(checked > 50);
}

TEST_CASE("report JSON shape") {
  const auto sys = parse_system("y = a*D[y,1] + b*x");
  const auto j = to_json(classify(sys), canonicalize(sys));
  CHECK(j["verdict"] == "LTI");
  CHECK(j["defects"].empty());
  CHECK(j["proof_trace"].size() == 8);
  CHECK_FALSE(j.contains("witness"));
  CHECK(j["canonical"]["a"] == nlohmann::json::array({"-1/a", "1"}));
  CHECK(j["canonical"]["b"] == nlohmann::json::array({"-b/a"}));

  const auto w = to_json(classify(parse_system("y = a*x + b")));
  CHECK(w["verdict"] == "NotLinear");
  CHECK(w["defects"][0]["kind"] == "AffineOffset");
  CHECK(w["defects"][0]["term"] == "b");
  CHECK(w["witness"]["lhs"] == "7*a + b");
  CHECK(w["witness"]["rhs"] == "7*a + 2*b");
  CHECK(w["witness"]["alpha"] == "1");
  CHECK_FALSE(w.contains("canonical"));
}
