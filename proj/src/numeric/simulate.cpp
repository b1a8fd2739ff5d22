#include <cmath>

#include "ltic/calculus.hpp"
#include "ltic/errors.hpp"
#include "ltic/numeric/simulate.hpp"

namespace ltic {

namespace {

void check_sample(Real y, std::size_t k, Real dt) {
  if (!std::isfinite(y) || std::fabs(y) > 1e12L) {
    throw NumericError(NumericErrc::NumericalBlowup,
                       "output reached " + format_real(y) + " at t = " +
                           format_real(dt * static_cast<Real>(k)));
  }
}

bool has_memory(const SignalExpr& e) {
  if (e.kind() == SignalExpr::Kind::Deriv || e.kind() == SignalExpr::Kind::Integ) return true;
  for (const auto& ch : e.children()) {
    if (has_memory(ch)) return true;
  }
  return false;
}

}  // namespace

Trajectory simulate(const StateSpace& ss, const SampledInput& x) {
  const std::size_t steps = x.steps();
  const Real h = x.dt;
  Trajectory out{0, h, std::vector<Real>(steps + 1)};
  Vector z = Vector::Zero(ss.n());
  auto f = [&](const Vector& s, Real u) -> Vector { return ss.A * s + ss.B * u; };
  for (std::size_t k = 0;; ++k) {
    const Real y = (ss.n() > 0 ? ss.C.dot(z) : Real(0)) + ss.D * x.u[2 * k];
    check_sample(y, k, h);
    out.samples[k] = y;
    if (k == steps) break;
    if (ss.n() == 0) continue;
    const Real u0 = x.u[2 * k];
    const Real um = x.u[2 * k + 1];
    const Real u1 = x.u_left[k + 1];
    const Vector k1 = f(z, u0);
    const Vector k2 = f(z + (h / 2) * k1, um);
    const Vector k3 = f(z + (h / 2) * k2, um);
    const Vector k4 = f(z + h * k3, u1);
    z += (h / 6) * (k1 + 2 * k2 + 2 * k3 + k4);
  }
  return out;
}

Trajectory simulate(const StateSpace& ss, const TestSignal& x, Real t_end, Real dt) {
  return simulate(ss, sample(x, t_end, dt));
}

SystemSimulator::SystemSimulator(const SystemDef& sys, const ParameterBinding& binding)
    : binding_(binding) {
  binding.require_covers(sys.rhs());
  const LinearityReport report = classify(sys);
  if (report.verdict == Verdict::LTI) {
    ss_ = to_state_space(canonicalize(sys), binding);
    return;
  }
  const bool time_free = !sys.rhs().contains_time();
  if (time_free) {
    try {
      const AffineForm af = canonicalize_affine(sys);
      ss_ = to_state_space(af.form, binding);
      CanonicalForm offset{af.form.a, {af.offset}};
      offset_ss_ = to_state_space(offset, binding);
      mode_ = Mode::Affine;
      return;
    } catch (const AnalysisError&) {
    }
  }
  if (!sys.has_feedback() && !has_memory(sys.rhs())) {
    pointwise_ = sys.rhs();
    mode_ = Mode::Pointwise;
    return;
  }
  throw NumericError(NumericErrc::Unsupported,
                     "no numeric realization for " + to_string(sys.rhs()) +
                         " (needs LTI, affine, or memoryless without feedback)");
}

Trajectory SystemSimulator::run(const SampledInput& x) const {
  switch (mode_) {
    case Mode::StateSpace:
      return simulate(*ss_, x);
    case Mode::Affine: {
      Trajectory out = simulate(*ss_, x);
      const SampledInput one = SampledInput::constant(x.dt, x.steps(), 1);
      const Trajectory off = simulate(*offset_ss_, one);
      for (std::size_t k = 0; k < out.samples.size(); ++k) {
        out.samples[k] += off.samples[k];
        check_sample(out.samples[k], k, x.dt);
      }
      return out;
    }
    case Mode::Pointwise: {
      Trajectory out{0, x.dt, std::vector<Real>(x.steps() + 1)};
      for (std::size_t k = 0; k < out.samples.size(); ++k) {
        out.samples[k] = evaluate(pointwise_, binding_, {out.time(k), x.u[2 * k]});
        check_sample(out.samples[k], k, x.dt);
      }
      return out;
    }
  }
  return {};
}

}  // namespace ltic
