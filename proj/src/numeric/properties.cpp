#include <algorithm>
#include <cmath>

#include "ltic/errors.hpp"
#include "ltic/numeric/closed_form.hpp"
#include "ltic/numeric/properties.hpp"

namespace ltic {

const char* to_string(PropertyReport::Property p) {
  using P = PropertyReport::Property;
  switch (p) {
    case P::Superposition: return "Superposition";
    case P::Shift: return "Shift";
    case P::ZeroInZeroOut: return "ZeroInZeroOut";
    case P::ClosedFormAgreement: return "ClosedFormAgreement";
    case P::ShiftFailureDemo: return "ShiftFailureDemo";
  }
  return "?";
}

namespace {

using P = PropertyReport::Property;

PropertyReport make(P property, Real error, Real tol, const TestGrid& grid) {
  PropertyReport r;
  r.property = property;
  r.max_abs_error = error;
  r.tolerance = tol;
  r.passed = property == P::ShiftFailureDemo ? error > tol : error <= tol;
  r.configuration["dt"] = format_real(grid.dt);
  r.configuration["t_end"] = format_real(grid.t_end);
  return r;
}

void describe(PropertyReport& r, const SystemDef& sys, const ParameterBinding& binding) {
  r.configuration["system"] = "y = " + to_string(sys.rhs(), true);
  std::string text;
  for (const auto& [name, v] : binding.values()) {
    if (!text.empty()) text += ",";
    text += name + "=" + format_real(v);
  }
  r.configuration["binding"] = text;
}

/// Whole steps in delta. Throws DeltaNotOnGrid.
std::size_t delta_steps(Real delta, Real dt, std::size_t steps) {
  if (!(delta > 0)) throw NumericError(NumericErrc::DeltaNotOnGrid, "delta must be positive");
  const auto d = std::llround(delta / dt);
  if (d < 1 || std::fabs(static_cast<Real>(d) * dt - delta) > 1e-9L * std::max<Real>(1, delta) ||
      static_cast<std::size_t>(d) > steps) {
    throw NumericError(NumericErrc::DeltaNotOnGrid,
                       "delta " + format_real(delta) + " is not a whole number of steps of " +
                           format_real(dt) + " inside the window");
  }
  return static_cast<std::size_t>(d);
}

}  // namespace

PropertyReport empirical_superposition_test(const SystemDef& sys, const ParameterBinding& binding,
                                            const TestSignal& x1, const TestSignal& x2, Real alpha,
                                            Real beta, const TestGrid& grid) {
  const SystemSimulator sim(sys, binding);
  const SampledInput u1 = sample(x1, grid.t_end, grid.dt);
  const SampledInput u2 = sample(x2, grid.t_end, grid.dt);
  const Trajectory y1 = sim.run(u1);
  const Trajectory y2 = sim.run(u2);
  const Trajectory y3 = sim.run(combine(alpha, u1, beta, u2));
  Real err = 0;
  for (std::size_t k = 0; k < y3.samples.size(); ++k) {
    err = std::max(err, std::fabs(y3.samples[k] - (alpha * y1.samples[k] + beta * y2.samples[k])));
  }
  PropertyReport r = make(P::Superposition, err, grid.tol, grid);
  describe(r, sys, binding);
  r.configuration["x1"] = x1.name();
  r.configuration["x2"] = x2.name();
  r.configuration["alpha"] = format_real(alpha);
  r.configuration["beta"] = format_real(beta);
  return r;
}

PropertyReport empirical_shift_test(const SystemDef& sys, const ParameterBinding& binding,
                                    const TestSignal& x, Real delta, const TestGrid& grid) {
  const SampledInput u = sample(x, grid.t_end, grid.dt);
  const std::size_t d = delta_steps(delta, grid.dt, u.steps());
  if (x.quiet_prefix() < delta) {
    throw NumericError(NumericErrc::QuietPrefixTooShort,
                       "signal " + x.name() + " is only quiet on [0, " + format_real(x.quiet_prefix()) +
                           "), shorter than delta = " + format_real(delta));
  }
  const SystemSimulator sim(sys, binding);
  const Trajectory y = sim.run(u);
  const Trajectory yd = sim.run(delay(u, d));
  Real err = 0;
  for (std::size_t k = d; k < yd.samples.size(); ++k) {
    err = std::max(err, std::fabs(yd.samples[k] - y.samples[k - d]));
  }
  PropertyReport r = make(P::Shift, err, grid.tol, grid);
  describe(r, sys, binding);
  r.configuration["x"] = x.name();
  r.configuration["delta"] = format_real(delta);
  return r;
}

PropertyReport zero_in_zero_out_test(const SystemDef& sys, const ParameterBinding& binding,
                                     const TestGrid& grid) {
  const SystemSimulator sim(sys, binding);
  const Trajectory y = sim.run(sample(TestSignal::zero(), grid.t_end, grid.dt));
  Real err = 0;
  for (Real v : y.samples) err = std::max(err, std::fabs(v));
  PropertyReport r = make(P::ZeroInZeroOut, err, 0, grid);
  describe(r, sys, binding);
  r.configuration["x"] = "zero";
  return r;
}

PropertyReport closed_form_agreement(Real a, Real b, const TestSignal& x, Real tol,
                                     const TestGrid& grid) {
  ParameterBinding binding;
  binding.set("a", a);
  binding.set("b", b);
  const SystemDef sys(SignalExpr::param("a") * SignalExpr::deriv(SignalExpr::y(), 1) +
                      SignalExpr::param("b") * SignalExpr::x());
  const SampledInput u = sample(x, grid.t_end, grid.dt);
  const Trajectory rk4 = SystemSimulator(sys, binding).run(u);
  const Trajectory exact = solve_first_order_closed_form(a, b, 0, u);
  Real err = 0;
  for (std::size_t k = 0; k < rk4.samples.size(); ++k) {
    err = std::max(err, std::fabs(rk4.samples[k] - exact.samples[k]));
  }
  PropertyReport r = make(P::ClosedFormAgreement, err, tol, grid);
  describe(r, sys, binding);
  r.configuration["x"] = x.name();
  return r;
}

PropertyReport demonstrate_fixed_y0_shift_failure(Real a, Real b, Real y0, const TestSignal& x,
                                                  Real delta, const TestGrid& grid, Real threshold) {
  if (a == 0) throw NumericError(NumericErrc::ZeroCoefficientA, "closed form needs a != 0");
  const std::size_t steps = grid_steps(grid.t_end, grid.dt);
  const std::size_t d = delta_steps(delta, grid.dt, std::numeric_limits<std::size_t>::max());
  // x(t + delta) on [0, t_end] is the tail of x sampled on [0, t_end + delta].
  const Real long_end = grid.dt * static_cast<Real>(steps + d);
  const SampledInput u_long = sample(x, long_end, grid.dt);
  const SampledInput advanced{grid.dt, std::vector<Real>(u_long.u.begin() + 2 * d, u_long.u.end()),
                              std::vector<Real>(u_long.u_left.begin() + d, u_long.u_left.end())};
  const Trajectory lhs = solve_first_order_closed_form(a, b, y0, advanced);
  const Trajectory rhs = solve_first_order_closed_form(a, b, y0, u_long);
  Real err = 0;
  for (std::size_t k = 0; k <= steps; ++k) {
    err = std::max(err, std::fabs(lhs.samples[k] - rhs.samples[k + d]));
  }
  PropertyReport r = make(P::ShiftFailureDemo, err, threshold, grid);
  r.configuration["a"] = format_real(a);
  r.configuration["b"] = format_real(b);
  r.configuration["y0"] = format_real(y0);
  r.configuration["x"] = x.name();
  r.configuration["delta"] = format_real(delta);
  return r;
}

}  // namespace ltic
