#pragma once

#include "ltic/numeric/signals.hpp"
#include "ltic/numeric/simulate.hpp"

namespace ltic {

/// Solution of y = a*y' + b*x with y(0) = y0:
///   y(t) = e^{t/a} (y0 - (b/a) * integral_0^t e^{-tau/a} x(tau) dtau),
/// the integral accumulated by composite Simpson's rule on panels of width dt.
/// Throws ZeroCoefficientA when a = 0.
Trajectory solve_first_order_closed_form(Real a, Real b, Real y0, const SampledInput& x);
Trajectory solve_first_order_closed_form(Real a, Real b, Real y0, const TestSignal& x,
                                         Real t_end, Real dt);

}  // namespace ltic
