#include <cmath>

#include "ltic/errors.hpp"
#include "ltic/numeric/closed_form.hpp"

namespace ltic {

Trajectory solve_first_order_closed_form(Real a, Real b, Real y0, const SampledInput& x) {
  if (a == 0) throw NumericError(NumericErrc::ZeroCoefficientA, "closed form needs a != 0");
  const std::size_t steps = x.steps();
  const Real h = x.dt;
  auto weight = [&](std::size_t j) { return std::exp(-(static_cast<Real>(j) * h / 2) / a); };
  Trajectory out{0, h, std::vector<Real>(steps + 1)};
  Real integral = 0;
  for (std::size_t k = 0; k <= steps; ++k) {
    if (k > 0) integral += h / 6 *
                (weight(2 * k - 2) * x.u[2 * k - 2] + 4 * weight(2 * k - 1) * x.u[2 * k - 1] +
                 weight(2 * k) * x.u_left[k]);
    const Real y = std::exp(out.time(k) / a) * (y0 - (b / a) * integral);
    if (!std::isfinite(y)) {
      throw NumericError(NumericErrc::NumericalBlowup, "closed form overflowed at t = " + format_real(out.time(k)));
    }
    out.samples[k] = y;
  }
  return out;
}

Trajectory solve_first_order_closed_form(Real a, Real b, Real y0, const TestSignal& x,
                                         Real t_end, Real dt) {
  return solve_first_order_closed_form(a, b, y0, sample(x, t_end, dt));
}

}  // namespace ltic
