#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "ltic/numeric/binding.hpp"

namespace ltic {

/// A test input with a closed-form evaluator. The signal is identically zero
/// on [0, quiet_prefix). Signals are right-continuous; `left` gives the left
/// limit so that a jump on a grid node is not smeared into the step before it.
class TestSignal {
 public:
  /// `eval(t, left_limit)`.
  TestSignal(std::string name, Real quiet_prefix, std::function<Real(Real, bool)> eval);

  /// `kind[@delay][:key=value,...]` with kind one of step, ramp, sine (f),
  /// gauss (w), const (c), zero. Throws NumericError(InvalidSignal).
  static TestSignal parse(std::string_view descriptor);
  static TestSignal constant(Real c);
  static TestSignal zero();
  static TestSignal step(Real delay);

  const std::string& name() const { return name_; }
  Real quiet_prefix() const { return quiet_prefix_; }
  Real operator()(Real t) const { return eval_(t, false); }
  Real left(Real t) const { return eval_(t, true); }

 private:
  std::string name_;
  Real quiet_prefix_;
  std::function<Real(Real, bool)> eval_;
};

/// Input samples on the half-step grid u[j] = x(j*dt/2), j = 0..2N, as needed
/// by the midpoint stages of RK4 and Simpson's rule, plus the left limits
/// u_left[k] = x(k*dt-) used at the end of each step.
struct SampledInput {
  Real dt = 0;
  std::vector<Real> u;
  std::vector<Real> u_left;

  /// Constant input on n steps.
  static SampledInput constant(Real dt, std::size_t n, Real value);

  std::size_t steps() const { return u.empty() ? 0 : (u.size() - 1) / 2; }
  Real t_end() const { return dt * static_cast<Real>(steps()); }
};

/// Number of steps of size dt in [0, t_end]. Throws InvalidGrid unless
/// dt > 0 and t_end >= dt.
std::size_t grid_steps(Real t_end, Real dt);

SampledInput sample(const TestSignal& x, Real t_end, Real dt);

/// alpha*u1 + beta*u2 sample by sample.
SampledInput combine(Real alpha, const SampledInput& u1, Real beta, const SampledInput& u2);

/// u delayed by `steps` whole steps, zero-filled: u_d(t) = u(t - steps*dt).
SampledInput delay(const SampledInput& u, std::size_t steps);

}  // namespace ltic
