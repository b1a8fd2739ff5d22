#pragma once

#include <optional>
#include <vector>

#include "ltic/numeric/signals.hpp"
#include "ltic/numeric/state_space.hpp"

namespace ltic {

/// Samples y(t0 + k*dt).
struct Trajectory {
  Real t0 = 0;
  Real dt = 0;
  std::vector<Real> samples;

  Real time(std::size_t k) const { return t0 + dt * static_cast<Real>(k); }
};

/// Classical fixed-step RK4 from the zero state. Throws NumericalBlowup when a
/// sample is not finite or exceeds 1e12 in magnitude.
Trajectory simulate(const StateSpace& ss, const SampledInput& x);
Trajectory simulate(const StateSpace& ss, const TestSignal& x, Real t_end, Real dt);

/// Numeric realization of a parsed system under a binding.
///
/// LTI systems run as state space. Affine systems with constant coefficients
/// add a second state-space channel driven by the constant offset. Systems
/// without feedback whose right-hand side only uses x, t and parameters are
/// evaluated pointwise (e.g. y = t*x). Anything else throws Unsupported.
class SystemSimulator {
 public:
  SystemSimulator(const SystemDef& sys, const ParameterBinding& binding);

  Trajectory run(const SampledInput& x) const;

  enum class Mode { StateSpace, Affine, Pointwise };
  Mode mode() const { return mode_; }
  const std::optional<StateSpace>& state_space() const { return ss_; }

 private:
  Mode mode_ = Mode::StateSpace;
  std::optional<StateSpace> ss_;
  std::optional<StateSpace> offset_ss_;
  SignalExpr pointwise_;
  ParameterBinding binding_;
};

}  // namespace ltic
