#pragma once

#include <map>
#include <string>

#include "ltic/numeric/simulate.hpp"

namespace ltic {

struct PropertyReport {
  enum class Property { Superposition, Shift, ZeroInZeroOut, ClosedFormAgreement, ShiftFailureDemo };

  Property property = Property::Superposition;
  Real max_abs_error = 0;
  Real tolerance = 0;
  /// max_abs_error <= tolerance, except for ShiftFailureDemo where the
  /// discrepancy must exceed the tolerance.
  bool passed = false;
  /// Signals, scalars, binding and grid, as printable key/value pairs.
  std::map<std::string, std::string> configuration;
};

const char* to_string(PropertyReport::Property p);

/// Grid and tolerance shared by the property tests.
struct TestGrid {
  Real t_end = 5;
  Real dt = 1e-3;
  Real tol = 1e-6;
};

/// ||S[alpha*x1 + beta*x2] - (alpha*S[x1] + beta*S[x2])||_inf on one grid.
PropertyReport empirical_superposition_test(const SystemDef& sys, const ParameterBinding& binding,
                                            const TestSignal& x1, const TestSignal& x2, Real alpha,
                                            Real beta, const TestGrid& grid = {});

/// Compares the response to x delayed by delta against the delayed response.
/// Throws QuietPrefixTooShort and DeltaNotOnGrid.
PropertyReport empirical_shift_test(const SystemDef& sys, const ParameterBinding& binding,
                                    const TestSignal& x, Real delta, const TestGrid& grid = {});

/// max |S[0]| with zero initial state; tolerance 0.
PropertyReport zero_in_zero_out_test(const SystemDef& sys, const ParameterBinding& binding,
                                     const TestGrid& grid = {});

/// ||RK4 - closed form||_inf for y = a*y' + b*x, zero initial state.
PropertyReport closed_form_agreement(Real a, Real b, const TestSignal& x, Real tol,
                                     const TestGrid& grid = {});

/// Both sides of the fixed-window argument for the unrolled first-order
/// operator T[x](t) = y(t) with y(0) = y0: T applied to the advanced input
/// x(t + delta) against T[x] read off at t + delta. Passes when they differ by
/// more than `threshold`.
PropertyReport demonstrate_fixed_y0_shift_failure(Real a, Real b, Real y0, const TestSignal& x,
                                                  Real delta, const TestGrid& grid = {},
                                                  Real threshold = 1e-3);

}  // namespace ltic
