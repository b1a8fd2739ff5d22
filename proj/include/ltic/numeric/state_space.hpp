#pragma once

#include <Eigen/Dense>

#include "ltic/analyzer.hpp"
#include "ltic/numeric/binding.hpp"

namespace ltic {

using Matrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
using RowVector = Eigen::Matrix<Real, 1, Eigen::Dynamic>;

/// z' = A z + B u, y = C z + D u.
struct StateSpace {
  Matrix A;
  Vector B;
  RowVector C;
  Real D = 0;

  int n() const { return static_cast<int>(A.rows()); }
};

/// Controllable canonical form realization. Throws ImproperSystem when m > n
/// and SingularLeadingCoefficient when |a_n| <= 1e-12 under the binding.
StateSpace to_state_space(const CanonicalForm& cf, const ParameterBinding& binding);

}  // namespace ltic
