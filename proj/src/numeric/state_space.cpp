#include <cmath>

#include "ltic/errors.hpp"
#include "ltic/numeric/state_space.hpp"

namespace ltic {

StateSpace to_state_space(const CanonicalForm& cf, const ParameterBinding& binding) {
  const int n = cf.n();
  const int m = cf.m();
  if (m > n) {
    throw NumericError(NumericErrc::ImproperSystem,
                       "input derivative order " + std::to_string(m) + " exceeds output order " +
                           std::to_string(n));
  }
  const Real lead = evaluate(cf.a[n], binding);
  if (std::fabs(lead) <= 1e-12L) {
    throw NumericError(NumericErrc::SingularLeadingCoefficient,
                       "leading coefficient " + to_string(cf.a[n]) + " evaluates to zero");
  }
  std::vector<Real> alpha(n + 1), beta(n + 1, 0);
  for (int i = 0; i <= n; ++i) alpha[i] = evaluate(cf.a[i], binding) / lead;
  for (int j = 0; j <= m; ++j) beta[j] = evaluate(cf.b[j], binding) / lead;

  StateSpace ss;
  ss.A = Matrix::Zero(n, n);
  ss.B = Vector::Zero(n);
  ss.C = RowVector::Zero(n);
  for (int i = 0; i + 1 < n; ++i) ss.A(i, i + 1) = 1;
  for (int i = 0; i < n; ++i) {
    ss.A(n - 1, i) = -alpha[i];
    ss.C(i) = beta[i] - beta[n] * alpha[i];
  }
  if (n > 0) ss.B(n - 1) = 1;
  ss.D = beta[n];
  return ss;
}

}  // namespace ltic
