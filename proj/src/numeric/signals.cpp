#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <numbers>

#include "ltic/errors.hpp"
#include "ltic/numeric/signals.hpp"

namespace ltic {

TestSignal::TestSignal(std::string name, Real quiet_prefix, std::function<Real(Real, bool)> eval)
    : name_(std::move(name)), quiet_prefix_(quiet_prefix), eval_(std::move(eval)) {}

TestSignal TestSignal::constant(Real c) {
  if (c == 0) return zero();
  return TestSignal("const:c=" + format_real(c), 0, [c](Real, bool) { return c; });
}

TestSignal TestSignal::zero() {
  return TestSignal("zero", std::numeric_limits<Real>::infinity(), [](Real, bool) { return Real(0); });
}

TestSignal TestSignal::step(Real delay) {
  return parse("step@" + format_real(delay));
}

namespace {

[[noreturn]] void bad(std::string_view descriptor, const std::string& why) {
  throw NumericError(NumericErrc::InvalidSignal,
                     "signal '" + std::string(descriptor) + "': " + why);
}

Real number(std::string_view descriptor, const std::string& text) {
  char* end = nullptr;
  const Real v = std::strtold(text.c_str(), &end);
  if (text.empty() || *end != '\0' || !std::isfinite(v)) bad(descriptor, "bad number '" + text + "'");
  return v;
}

}  // namespace

TestSignal TestSignal::parse(std::string_view descriptor) {
  std::string_view rest = descriptor;
  std::map<std::string, Real> params;
  if (const auto colon = rest.find(':'); colon != std::string_view::npos) {
    std::string_view list = rest.substr(colon + 1);
    rest = rest.substr(0, colon);
    while (!list.empty()) {
      const auto comma = list.find(',');
      const std::string_view item = list.substr(0, comma);
      const auto eq = item.find('=');
      if (eq == std::string_view::npos) bad(descriptor, "expected key=value");
      params[std::string(item.substr(0, eq))] = number(descriptor, std::string(item.substr(eq + 1)));
      if (comma == std::string_view::npos) break;
      list.remove_prefix(comma + 1);
    }
  }
  Real d = 0;
  if (const auto at = rest.find('@'); at != std::string_view::npos) {
    d = number(descriptor, std::string(rest.substr(at + 1)));
    if (d < 0) bad(descriptor, "negative delay");
    rest = rest.substr(0, at);
  }
  const std::string kind(rest);
  auto take = [&](const std::string& key, Real fallback) {
    const auto it = params.find(key);
    if (it == params.end()) return fallback;
    const Real v = it->second;
    params.erase(it);
    return v;
  };
  std::function<Real(Real, bool)> f;
  // Onsets within 1e-12 of a grid node count as on the node.
  auto on = [d](Real t, bool left) {
    const Real eps = 1e-12L * std::max<Real>(1, std::fabs(t));
    return left ? t > d + eps : t >= d - eps;
  };
  Real quiet = d;
  if (kind == "step") {
    f = [on](Real t, bool left) { return on(t, left) ? Real(1) : Real(0); };
  } else if (kind == "ramp") {
    f = [on, d](Real t, bool left) { return on(t, left) ? t - d : Real(0); };
  } else if (kind == "sine") {
    const Real freq = take("f", 1);
    f = [on, d, freq](Real t, bool left) {
      return on(t, left) ? std::sin(2 * std::numbers::pi_v<Real> * freq * (t - d)) : Real(0);
    };
  } else if (kind == "gauss") {
    const Real w = take("w", 0.3L);
    if (w <= 0) bad(descriptor, "width must be positive");
    f = [on, d, w](Real t, bool left) {
      const Real s = (t - d - 4 * w) / w;
      return on(t, left) ? std::exp(-s * s / 2) : Real(0);
    };
  } else if (kind == "const") {
    const Real c = take("c", 1);
    f = [on, c](Real t, bool left) { return on(t, left) ? c : Real(0); };
    if (c == 0) quiet = std::numeric_limits<Real>::infinity();
  } else if (kind == "zero") {
    f = [](Real, bool) { return Real(0); };
    quiet = std::numeric_limits<Real>::infinity();
  } else {
    bad(descriptor, "unknown kind '" + kind + "'");
  }
  if (!params.empty()) bad(descriptor, "unknown key '" + params.begin()->first + "'");
  return TestSignal(std::string(descriptor), quiet, std::move(f));
}

std::size_t grid_steps(Real t_end, Real dt) {
  if (!(dt > 0) || !(t_end >= dt) || !std::isfinite(t_end)) {
    throw NumericError(NumericErrc::InvalidGrid, "need dt > 0 and t_end >= dt");
  }
  return static_cast<std::size_t>(std::llround(t_end / dt));
}

SampledInput sample(const TestSignal& x, Real t_end, Real dt) {
  const std::size_t n = grid_steps(t_end, dt);
  SampledInput out;
  out.dt = dt;
  out.u.resize(2 * n + 1);
  out.u_left.resize(n + 1);
  for (std::size_t j = 0; j < out.u.size(); ++j) out.u[j] = x(static_cast<Real>(j) * dt / 2);
  for (std::size_t k = 0; k <= n; ++k) out.u_left[k] = x.left(static_cast<Real>(2 * k) * dt / 2);
  return out;
}

SampledInput combine(Real alpha, const SampledInput& u1, Real beta, const SampledInput& u2) {
  if (u1.u.size() != u2.u.size() || u1.dt != u2.dt) {
    throw NumericError(NumericErrc::InvalidGrid, "inputs sampled on different grids");
  }
  SampledInput out{u1.dt, std::vector<Real>(u1.u.size()), std::vector<Real>(u1.u_left.size())};
  for (std::size_t j = 0; j < out.u.size(); ++j) out.u[j] = alpha * u1.u[j] + beta * u2.u[j];
  for (std::size_t k = 0; k < out.u_left.size(); ++k) {
    out.u_left[k] = alpha * u1.u_left[k] + beta * u2.u_left[k];
  }
  return out;
}

SampledInput delay(const SampledInput& u, std::size_t steps) {
  SampledInput out{u.dt, std::vector<Real>(u.u.size(), 0), std::vector<Real>(u.u_left.size(), 0)};
  for (std::size_t j = 2 * steps; j < out.u.size(); ++j) out.u[j] = u.u[j - 2 * steps];
  for (std::size_t k = steps + 1; k < out.u_left.size(); ++k) out.u_left[k] = u.u_left[k - steps];
  return out;
}

SampledInput SampledInput::constant(Real dt, std::size_t n, Real value) {
  return {dt, std::vector<Real>(2 * n + 1, value), std::vector<Real>(n + 1, value)};
}

}  // namespace ltic
