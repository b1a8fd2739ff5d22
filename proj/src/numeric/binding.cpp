#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "ltic/calculus.hpp"
#include "ltic/errors.hpp"
#include "ltic/numeric/binding.hpp"

namespace ltic {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

void parse_entry(std::string_view entry, ParameterBinding& out) {
  const auto eq = entry.find('=');
  if (eq == std::string_view::npos) {
    throw NumericError(NumericErrc::InvalidBinding, "expected name=value, got '" + std::string(entry) + "'");
  }
  const std::string name(trim(entry.substr(0, eq)));
  const std::string value(trim(entry.substr(eq + 1)));
  char* end = nullptr;
  const Real v = std::strtold(value.c_str(), &end);
  if (name.empty() || value.empty() || *end != '\0' || !std::isfinite(v)) {
    throw NumericError(NumericErrc::InvalidBinding, "expected name=value, got '" + std::string(entry) + "'");
  }
  out.set(name, v);
}

}  // namespace

std::string format_real(Real v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12Lg", v);
  return buf;
}

ParameterBinding ParameterBinding::parse(std::string_view text) {
  ParameterBinding out;
  while (!trim(text).empty()) {
    const auto comma = text.find(',');
    parse_entry(text.substr(0, comma), out);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

ParameterBinding ParameterBinding::parse_file_text(std::string_view text) {
  ParameterBinding out;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    std::string_view body(line);
    body = trim(body.substr(0, body.find('#')));
    if (!body.empty()) parse_entry(body, out);
  }
  return out;
}

void ParameterBinding::merge(const ParameterBinding& other) {
  for (const auto& [k, v] : other.values_) values_[k] = v;
}

Real ParameterBinding::at(const std::string& name) const {
  const auto it = values_.find(name);
  if (it == values_.end()) {
    throw NumericError(NumericErrc::MissingBinding, "no value bound for parameter '" + name + "'");
  }
  return it->second;
}

void ParameterBinding::require_covers(const SignalExpr& e) const {
  for (const auto& name : parameters(e)) at(name);
}

void ParameterBinding::require_known(const SignalExpr& e) const {
  const auto used = parameters(e);
  for (const auto& [name, v] : values_) {
    if (!used.count(name)) {
      throw NumericError(NumericErrc::UnknownParameter, "parameter '" + name + "' does not occur in the system");
    }
  }
}

Real evaluate(const SignalExpr& e, const ParameterBinding& binding, const PointContext& at) {
  using K = SignalExpr::Kind;
  switch (e.kind()) {
    case K::Const:
      return static_cast<Real>(e.value());
    case K::Param:
      return binding.at(e.name());
    case K::Time:
      if (std::isnan(at.t)) throw NumericError(NumericErrc::Unsupported, "t has no value here");
      return at.t;
    case K::Signal:
      if (e.signal_ref() != SignalRef::x() || std::isnan(at.x)) {
        throw NumericError(NumericErrc::Unsupported,
                           "signal " + to_string(e) + " cannot be evaluated pointwise");
      }
      return at.x;
    case K::Recip: {
      const Real den = evaluate(e.child(), binding, at);
      if (std::fabs(den) <= 1e-12L) {
        throw NumericError(NumericErrc::SingularDenominator,
                           "denominator " + to_string(e.child()) + " evaluates to zero");
      }
      return 1 / den;
    }
    case K::Apply: {
      const Real v = evaluate(e.child(), binding, at);
      switch (e.func()) {
        case Func::Sin: return std::sin(v);
        case Func::Exp: return std::exp(v);
        case Func::Abs: return std::fabs(v);
        case Func::Sq: return v * v;
      }
      return 0;
    }
    case K::Sum: {
      Real s = 0;
      for (const auto& ch : e.children()) s += evaluate(ch, binding, at);
      return s;
    }
    case K::Product: {
      Real p = 1;
      for (const auto& ch : e.children()) p *= evaluate(ch, binding, at);
      return p;
    }
    case K::Deriv:
    case K::Integ:
      break;
  }
  throw NumericError(NumericErrc::Unsupported, to_string(e) + " has memory and cannot be evaluated pointwise");
}

}  // namespace ltic
