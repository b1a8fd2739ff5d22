#include <string>
#include <vector>

#include "ltic/expr.hpp"

namespace ltic {

namespace {

using K = SignalExpr::Kind;

std::string print(const SignalExpr& e, bool spaced);

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string signal_name(const SignalRef& ref) {
  std::string s = ref.kind == SignalKind::X ? "x" : "y";
  if (ref.index) s += std::to_string(ref.index);
  if (ref.shifted) s += "(t+δ)";
  return s;
}

/// A factor inside a product or under a division bar.
std::string factor(const SignalExpr& e) {
  if (e.kind() == K::Sum || e.kind() == K::Product) return "(" + print(e, false) + ")";
  if (e.kind() == K::Const && (e.value() < 0 || denominator(e.value()) != 1)) {
    return "(" + print(e, false) + ")";
  }
  if (e.kind() == K::Recip) return "(" + print(e, false) + ")";
  return print(e, false);
}

std::string print_product(const SignalExpr& e) {
  Rational c = 1;
  std::vector<std::string> num, den, sig;
  for (const auto& f : e.children()) {
    if (f.kind() == K::Const) {
      c *= f.value();
    } else if (f.kind() == K::Recip) {
      den.push_back(factor(f.child()));
    } else if (f.contains_signal()) {
      sig.push_back(factor(f));
    } else {
      num.push_back(factor(f));
    }
  }
  if (c == 0) return "0";
  const bool negative = c < 0;
  if (negative) c = -c;
  const auto p = numerator(c);
  const auto q = denominator(c);
  if (p != 1) num.insert(num.begin(), p.str());
  if (q != 1) den.insert(den.begin(), q.str());

  std::string body;
  if (den.empty()) {
    num.insert(num.end(), sig.begin(), sig.end());
    body = num.empty() ? "1" : join(num, "*");
  } else {
    const std::string ratio = (num.empty() ? "1" : join(num, "*")) + "/" + join(den, "/");
    body = sig.empty() ? ratio : "(" + ratio + ")*" + join(sig, "*");
  }
  return negative ? "-" + body : body;
}

std::string print_sum(const SignalExpr& e, bool spaced) {
  std::string out;
  bool first = true;
  for (const auto& t : e.children()) {
    std::string s = t.kind() == K::Sum ? "(" + print(t, false) + ")" : print(t, false);
    if (first) {
      out = s;
      first = false;
    } else if (!s.empty() && s[0] == '-') {
      out += (spaced ? " - " : "-") + s.substr(1);
    } else {
      out += (spaced ? " + " : "+") + s;
    }
  }
  return out;
}

std::string print(const SignalExpr& e, bool spaced) {
  switch (e.kind()) {
    case K::Const: return to_string(e.value());
    case K::Param: return e.name();
    case K::Time: return "t";
    case K::Signal: return signal_name(e.signal_ref());
    case K::Deriv:
      return "D[" + print(e.child(), false) + "," + std::to_string(e.order()) + "]";
    case K::Integ: return "I[" + print(e.child(), false) + "]";
    case K::Recip: return "1/" + factor(e.child());
    case K::Apply: return std::string(to_string(e.func())) + "(" + print(e.child(), false) + ")";
    case K::Sum: return print_sum(e, spaced);
    case K::Product: return print_product(e);
  }
  return "?";
}

}  // namespace

std::string to_string(const SignalExpr& e, bool spaced) { return print(e, spaced); }

}  // namespace ltic
