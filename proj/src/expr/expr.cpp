#include "ltic/expr.hpp"

#include <algorithm>
#include <stdexcept>

namespace ltic {

struct SignalExpr::Node {
  Kind kind = Kind::Const;
  Rational value = 0;
  std::string name;
  SignalRef ref;
  int order = 0;
  Func func = Func::Sin;
  std::vector<SignalExpr> children;
  bool has_signal = false;
  bool has_time = false;
};

const char* to_string(Func f) {
  switch (f) {
    case Func::Sin: return "sin";
    case Func::Exp: return "exp";
    case Func::Abs: return "abs";
    case Func::Sq: return "sq";
  }
  return "?";
}

std::optional<Func> func_from_name(std::string_view name) {
  if (name == "sin") return Func::Sin;
  if (name == "exp") return Func::Exp;
  if (name == "abs") return Func::Abs;
  if (name == "sq") return Func::Sq;
  return std::nullopt;
}

SignalExpr::SignalExpr() {
  static const auto zero = std::make_shared<const Node>();
  node_ = zero;
}

SignalExpr::SignalExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

SignalExpr SignalExpr::constant(Rational value) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Const;
  n->value = std::move(value);
  return SignalExpr(std::move(n));
}

SignalExpr SignalExpr::param(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Param;
  n->name = std::move(name);
  return SignalExpr(std::move(n));
}

SignalExpr SignalExpr::time() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Time;
  n->has_time = true;
  return SignalExpr(std::move(n));
}

SignalExpr SignalExpr::signal(SignalRef ref) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Signal;
  n->ref = ref;
  n->has_signal = true;
  return SignalExpr(std::move(n));
}

namespace {

template <class Node>
void inherit_flags(Node& n) {
  for (const auto& c : n.children) {
    n.has_signal = n.has_signal || c.contains_signal();
    n.has_time = n.has_time || c.contains_time();
  }
}

}  // namespace

SignalExpr SignalExpr::deriv(SignalExpr child, int order) {
  if (order < 1) throw std::invalid_argument("derivative order must be >= 1");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Deriv;
  n->order = order;
  n->children.push_back(std::move(child));
  inherit_flags(*n);
  return SignalExpr(std::move(n));
}

SignalExpr SignalExpr::integ(SignalExpr child) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Integ;
  n->children.push_back(std::move(child));
  inherit_flags(*n);
  // The upper limit is t, so any integral of a nonzero quantity moves with t.
  n->has_time = true;
  return SignalExpr(std::move(n));
}

SignalExpr SignalExpr::recip(SignalExpr child) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Recip;
  n->children.push_back(std::move(child));
  inherit_flags(*n);
  return SignalExpr(std::move(n));
}

SignalExpr SignalExpr::apply(Func f, SignalExpr child) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Apply;
  n->func = f;
  n->children.push_back(std::move(child));
  inherit_flags(*n);
  return SignalExpr(std::move(n));
}

SignalExpr SignalExpr::sum(std::vector<SignalExpr> terms) {
  if (terms.empty()) return SignalExpr();
  if (terms.size() == 1) return std::move(terms.front());
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sum;
  n->children = std::move(terms);
  inherit_flags(*n);
  return SignalExpr(std::move(n));
}

SignalExpr SignalExpr::product(std::vector<SignalExpr> factors) {
  if (factors.empty()) return constant(1);
  if (factors.size() == 1) return std::move(factors.front());
  auto n = std::make_shared<Node>();
  n->kind = Kind::Product;
  n->children = std::move(factors);
  inherit_flags(*n);
  return SignalExpr(std::move(n));
}

SignalExpr::Kind SignalExpr::kind() const { return node_->kind; }
const Rational& SignalExpr::value() const { return node_->value; }
const std::string& SignalExpr::name() const { return node_->name; }
const SignalRef& SignalExpr::signal_ref() const { return node_->ref; }
int SignalExpr::order() const { return node_->order; }
Func SignalExpr::func() const { return node_->func; }
std::span<const SignalExpr> SignalExpr::children() const { return node_->children; }

const SignalExpr& SignalExpr::child() const {
  if (node_->children.size() != 1) throw std::logic_error("child() on a non-unary node");
  return node_->children.front();
}

bool SignalExpr::is_zero() const { return kind() == Kind::Const && value() == 0; }
bool SignalExpr::contains_signal() const { return node_->has_signal; }
bool SignalExpr::contains_time() const { return node_->has_time; }

bool operator==(const SignalExpr& a, const SignalExpr& b) { return compare(a, b) == 0; }

namespace {

int kind_rank(SignalExpr::Kind k) {
  using K = SignalExpr::Kind;
  switch (k) {
    case K::Const: return 0;
    case K::Param: return 1;
    case K::Time: return 2;
    case K::Apply: return 3;
    case K::Recip: return 4;
    case K::Signal: return 5;
    case K::Deriv: return 6;
    case K::Integ: return 7;
    case K::Sum: return 8;
    case K::Product: return 9;
  }
  return 10;
}

std::optional<SignalKind> leading_kind(const SignalExpr& e) {
  if (!e.contains_signal()) return std::nullopt;
  if (e.kind() == SignalExpr::Kind::Signal) return e.signal_ref().kind;
  for (const auto& c : e.children()) {
    if (auto k = leading_kind(c)) return k;
  }
  return std::nullopt;
}

}  // namespace

int signal_order(const SignalExpr& e) {
  using K = SignalExpr::Kind;
  if (!e.contains_signal()) return 0;
  switch (e.kind()) {
    case K::Signal: return 0;
    case K::Deriv: return signal_order(e.child()) + e.order();
    case K::Integ: return signal_order(e.child()) - 1;
    default: {
      std::optional<int> best;
      for (const auto& c : e.children()) {
        if (!c.contains_signal()) continue;
        const int o = signal_order(c);
        if (!best || o > *best) best = o;
      }
      return best.value_or(0);
    }
  }
}

std::strong_ordering compare(const SignalExpr& a, const SignalExpr& b) {
  using K = SignalExpr::Kind;
  if (&a == &b) return std::strong_ordering::equal;
  const bool sa = a.contains_signal();
  const bool sb = b.contains_signal();
  if (sa != sb) return sa ? std::strong_ordering::greater : std::strong_ordering::less;
  if (sa) {
    if (auto c = *leading_kind(a) <=> *leading_kind(b); c != 0) return c;
    if (auto c = signal_order(b) <=> signal_order(a); c != 0) return c;
  }
  if (auto c = kind_rank(a.kind()) <=> kind_rank(b.kind()); c != 0) return c;
  switch (a.kind()) {
    case K::Const:
      if (a.value() < b.value()) return std::strong_ordering::less;
      if (b.value() < a.value()) return std::strong_ordering::greater;
      return std::strong_ordering::equal;
    case K::Param:
      return a.name() <=> b.name();
    case K::Time:
      return std::strong_ordering::equal;
    case K::Signal:
      return a.signal_ref() <=> b.signal_ref();
    case K::Deriv:
      if (auto c = a.order() <=> b.order(); c != 0) return c;
      break;
    case K::Apply:
      if (auto c = a.func() <=> b.func(); c != 0) return c;
      break;
    default:
      break;
  }
  const auto ca = a.children();
  const auto cb = b.children();
  const std::size_t n = std::min(ca.size(), cb.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = compare(ca[i], cb[i]); c != 0) return c;
  }
  return ca.size() <=> cb.size();
}

SignalExpr operator+(const SignalExpr& a, const SignalExpr& b) { return SignalExpr::sum({a, b}); }

SignalExpr operator-(const SignalExpr& a) {
  if (a.is_const()) return SignalExpr::constant(-a.value());
  return SignalExpr::product({SignalExpr::constant(-1), a});
}

SignalExpr operator-(const SignalExpr& a, const SignalExpr& b) { return SignalExpr::sum({a, -b}); }

SignalExpr operator*(const SignalExpr& a, const SignalExpr& b) {
  return SignalExpr::product({a, b});
}

SignalExpr operator/(const SignalExpr& a, const SignalExpr& b) {
  return SignalExpr::product({a, SignalExpr::recip(b)});
}

}  // namespace ltic
