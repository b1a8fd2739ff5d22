#include "poly.hpp"

#include <algorithm>

#include "ltic/errors.hpp"

namespace ltic::detail {

namespace {

std::strong_ordering compare_factors(const std::vector<const Factor*>& a,
                                     const std::vector<const Factor*>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = compare(a[i]->atom, b[i]->atom); c != 0) return c;
    if (auto c = a[i]->exp <=> b[i]->exp; c != 0) return c;
  }
  return a.size() <=> b.size();
}

void split(const Monomial& m, std::vector<const Factor*>& sig, std::vector<const Factor*>& coef) {
  for (const auto& f : m) (f.atom.contains_signal() ? sig : coef).push_back(&f);
}

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && compare(ia->atom, ib->atom) < 0)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || compare(ib->atom, ia->atom) < 0) {
      out.push_back(*ib++);
    } else {
      const int e = ia->exp + ib->exp;
      if (e != 0) out.push_back({ia->atom, e});
      ++ia;
      ++ib;
    }
  }
  return out;
}

Poly power(const Poly& p, int k) {
  Poly out = Poly::constant(1);
  for (int i = 0; i < k; ++i) out = out * p;
  return out;
}

Monomial inverse(const Monomial& m) {
  Monomial out = m;
  for (auto& f : out) f.exp = -f.exp;
  return out;
}

}  // namespace

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
  std::vector<const Factor*> sa, ca, sb, cb;
  split(a, sa, ca);
  split(b, sb, cb);
  // Signal-free terms go last.
  if (sa.empty() != sb.empty()) return sb.empty();
  if (auto c = compare_factors(sa, sb); c != 0) return c < 0;
  if (ca.size() != cb.size()) return ca.size() < cb.size();
  return compare_factors(ca, cb) < 0;
}

bool is_constant_atom(const SignalExpr& atom) {
  return !atom.contains_time() && !atom.contains_signal();
}

Poly Poly::constant(const Rational& c) {
  Poly p;
  if (c != 0) p.terms_[{}] = c;
  return p;
}

Poly Poly::atom(const SignalExpr& atom, int exp) {
  return monomial(1, Monomial{{atom, exp}});
}

Poly Poly::monomial(const Rational& c, const Monomial& m) {
  if (c == 0) return {};
  Monomial kept;
  Poly expansion = Poly::constant(1);
  for (const auto& f : m) {
    if (f.atom.kind() == SignalExpr::Kind::Recip && f.exp < 0) {
      expansion = expansion * power(to_poly(f.atom.child()), -f.exp);
    } else {
      kept.push_back(f);
    }
  }
  Poly p;
  p.terms_[kept] = c;
  if (expansion == Poly::constant(1)) return p;
  return p * expansion;
}

std::optional<Rational> Poly::as_constant() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first.empty()) return terms_.begin()->second;
  return std::nullopt;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      const Monomial m = multiply(ma, mb);
      const bool needs_expansion = std::any_of(m.begin(), m.end(), [](const Factor& f) {
        return f.atom.kind() == SignalExpr::Kind::Recip && f.exp < 0;
      });
      if (needs_expansion) {
        out += Poly::monomial(ca * cb, m);
      } else {
        out.add_term(m, ca * cb);
      }
    }
  }
  return out;
}

Poly Poly::scaled(const Rational& c) const {
  if (c == 0) return {};
  Poly out = *this;
  for (auto& [m, v] : out.terms_) v *= c;
  return out;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib) {
    if (ia->second != ib->second) return false;
    if (ia->first.size() != ib->first.size()) return false;
    for (std::size_t i = 0; i < ia->first.size(); ++i) {
      if (ia->first[i].exp != ib->first[i].exp) return false;
      if (!(ia->first[i].atom == ib->first[i].atom)) return false;
    }
  }
  return true;
}

SignalExpr term_expr(const Rational& c, const Monomial& m) {
  std::vector<SignalExpr> factors;
  if (c != 1 || m.empty()) factors.push_back(SignalExpr::constant(c));
  for (const auto& f : m) {
    if (f.exp > 0) {
      for (int i = 0; i < f.exp; ++i) factors.push_back(f.atom);
    } else {
      for (int i = 0; i < -f.exp; ++i) factors.push_back(SignalExpr::recip(f.atom));
    }
  }
  return SignalExpr::product(std::move(factors));
}

SignalExpr Poly::to_expr() const {
  std::vector<SignalExpr> terms;
  terms.reserve(terms_.size());
  for (const auto& [m, c] : terms_) terms.push_back(term_expr(c, m));
  return SignalExpr::sum(std::move(terms));
}

namespace {

using K = SignalExpr::Kind;

/// Splits c*m into the t-free, signal-free part and the rest.
void split_constant(const Monomial& m, Monomial& constant_part, Monomial& rest) {
  for (const auto& f : m) (is_constant_atom(f.atom) ? constant_part : rest).push_back(f);
}

Poly integrate(const Poly& p) {
  Poly out;
  const SignalExpr t = SignalExpr::time();
  for (const auto& [m, c] : p.terms()) {
    Monomial cpart, rest;
    split_constant(m, cpart, rest);
    const Poly coef = Poly::monomial(c, cpart);
    if (rest.empty()) {
      out += coef * Poly::atom(t);
    } else if (rest.size() == 1 && rest[0].atom.kind() == K::Time && rest[0].exp >= 1) {
      const int k = rest[0].exp;
      out += coef.scaled(Rational(1, k + 1)) * Poly::atom(t, k + 1);
    } else {
      out += coef * Poly::atom(SignalExpr::integ(Poly::monomial(1, rest).to_expr()));
    }
  }
  return out;
}

Poly differentiate_n(const Poly& p, int order) {
  Poly out;
  for (const auto& [m, c] : p.terms()) {
    Monomial cpart, rest;
    split_constant(m, cpart, rest);
    if (rest.empty()) continue;
    const Poly coef = Poly::monomial(c, cpart);
    const Poly body = Poly::monomial(1, rest);
    try {
      Poly d = body;
      for (int i = 0; i < order; ++i) d = derivative(d);
      out += coef * d;
    } catch (const UnsupportedDifferentiation&) {
      out += coef * Poly::atom(SignalExpr::deriv(body.to_expr(), order));
    }
  }
  return out;
}

Poly reciprocal(const Poly& p) {
  if (p.is_zero()) throw DivisionByZero("reciprocal of zero");
  if (p.terms().size() == 1) {
    const auto& [m, c] = *p.terms().begin();
    return Poly::monomial(1 / c, inverse(m));
  }
  const Rational lead = p.terms().begin()->second;
  return Poly::atom(SignalExpr::recip(p.scaled(1 / lead).to_expr())).scaled(1 / lead);
}

Poly apply(Func f, const Poly& p) {
  if (f == Func::Sq) return p * p;
  if (auto c = p.as_constant()) {
    if (f == Func::Abs) return Poly::constant(boost::multiprecision::abs(*c));
    if (*c == 0) return Poly::constant(f == Func::Exp ? 1 : 0);
  }
  return Poly::atom(SignalExpr::apply(f, p.to_expr()));
}

Poly atom_derivative(const SignalExpr& a) {
  switch (a.kind()) {
    case K::Param:
      return {};
    case K::Time:
      return Poly::constant(1);
    case K::Signal:
      return Poly::atom(SignalExpr::deriv(a, 1));
    case K::Deriv:
      return Poly::atom(SignalExpr::deriv(a.child(), a.order() + 1));
    case K::Integ:
      return to_poly(a.child());
    case K::Recip: {
      const Poly du = derivative(to_poly(a.child()));
      if (du.is_zero()) return {};
      return (Poly::atom(a, 2) * du).scaled(-1);
    }
    case K::Apply:
      if (is_constant_atom(a)) return {};
      throw UnsupportedDifferentiation("cannot differentiate " + to_string(a));
    default:
      throw std::logic_error("non-atomic factor in monomial");
  }
}

}  // namespace

Poly derivative(const Poly& p) {
  Poly out;
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      const Poly da = atom_derivative(m[i].atom);
      if (da.is_zero()) continue;
      Monomial rest = m;
      if (--rest[i].exp == 0) rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      out += Poly::monomial(c * m[i].exp, rest) * da;
    }
  }
  return out;
}

Poly to_poly(const SignalExpr& e) {
  switch (e.kind()) {
    case K::Const:
      return Poly::constant(e.value());
    case K::Param:
    case K::Time:
    case K::Signal:
      return Poly::atom(e);
    case K::Sum: {
      Poly out;
      for (const auto& c : e.children()) out += to_poly(c);
      return out;
    }
    case K::Product: {
      Poly out = Poly::constant(1);
      for (const auto& c : e.children()) {
        out = out * to_poly(c);
        if (out.is_zero()) break;
      }
      return out;
    }
    case K::Deriv:
      return differentiate_n(to_poly(e.child()), e.order());
    case K::Integ:
      return integrate(to_poly(e.child()));
    case K::Recip:
      return reciprocal(to_poly(e.child()));
    case K::Apply:
      return apply(e.func(), to_poly(e.child()));
  }
  throw std::logic_error("unknown expression kind");
}

}  // namespace ltic::detail
