#include "ltic/parser.hpp"

#include <cctype>
#include <optional>

#include "ltic/calculus.hpp"
#include "ltic/errors.hpp"

namespace ltic {

std::string format_system(const SystemDef& sys) { return "y = " + to_string(sys.rhs(), true); }

namespace {

enum class Tok { Number, Ident, DerivOp, IntegOp, Plus, Minus, Star, Slash, LParen, RParen,
                 LBracket, RBracket, Comma, Equals, End, Invalid };

struct Token {
  Tok kind = Tok::End;
  std::size_t pos = 0;
  std::string text;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    Token tok;
    tok.pos = pos_;
    if (pos_ >= src_.size()) {
      tok.kind = Tok::End;
      return tok;
    }
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) ++end;
      if (end + 1 < src_.size() && src_[end] == '.' &&
          std::isdigit(static_cast<unsigned char>(src_[end + 1]))) {
        ++end;
        while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) ++end;
      }
      return take(tok, Tok::Number, end);
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < src_.size() && (std::islower(static_cast<unsigned char>(src_[end])) ||
                                   std::isdigit(static_cast<unsigned char>(src_[end])) ||
                                   src_[end] == '_')) {
        ++end;
      }
      return take(tok, Tok::Ident, end);
    }
    switch (c) {
      case 'D': return take(tok, Tok::DerivOp, pos_ + 1);
      case 'I': return take(tok, Tok::IntegOp, pos_ + 1);
      case '+': return take(tok, Tok::Plus, pos_ + 1);
      case '-': return take(tok, Tok::Minus, pos_ + 1);
      case '*': return take(tok, Tok::Star, pos_ + 1);
      case '/': return take(tok, Tok::Slash, pos_ + 1);
      case '(': return take(tok, Tok::LParen, pos_ + 1);
      case ')': return take(tok, Tok::RParen, pos_ + 1);
      case '[': return take(tok, Tok::LBracket, pos_ + 1);
      case ']': return take(tok, Tok::RBracket, pos_ + 1);
      case ',': return take(tok, Tok::Comma, pos_ + 1);
      case '=': return take(tok, Tok::Equals, pos_ + 1);
      default: {
        // Keep multi-byte UTF-8 sequences together in diagnostics.
        std::size_t end = pos_ + 1;
        while (end < src_.size() && (static_cast<unsigned char>(src_[end]) & 0xC0) == 0x80) ++end;
        return take(tok, Tok::Invalid, end);
      }
    }
  }

 private:
  Token take(Token tok, Tok kind, std::size_t end) {
    tok.kind = kind;
    tok.text = std::string(src_.substr(pos_, end - pos_));
    pos_ = end;
    return tok;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lexer_(src) { advance(); }

  SystemDef system(std::string_view src) {
    if (cur_.kind != Tok::Ident || cur_.text != "y") fail("'y'");
    advance();
    expect(Tok::Equals, "'='");
    SignalExpr rhs = expr();
    if (cur_.kind != Tok::End) fail("operator or end of input");
    return SystemDef(rhs, std::string(src));
  }

  SignalExpr bare() {
    SignalExpr e = expr();
    if (cur_.kind != Tok::End) fail("operator or end of input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError(cur_.pos, expected,
                     cur_.kind == Tok::End ? "end of input" : "'" + cur_.text + "'");
  }

  void advance() { cur_ = lexer_.next(); }

  void expect(Tok kind, const char* what) {
    if (cur_.kind != kind) fail(what);
    advance();
  }

  SignalExpr expr() {
    std::vector<SignalExpr> terms{term()};
    while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      const bool minus = cur_.kind == Tok::Minus;
      advance();
      SignalExpr t = term();
      terms.push_back(minus ? -t : t);
    }
    return SignalExpr::sum(std::move(terms));
  }

  SignalExpr term() {
    std::vector<SignalExpr> factors{unary()};
    while (cur_.kind == Tok::Star || cur_.kind == Tok::Slash) {
      const bool divide = cur_.kind == Tok::Slash;
      advance();
      const Token at = cur_;
      SignalExpr f = unary();
      if (divide) {
        if (normalize(f).is_zero()) {
          throw ParseError(at.pos, "nonzero divisor", "'" + at.text + "'");
        }
        f = SignalExpr::recip(f);
      }
      factors.push_back(std::move(f));
    }
    return SignalExpr::product(std::move(factors));
  }

  SignalExpr unary() {
    if (cur_.kind == Tok::Minus) {
      advance();
      return -unary();
    }
    return factor();
  }

  SignalExpr factor() {
    switch (cur_.kind) {
      case Tok::Number: {
        auto value = rational_from_decimal(cur_.text);
        advance();
        return SignalExpr::constant(std::move(value));
      }
      case Tok::Ident: return identifier();
      case Tok::DerivOp: {
        advance();
        expect(Tok::LBracket, "'['");
        SignalExpr operand = expr();
        expect(Tok::Comma, "','");
        if (cur_.kind != Tok::Number || cur_.text.find('.') != std::string::npos ||
            cur_.text.size() > 6 || std::stoi(cur_.text) < 1) {
          fail("positive integer derivative order");
        }
        const int order = std::stoi(cur_.text);
        advance();
        expect(Tok::RBracket, "']'");
        return SignalExpr::deriv(std::move(operand), order);
      }
      case Tok::IntegOp: {
        advance();
        expect(Tok::LBracket, "'['");
        SignalExpr operand = expr();
        expect(Tok::RBracket, "']'");
        return SignalExpr::integ(std::move(operand));
      }
      case Tok::LParen: {
        advance();
        SignalExpr e = expr();
        expect(Tok::RParen, "')'");
        return e;
      }
      default: fail("expression");
    }
  }

  SignalExpr identifier() {
    const std::string name = cur_.text;
    advance();
    if (name == "t") return SignalExpr::time();
    if (name == "x") return SignalExpr::x();
    if (name == "y") return SignalExpr::y();
    if (auto f = func_from_name(name)) {
      expect(Tok::LParen, "'('");
      SignalExpr arg = expr();
      expect(Tok::RParen, "')'");
      return SignalExpr::apply(*f, std::move(arg));
    }
    return SignalExpr::param(name);
  }

  Lexer lexer_;
  Token cur_;
};

}  // namespace

SystemDef parse_system(std::string_view text) { return Parser(text).system(text); }

SignalExpr parse_expr(std::string_view text) { return Parser(text).bare(); }

}  // namespace ltic
