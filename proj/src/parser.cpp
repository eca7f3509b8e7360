#include "mlms/parser.hpp"

#include <cctype>
#include <string>

#include "mlms/error.hpp"

namespace mlms {

namespace {

enum class Tok { ident, bottom, neg, circ, cneg, nabla, box, diamond, conj, disj, imp, impl, lparen, rparen, end };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    if (pos_ >= src_.size()) return {Tok::end, start, ""};
    const char c = src_[pos_];
    auto two = [&](char second) { return pos_ + 1 < src_.size() && src_[pos_ + 1] == second; };
    if (std::islower(static_cast<unsigned char>(c))) {
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      return {Tok::ident, start, std::string(src_.substr(start, pos_ - start))};
    }
    switch (c) {
      case '#': ++pos_; return {Tok::bottom, start, "#"};
      case '!': ++pos_; return {Tok::neg, start, "!"};
      case '@': ++pos_; return {Tok::circ, start, "@"};
      case '~': ++pos_; return {Tok::cneg, start, "~"};
      case 'N': ++pos_; return {Tok::nabla, start, "N"};
      case '&': ++pos_; return {Tok::conj, start, "&"};
      case '|': ++pos_; return {Tok::disj, start, "|"};
      case '(': ++pos_; return {Tok::lparen, start, "("};
      case ')': ++pos_; return {Tok::rparen, start, ")"};
      case '[':
        if (two(']')) {
          pos_ += 2;
          return {Tok::box, start, "[]"};
        }
        break;
      case '<':
        if (two('>')) {
          pos_ += 2;
          return {Tok::diamond, start, "<>"};
        }
        break;
      case '-':
        if (two('>')) {
          pos_ += 2;
          return {Tok::imp, start, "->"};
        }
        break;
      case '=':
        if (two('>')) {
          pos_ += 2;
          return {Tok::impl, start, "=>"};
        }
        break;
      default: break;
    }
    throw Error(ErrorKind::unknown_token,
                "unknown token '" + std::string(1, c) + "' at column " + std::to_string(start + 1));
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lexer_(src) { advance(); }

  Formula parse_all() {
    Formula f = implication();
    if (cur_.kind != Tok::end) fail("unexpected '" + cur_.text + "'");
    return f;
  }

 private:
  void advance() { cur_ = lexer_.next(); }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::syntax_error, what + " at column " + std::to_string(cur_.pos + 1));
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (cur_.kind == Tok::imp || cur_.kind == Tok::impl) {
      Op op = cur_.kind == Tok::imp ? Op::imp : Op::impl;
      advance();
      return Formula::binary(op, std::move(lhs), implication());
    }
    return lhs;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (cur_.kind == Tok::disj) {
      advance();
      f = Formula::disj(std::move(f), conjunction());
    }
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (cur_.kind == Tok::conj) {
      advance();
      f = Formula::conj(std::move(f), unary());
    }
    return f;
  }

  Formula unary() {
    Op op;
    switch (cur_.kind) {
      case Tok::neg: op = Op::neg; break;
      case Tok::circ: op = Op::circ; break;
      case Tok::cneg: op = Op::cneg; break;
      case Tok::nabla: op = Op::nabla; break;
      case Tok::box: op = Op::box; break;
      case Tok::diamond: op = Op::diamond; break;
      default: return primary();
    }
    advance();
    return Formula::unary(op, unary());
  }

  Formula primary() {
    switch (cur_.kind) {
      case Tok::ident: {
        Formula f = Formula::atom(cur_.text);
        advance();
        return f;
      }
      case Tok::bottom: advance(); return Formula::bottom();
      case Tok::lparen: {
        advance();
        Formula f = implication();
        if (cur_.kind != Tok::rparen) fail("expected ')'");
        advance();
        return f;
      }
      case Tok::end: fail("unexpected end of input");
      default: fail("unexpected '" + cur_.text + "'");
    }
  }

  Lexer lexer_;
  Token cur_{Tok::end, 0, ""};
};

}  // namespace

Formula parse(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace mlms
