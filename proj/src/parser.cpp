#include "conormal/parser.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "conormal/errors.hpp"

namespace conormal {

namespace {

enum class Tok { Ident, Number, Plus, Minus, Star, Caret, Slash, LParen,
                 RParen, Equals, Comma, Semicolon, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
public:
  explicit Lexer(const std::string& src) : src_(src) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, current_.line, current_.column);
  }

private:
  void advance() {
    skip_space_and_comments();
    current_.line = line_;
    current_.column = col_;
    if (pos_ >= src_.size()) {
      current_.kind = Tok::End;
      current_.text = "<end of input>";
      return;
    }
    char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '_'))
        bump();
      current_.kind = Tok::Ident;
      current_.text = src_.substr(start, pos_ - start);
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_])))
        bump();
      current_.kind = Tok::Number;
      current_.text = src_.substr(start, pos_ - start);
      return;
    }
    bump();
    current_.text = std::string(1, c);
    switch (c) {
      case '+': current_.kind = Tok::Plus; return;
      case '-': current_.kind = Tok::Minus; return;
      case '*': current_.kind = Tok::Star; return;
      case '^': current_.kind = Tok::Caret; return;
      case '/': current_.kind = Tok::Slash; return;
      case '(': current_.kind = Tok::LParen; return;
      case ')': current_.kind = Tok::RParen; return;
      case '=': current_.kind = Tok::Equals; return;
      case ',': current_.kind = Tok::Comma; return;
      case ';': current_.kind = Tok::Semicolon; return;
      default:
        throw ParseError("unexpected character '" + std::string(1, c) + "'",
                         current_.line, current_.column);
    }
  }

  void skip_space_and_comments() {
    for (;;) {
      while (pos_ < src_.size() &&
             std::isspace(static_cast<unsigned char>(src_[pos_])))
        bump();
      if (pos_ < src_.size() && src_[pos_] == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') bump();
        continue;
      }
      break;
    }
  }

  void bump() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& src_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token current_;
};

// recursive-descent polynomial expressions ---------------------------------

class ExprParser {
public:
  ExprParser(Lexer& lex, const RingPtr& ring) : lex_(lex), ring_(ring) {}

  Polynomial expression() {
    bool negate = false;
    if (lex_.peek().kind == Tok::Plus) {
      lex_.take();
    } else if (lex_.peek().kind == Tok::Minus) {
      lex_.take();
      negate = true;
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (lex_.peek().kind == Tok::Plus) {
        lex_.take();
        acc = acc + term();
      } else if (lex_.peek().kind == Tok::Minus) {
        lex_.take();
        acc = acc - term();
      } else {
        break;
      }
    }
    return acc;
  }

private:
  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      Tok k = lex_.peek().kind;
      if (k == Tok::Star) {
        lex_.take();
        acc = acc * factor();
      } else if (k == Tok::Ident || k == Tok::Number || k == Tok::LParen) {
        lex_.fail("missing '*': multiplication must be written explicitly");
      } else if (k == Tok::Slash) {
        lex_.fail("'/' is only allowed between integer literals");
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (lex_.peek().kind == Tok::Caret) {
      lex_.take();
      if (lex_.peek().kind != Tok::Number)
        lex_.fail("exponent must be a nonnegative integer literal");
      long e = to_long(lex_.take());
      if (lex_.peek().kind == Tok::Caret)
        lex_.fail("chained '^' needs parentheses");
      return base.pow(static_cast<int>(e));
    }
    return base;
  }

  Polynomial atom() {
    const Token& t = lex_.peek();
    switch (t.kind) {
      case Tok::Number: {
        long num = to_long(lex_.take());
        if (lex_.peek().kind == Tok::Slash) {
          lex_.take();
          if (lex_.peek().kind != Tok::Number)
            lex_.fail("expected integer denominator");
          long den = to_long(lex_.take());
          if (den == 0) lex_.fail("zero denominator");
          return Polynomial::constant(ring_, Scalar::rational(num, den));
        }
        return Polynomial::constant(ring_, num);
      }
      case Tok::Ident: {
        Token id = lex_.take();
        int idx = ring_->index_of(id.text);
        if (idx < 0)
          throw ParseError("unknown variable '" + id.text + "'", id.line,
                           id.column);
        return Polynomial::variable(ring_, idx);
      }
      case Tok::LParen: {
        lex_.take();
        Polynomial inner = expression();
        if (lex_.peek().kind != Tok::RParen) lex_.fail("expected ')'");
        lex_.take();
        return inner;
      }
      default:
        lex_.fail("expected a number, variable or '('");
    }
  }

  long to_long(const Token& t) {
    try {
      return std::stol(t.text);
    } catch (const std::exception&) {
      throw ParseError("integer literal out of range", t.line, t.column);
    }
  }

  Lexer& lex_;
  RingPtr ring_;
};

std::string expect_ident(Lexer& lex, const std::string& what) {
  if (lex.peek().kind != Tok::Ident) lex.fail("expected " + what);
  return lex.take().text;
}

void expect(Lexer& lex, Tok kind, const std::string& what) {
  if (lex.peek().kind != kind) lex.fail("expected " + what);
  lex.take();
}

} // namespace

const FamilyDecl& SessionInput::family(const std::string& name) const {
  for (const auto& f : families)
    if (f.name == name) return f;
  throw DomainError("no family named '" + name + "'");
}

const FamilyDecl& SessionInput::only_family() const {
  if (families.empty()) throw DomainError("input declares no family");
  if (families.size() > 1)
    throw DomainError("input declares several families; pick one by name");
  return families.front();
}

SessionInput parse_session(const std::string& text) {
  Lexer lex(text);
  SessionInput input;
  while (lex.peek().kind != Tok::End) {
    Token head = lex.peek();
    std::string keyword = expect_ident(lex, "a statement keyword");
    if (keyword == "ring") {
      if (input.ring) throw ParseError("duplicate ring statement", head.line,
                                       head.column);
      std::vector<std::string> names;
      while (lex.peek().kind == Tok::Ident) names.push_back(lex.take().text);
      expect(lex, Tok::Semicolon, "';'");
      if (names.empty())
        throw ParseError("ring statement needs at least one variable",
                         head.line, head.column);
      input.ring = make_ring(std::move(names));
    } else if (keyword == "param") {
      if (!input.ring)
        throw ParseError("param before ring statement", head.line, head.column);
      if (input.parameter)
        throw ParseError("duplicate param statement", head.line, head.column);
      Token name = lex.peek();
      std::string p = expect_ident(lex, "a parameter name");
      expect(lex, Tok::Semicolon, "';'");
      if (input.ring->index_of(p) < 0)
        throw ParseError("parameter '" + p + "' is not a ring variable",
                         name.line, name.column);
      input.parameter = p;
    } else if (keyword == "family") {
      if (!input.ring)
        throw ParseError("family before ring statement", head.line,
                         head.column);
      FamilyDecl decl;
      decl.name = expect_ident(lex, "a family name");
      for (const auto& f : input.families)
        if (f.name == decl.name)
          throw ParseError("duplicate family '" + decl.name + "'", head.line,
                           head.column);
      expect(lex, Tok::Equals, "'='");
      for (;;) {
        ExprParser expr(lex, input.ring);
        decl.gens.push_back(expr.expression());
        if (lex.peek().kind == Tok::Comma) {
          lex.take();
          continue;
        }
        break;
      }
      expect(lex, Tok::Semicolon, "';'");
      input.families.push_back(std::move(decl));
    } else {
      throw ParseError("unknown statement '" + keyword + "'", head.line,
                       head.column);
    }
  }
  if (!input.ring) throw ParseError("input declares no ring", 1, 1);
  return input;
}

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) {
  Lexer lex(text);
  ExprParser expr(lex, ring);
  Polynomial p = expr.expression();
  if (lex.peek().kind != Tok::End) lex.fail("trailing input after expression");
  return p;
}

std::string format_parse_error(const ParseError& err, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  for (int i = 0; i < err.line() && std::getline(in, line); ++i) {
  }
  std::ostringstream out;
  out << "parse error at line " << err.line() << ", column " << err.column()
      << ": " << err.what() << "\n";
  out << "  " << line << "\n";
  out << "  " << std::string(std::max(0, err.column() - 1), ' ') << "^";
  return out.str();
}

} // namespace conormal
