#include "qlink/parse.hpp"

#include <cctype>
#include <string>

#include "qlink/errors.hpp"

namespace qlink {
namespace {

struct Affine {
  long m = 0;  // coefficient of M
  long c = 0;
};

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& options) : text_(text), options_(options) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  static bool starts_primary(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'q' || c == 'x' || c == 'y' || c == '(' ||
           c == '[';
  }

  Integer integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  MultiPoly expr() {
    MultiPoly acc;
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    MultiPoly t = term();
    acc = negate ? -t : t;
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MultiPoly term() {
    MultiPoly acc = power();
    for (;;) {
      if (accept('*')) {
        acc *= power();
      } else if (starts_primary(peek())) {
        acc *= power();
      } else {
        return acc;
      }
    }
  }

  MultiPoly power() {
    char c = peek();
    bool is_q = (c == 'q');
    MultiPoly base = primary();
    if (!accept('^')) return base;
    Affine e = exponent();
    if (e.m != 0) {
      if (!is_q || !options_.carrier_exponents) fail("symbolic exponent not allowed here");
      if (e.m < 0 || e.c < 0) fail("negative exponent");
      return monomial(static_cast<std::uint32_t>(e.c), static_cast<std::uint32_t>(e.m));
    }
    if (e.c < 0) fail("negative exponent");
    return base.pow(static_cast<unsigned>(e.c));
  }

  MultiPoly primary() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return MultiPoly(integer());
    if (c == 'q' || c == 'x' || c == 'y') {
      ++pos_;
      return c == 'q' ? var_q() : (c == 'x' ? var_x() : var_y());
    }
    if (accept('(')) {
      MultiPoly p = expr();
      expect(')');
      return p;
    }
    if (accept('[')) {
      MultiPoly p = expr();
      expect(']');
      return p;
    }
    fail("expected a term");
  }

  Affine exponent() {
    if (accept('{')) {
      Affine a = affine_expr();
      expect('}');
      return a;
    }
    if (accept('(')) {
      Affine a = affine_expr();
      expect(')');
      return a;
    }
    if (peek() == '-') fail("negative exponent");
    return Affine{0, integer().get_si()};
  }

  Affine affine_expr() {
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Affine acc = affine_term();
    if (negate) acc = {-acc.m, -acc.c};
    for (;;) {
      if (accept('+')) {
        Affine t = affine_term();
        acc = {acc.m + t.m, acc.c + t.c};
      } else if (accept('-')) {
        Affine t = affine_term();
        acc = {acc.m - t.m, acc.c - t.c};
      } else {
        return acc;
      }
    }
  }

  Affine affine_term() {
    Affine acc = affine_atom();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
      } else if (!(std::isdigit(static_cast<unsigned char>(c)) || c == 'M' || c == '(')) {
        return acc;
      }
      Affine rhs = affine_atom();
      if (acc.m != 0 && rhs.m != 0) fail("exponent is not affine in M");
      acc = {acc.m * rhs.c + rhs.m * acc.c, acc.c * rhs.c};
    }
  }

  Affine affine_atom() {
    char c = peek();
    if (c == 'M') {
      ++pos_;
      return {1, 0};
    }
    if (accept('(')) {
      Affine a = affine_expr();
      expect(')');
      return a;
    }
    return {0, integer().get_si()};
  }

  std::string_view text_;
  ParseOptions options_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const ParseOptions& options) {
  return Parser(text, options).parse();
}

}  // namespace qlink
