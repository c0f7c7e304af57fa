#pragma once

// Recursive-descent parser for the expression grammar.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' unary)?
//   primary := integer | name | name '(' coords ')' | fn '(' expr ')' | '(' expr ')'
//
// Names: x t y z; a b c with an optional derivative suffix _ij (digits 1-4);
// parameters from the allowed set; fn is one of ln exp atan sqrt.
// A name followed by a coordinate list, e.g. f(t) or f_22(t), is a function
// of those coordinates only.

#include <cctype>
#include <set>
#include <string>
#include <string_view>

#include "walker/expr/expr.hpp"

namespace walker {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

inline const std::set<std::string>& default_parameters() {
  static const std::set<std::string> names = [] {
    std::set<std::string> s{"alpha", "beta", "eps", "epsp", "epz"};
    for (int i = 1; i <= 9; ++i) s.insert("c" + std::to_string(i));
    return s;
  }();
  return names;
}

struct ParseOptions {
  std::set<std::string> extra_params;
  bool any_param = false;  // accept every unreserved identifier as a parameter
};

namespace detail {

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& opts) : s_(text), opts_(opts) {}

  Expr run() {
    Expr e = expr();
    skip_ws();
    if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return e;
  }

 private:
  std::string_view s_;
  const ParseOptions& opts_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const { throw ParseError(msg, at); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Expr expr() {
    std::vector<Expr> terms{term()};
    for (;;) {
      if (accept('+')) terms.push_back(term());
      else if (accept('-')) terms.push_back(-term());
      else break;
    }
    return terms.size() == 1 ? terms.front() : add(std::move(terms));
  }

  Expr term() {
    Expr acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else {
        skip_ws();
        std::size_t at = pos_;
        if (!accept('/')) break;
        Expr d = unary();
        if (d.is_zero_literal()) fail_at("division by zero", at);
        acc = acc / d;
      }
    }
    return acc;
  }

  Expr unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Expr power() {
    Expr b = primary();
    skip_ws();
    std::size_t at = pos_;
    if (!accept('^')) return b;
    Expr e = unary();
    if (!e.is_number()) fail_at("exponent must be a rational constant", at);
    if (b.is_zero_literal() && e.value() <= 0) fail_at("0 raised to a non-positive power", at);
    return pow(b, e.value());
  }

  Expr primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return name();
    fail(std::string("unexpected '") + c + "'");
  }

  Expr number() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == 'e' || s_[pos_] == 'E'))
      fail("decimal literals are not supported; use a rational such as 3/4");
    return Expr(Rational(mpz_class(std::string(s_.substr(start, pos_ - start)))));
  }

  std::uint8_t coord_list() {
    std::uint8_t mask = 0;
    do {
      skip_ws();
      std::size_t at = pos_;
      if (pos_ >= s_.size()) fail("expected a coordinate");
      char c = s_[pos_];
      int digit = c == 'x' ? 1 : c == 't' ? 2 : c == 'y' ? 3 : c == 'z' ? 4 : 0;
      bool alone = pos_ + 1 >= s_.size() || !std::isalnum(static_cast<unsigned char>(s_[pos_ + 1]));
      if (digit == 0 || !alone) fail_at("function arguments must be coordinates", at);
      ++pos_;
      mask |= static_cast<std::uint8_t>(1u << (digit - 1));
    } while (accept(','));
    expect(')');
    return mask;
  }

  std::vector<std::uint8_t> index_digits(std::size_t at, std::string_view digits) const {
    std::vector<std::uint8_t> idx;
    for (std::size_t i = 0; i < digits.size(); ++i) {
      char d = digits[i];
      if (d < '1' || d > '4') fail_at("derivative index digit must be 1-4", at + i);
      idx.push_back(static_cast<std::uint8_t>(d - '0'));
    }
    return idx;
  }

  Expr name() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string id(s_.substr(start, pos_ - start));
    std::string_view digits;
    std::size_t digits_at = 0;
    if (pos_ < s_.size() && s_[pos_] == '_') {
      ++pos_;
      digits_at = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      digits = s_.substr(digits_at, pos_ - digits_at);
      if (digits.empty()) fail("expected derivative digits after '_'");
      if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])))
        fail("unexpected character in derivative suffix");
    }

    if (digits.empty() && (id == "ln" || id == "exp" || id == "atan" || id == "sqrt")) {
      expect('(');
      Expr a = expr();
      expect(')');
      if (id == "ln") return ln(a);
      if (id == "exp") return exp(a);
      if (id == "atan") return atan(a);
      return sqrt(a);
    }

    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '(') {
      if (id.size() == 1 && std::string_view("xtyz").find(id[0]) != std::string_view::npos)
        fail_at("coordinate '" + id + "' is not a function", start);
      ++pos_;
      std::uint8_t mask = coord_list();
      return func(FuncSym{id, mask, index_digits(digits_at, digits)});
    }

    if (id == "a" || id == "b" || id == "c") return dependent(id, index_digits(digits_at, digits));
    if (!digits.empty()) fail_at("derivative suffix on non-function '" + id + "'", start);
    if (id == "x") return coord(Coord::X);
    if (id == "t") return coord(Coord::T);
    if (id == "y") return coord(Coord::Y);
    if (id == "z") return coord(Coord::Z);
    if (id == "ln" || id == "exp" || id == "atan" || id == "sqrt")
      fail_at("function '" + id + "' needs an argument", start);
    if (opts_.any_param || default_parameters().count(id) || opts_.extra_params.count(id))
      return param(id);
    fail_at("unknown identifier '" + id + "'", start);
  }
};

}  // namespace detail

inline Expr parse(std::string_view text, const ParseOptions& opts = {}) {
  try {
    return detail::Parser(text, opts).run();
  } catch (const ExprError& e) {
    throw ParseError(e.what(), text.size());
  }
}

}  // namespace walker
