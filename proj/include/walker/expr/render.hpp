#pragma once

// Text rendering in the parser's grammar, so parse(render(e)) == e.

#include <ostream>
#include <string>
#include <vector>

#include "walker/expr/expr.hpp"

namespace walker {

namespace detail {

enum Prec : int { kPrecSum = 1, kPrecProduct = 2, kPrecUnary = 3, kPrecPower = 4, kPrecAtom = 5 };

void render_into(const Expr& e, std::string& out, int ctx);

inline std::string render_rational_exponent(const Rational& q) {
  if (is_integer(q) && q >= 0) return q.get_str();
  return "(" + q.get_str() + ")";
}

// Splits a term into coefficient, numerator factors and positive-power denominator factors.
inline void split_fraction(const Expr& e, Rational& coeff, std::vector<Expr>& num,
                           std::vector<Expr>& den) {
  coeff = 1;
  auto place = [&](const Expr& f) {
    if (f.is(Kind::Pow) && f.exponent() < 0) den.push_back(pow(f.base(), -f.exponent()));
    else num.push_back(f);
  };
  if (e.is(Kind::Mul)) {
    coeff = e.coeff();
    for (const auto& f : e.ops()) place(f);
  } else {
    place(e);
  }
}

inline void render_factor_list(const std::vector<Expr>& fs, std::string& out) {
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) out += '*';
    render_into(fs[i], out, kPrecProduct + 1);
  }
}

// Renders a product with non-negative coefficient as "num/den".
inline void render_product(const Rational& coeff, const std::vector<Expr>& num,
                           const std::vector<Expr>& den, std::string& out) {
  const mpz_class& p = coeff.get_num();
  const mpz_class& q = coeff.get_den();
  std::vector<std::string> top;
  if (p != 1 || num.empty()) top.push_back(p.get_str());
  std::string nums;
  render_factor_list(num, nums);
  if (!nums.empty()) top.push_back(nums);
  for (std::size_t i = 0; i < top.size(); ++i) {
    if (i) out += '*';
    out += top[i];
  }
  if (q == 1 && den.empty()) return;
  out += '/';
  std::size_t count = den.size() + (q != 1 ? 1 : 0);
  if (count > 1) out += '(';
  bool first = true;
  if (q != 1) {
    out += q.get_str();
    first = false;
  }
  for (const auto& d : den) {
    if (!first) out += '*';
    render_into(d, out, count > 1 ? kPrecProduct + 1 : kPrecPower);
    first = false;
  }
  if (count > 1) out += ')';
}

inline void render_term(const Expr& e, std::string& out, int ctx) {
  Rational coeff;
  std::vector<Expr> num, den;
  split_fraction(e, coeff, num, den);
  bool negative = coeff < 0;
  bool compound = !den.empty() || coeff != 1 || num.size() > 1;
  bool paren = compound && ctx > kPrecProduct;
  if (paren) out += '(';
  if (negative) out += '-';
  render_product(abs(coeff), num, den, out);
  if (paren) out += ')';
}

inline void render_into(const Expr& e, std::string& out, int ctx) {
  switch (e.kind()) {
    case Kind::Number: {
      const Rational& v = e.value();
      bool paren = (v < 0 && ctx > kPrecSum) || (!is_integer(v) && ctx > kPrecProduct);
      if (paren) out += '(';
      out += v.get_str();
      if (paren) out += ')';
      return;
    }
    case Kind::Coord:
    case Kind::Param:
    case Kind::Func:
      out += e.key();
      return;
    case Kind::Ln:
    case Kind::Exp:
    case Kind::Atan:
      out += e.is(Kind::Ln) ? "ln(" : e.is(Kind::Exp) ? "exp(" : "atan(";
      render_into(e.arg(), out, 0);
      out += ')';
      return;
    case Kind::Pow: {
      const Rational& q = e.exponent();
      if (q < 0) {
        render_term(e, out, ctx);
        return;
      }
      if (q == make_rational(1, 2)) {
        out += "sqrt(";
        render_into(e.base(), out, 0);
        out += ')';
        return;
      }
      bool paren = ctx > kPrecPower;
      if (paren) out += '(';
      render_into(e.base(), out, kPrecAtom);
      out += '^';
      out += render_rational_exponent(q);
      if (paren) out += ')';
      return;
    }
    case Kind::Mul:
      render_term(e, out, ctx);
      return;
    case Kind::Add: {
      bool paren = ctx > kPrecSum;
      if (paren) out += '(';
      std::vector<Expr> terms = terms_of(e);
      for (std::size_t i = 0; i < terms.size(); ++i) {
        const Expr& t = terms[i];
        bool neg = (t.is_number() && t.value() < 0) || (t.is(Kind::Mul) && t.coeff() < 0);
        if (i == 0) {
          render_into(t, out, kPrecSum);
          continue;
        }
        if (neg) {
          out += " - ";
          render_into(-t, out, kPrecSum + 1);
        } else {
          out += " + ";
          render_into(t, out, kPrecSum + 1);
        }
      }
      if (paren) out += ')';
      return;
    }
  }
}

}  // namespace detail

inline std::string render(const Expr& e) {
  std::string out;
  detail::render_into(e, out, 0);
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Expr& e) { return os << render(e); }

}  // namespace walker
