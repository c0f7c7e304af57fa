#pragma once

// LaTeX rendering for reports. Output only; there is no LaTeX parser.

#include <string>
#include <vector>

#include "walker/expr/render.hpp"

namespace walker {

namespace detail {

void latex_into(const Expr& e, std::string& out, int ctx);

inline std::string latex_name(const std::string& n) {
  if (n == "alpha") return "\\alpha";
  if (n == "beta") return "\\beta";
  if (n == "eps") return "\\varepsilon";
  if (n == "epsp") return "\\varepsilon'";
  if (n == "epz") return "\\epsilon";
  std::size_t k = 0;
  while (k < n.size() && std::isalpha(static_cast<unsigned char>(n[k]))) ++k;
  if (k == n.size() || k == 0) return n;
  return n.substr(0, k) + "_{" + n.substr(k) + "}";
}

inline std::string latex_leaf(const Expr& e) {
  if (e.is(Kind::Coord) || e.is(Kind::Param)) return latex_name(e.key());
  const FuncSym& f = e.func();
  std::string out = f.name;
  if (!f.index.empty()) {
    out += "_{";
    for (auto d : f.index) out += char('0' + d);
    out += "}";
  }
  if (f.name != "a" && f.name != "b" && f.name != "c") {
    // reduced functions show their arguments: f(t), a(x,t)
    std::string key = e.key();
    auto p = key.find('(');
    if (p != std::string::npos) out += key.substr(p);
  }
  return out;
}

inline std::string latex_factors(const std::vector<Expr>& fs) {
  std::string out;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) out += " ";
    latex_into(fs[i], out, kPrecProduct + 1);
  }
  return out;
}

inline void latex_term(const Expr& e, std::string& out, int ctx) {
  Rational coeff;
  std::vector<Expr> num, den;
  split_fraction(e, coeff, num, den);
  bool negative = coeff < 0;
  Rational c = abs(coeff);
  bool paren = negative && ctx > kPrecSum;
  if (paren) out += "\\left(";
  if (negative) out += "-";
  std::string top;
  if (c.get_num() != 1 || num.empty()) top = c.get_num().get_str();
  std::string nums = latex_factors(num);
  if (!nums.empty()) top += (top.empty() ? "" : " ") + nums;
  if (c.get_den() == 1 && den.empty()) {
    out += top;
  } else {
    std::string bottom = c.get_den() != 1 ? c.get_den().get_str() : "";
    std::string dens = latex_factors(den);
    if (!dens.empty()) bottom += (bottom.empty() ? "" : " ") + dens;
    out += "\\frac{" + top + "}{" + bottom + "}";
  }
  if (paren) out += "\\right)";
}

inline void latex_into(const Expr& e, std::string& out, int ctx) {
  switch (e.kind()) {
    case Kind::Number: {
      const Rational& v = e.value();
      bool paren = v < 0 && ctx > kPrecSum;
      if (paren) out += "\\left(";
      if (is_integer(v)) out += v.get_str();
      else out += std::string(v < 0 ? "-" : "") + "\\frac{" + Rational(abs(v)).get_num().get_str() + "}{" + v.get_den().get_str() + "}";
      if (paren) out += "\\right)";
      return;
    }
    case Kind::Coord:
    case Kind::Param:
    case Kind::Func:
      out += latex_leaf(e);
      return;
    case Kind::Ln:
    case Kind::Exp:
    case Kind::Atan:
      out += e.is(Kind::Ln) ? "\\ln\\left(" : e.is(Kind::Exp) ? "\\exp\\left(" : "\\arctan\\left(";
      latex_into(e.arg(), out, 0);
      out += "\\right)";
      return;
    case Kind::Pow: {
      const Rational& q = e.exponent();
      if (q < 0) {
        latex_term(e, out, ctx);
        return;
      }
      if (q == make_rational(1, 2)) {
        out += "\\sqrt{";
        latex_into(e.base(), out, 0);
        out += "}";
        return;
      }
      bool wrap = !(e.base().is(Kind::Coord) || e.base().is(Kind::Param) || e.base().is(Kind::Func) ||
                    (e.base().is_number() && e.base().value() > 0 && is_integer(e.base().value())));
      if (wrap) out += "\\left(";
      latex_into(e.base(), out, 0);
      if (wrap) out += "\\right)";
      out += "^{" + q.get_str() + "}";
      return;
    }
    case Kind::Mul:
      latex_term(e, out, ctx);
      return;
    case Kind::Add: {
      bool paren = ctx > kPrecSum;
      if (paren) out += "\\left(";
      std::vector<Expr> terms = terms_of(e);
      for (std::size_t i = 0; i < terms.size(); ++i) {
        const Expr& t = terms[i];
        bool neg = (t.is_number() && t.value() < 0) || (t.is(Kind::Mul) && t.coeff() < 0);
        if (i == 0) {
          latex_into(t, out, kPrecSum);
        } else if (neg) {
          out += " - ";
          latex_into(-t, out, kPrecSum + 1);
        } else {
          out += " + ";
          latex_into(t, out, kPrecSum + 1);
        }
      }
      if (paren) out += "\\right)";
      return;
    }
  }
}

}  // namespace detail

inline std::string to_latex(const Expr& e) {
  std::string out;
  detail::latex_into(e, out, 0);
  return out;
}

}  // namespace walker
