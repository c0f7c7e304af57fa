#pragma once

#include <array>
#include <string>
#include <vector>

#include "walker/expr/diff.hpp"
#include "walker/expr/expr.hpp"
#include "walker/expr/render.hpp"
#include "walker/expr/zero.hpp"

namespace walker {

// Total space coordinates in component order: x, t, a, b, c.
inline const std::array<Expr, 5>& total_space() {
  static const std::array<Expr, 5> vars{sym::x(), sym::t(), sym::a(), sym::b(), sym::c()};
  return vars;
}

inline const char* total_space_name(std::size_t i) {
  static const char* names[] = {"x", "t", "a", "b", "c"};
  return names[i];
}

// xi^x d_x + xi^t d_t + phi^a d_a + phi^b d_b + phi^c d_c
struct VectorField {
  std::array<Expr, 5> comp{};

  const Expr& xi_x() const { return comp[0]; }
  const Expr& xi_t() const { return comp[1]; }
  const Expr& phi(std::size_t alpha) const { return comp[2 + alpha]; }

  // Derivation action v(f) on a function of the total space.
  Expr apply(const Expr& f) const {
    std::vector<Expr> terms;
    const auto& vars = total_space();
    for (std::size_t k = 0; k < 5; ++k) {
      if (comp[k].is_zero_literal()) continue;
      Expr d = partial(f, vars[k]);
      if (!d.is_zero_literal()) terms.push_back(comp[k] * d);
    }
    return add(std::move(terms));
  }

  friend VectorField operator+(const VectorField& v, const VectorField& w) {
    VectorField out;
    for (std::size_t k = 0; k < 5; ++k) out.comp[k] = v.comp[k] + w.comp[k];
    return out;
  }

  friend VectorField operator*(const Expr& s, const VectorField& v) {
    VectorField out;
    for (std::size_t k = 0; k < 5; ++k) out.comp[k] = s * v.comp[k];
    return out;
  }

  bool is_zero_field() const {
    for (const auto& c : comp)
      if (!is_zero(c).zero()) return false;
    return true;
  }
};

// [v, w]^i = v(w^i) - w(v^i)
inline VectorField bracket(const VectorField& v, const VectorField& w) {
  VectorField out;
  for (std::size_t i = 0; i < 5; ++i) out.comp[i] = v.apply(w.comp[i]) - w.apply(v.comp[i]);
  return out;
}

inline std::string render(const VectorField& v) {
  std::string out;
  for (std::size_t k = 0; k < 5; ++k) {
    if (v.comp[k].is_zero_literal()) continue;
    if (!out.empty()) out += " + ";
    std::string c = render(v.comp[k]);
    bool wrap = v.comp[k].is(Kind::Add);
    out += (wrap ? "(" + c + ")" : c) + "*d_" + total_space_name(k);
  }
  return out.empty() ? "0" : out;
}

// The seven generators in the fixed basis order.
inline const std::array<VectorField, 7>& symmetry_basis() {
  static const std::array<VectorField, 7> basis = [] {
    const Expr x = sym::x(), t = sym::t(), a = sym::a(), b = sym::b(), c = sym::c();
    std::array<VectorField, 7> X;
    X[0].comp = {1, 0, 0, 0, 0};
    X[1].comp = {0, 1, 0, 0, 0};
    X[2].comp = {x, 0, 0, Expr(-2) * b, -c};
    X[3].comp = {0, x, 0, Expr(2) * c, a};
    X[4].comp = {t, 0, Expr(2) * c, 0, b};
    X[5].comp = {0, t, 0, Expr(2) * b, c};
    X[6].comp = {0, 0, a, b, c};
    return X;
  }();
  return basis;
}

}  // namespace walker
