#pragma once

#include <utility>
#include <vector>

#include "walker/expr/diff.hpp"
#include "walker/jets/jet_space.hpp"
#include "walker/liealg/vector_field.hpp"

namespace walker {

// Coefficient of the prolonged field on each jet variable, base variables
// (x, t, a, b, c) first.
struct Prolongation {
  std::vector<std::pair<Expr, Expr>> coeffs;

  const Expr& on(const Expr& var) const {
    for (const auto& [v, c] : coeffs)
      if (v == var) return c;
    throw ExprError("no prolonged coefficient for " + var.key());
  }

  // pr v (f) for f a function on the second-order jet space.
  Expr apply(const Expr& f) const {
    std::vector<Expr> terms;
    for (const auto& [v, c] : coeffs) {
      if (c.is_zero_literal()) continue;
      Expr d = partial(f, v);
      if (!d.is_zero_literal()) terms.push_back(c * d);
    }
    return add(std::move(terms));
  }
};

// phi^{J,i} = D_i phi^J - sum_k (D_i xi^k) u_{J,k}
inline Prolongation prolong2(const VectorField& v) {
  Prolongation pr;
  const Coord dirs[2] = {Coord::X, Coord::T};
  const Expr xi[2] = {v.xi_x(), v.xi_t()};
  Expr dxi[2][2];
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) dxi[i][k] = diff(xi[k], dirs[i]);
  pr.coeffs.push_back({sym::x(), xi[0]});
  pr.coeffs.push_back({sym::t(), xi[1]});
  for (std::size_t alpha = 0; alpha < 3; ++alpha) pr.coeffs.push_back({jet_symbol(alpha, {}), v.phi(alpha)});

  auto step = [&](std::size_t alpha, const Expr& phi_j, std::vector<std::uint8_t> j, int i) {
    std::vector<Expr> terms{diff(phi_j, dirs[i])};
    for (int k = 0; k < 2; ++k) {
      if (dxi[i][k].is_zero_literal()) continue;
      auto jk = j;
      jk.push_back(static_cast<std::uint8_t>(k + 1));
      terms.push_back(-(dxi[i][k] * jet_symbol(alpha, jk)));
    }
    return add(std::move(terms));
  };

  Expr first[3][2];
  for (std::size_t alpha = 0; alpha < 3; ++alpha)
    for (int i = 0; i < 2; ++i) {
      first[alpha][i] = step(alpha, v.phi(alpha), {}, i);
      pr.coeffs.push_back({jet_symbol(alpha, {static_cast<std::uint8_t>(i + 1)}), first[alpha][i]});
    }
  for (std::size_t alpha = 0; alpha < 3; ++alpha)
    for (int i = 0; i < 2; ++i)
      for (int k = i; k < 2; ++k) {
        std::vector<std::uint8_t> j{static_cast<std::uint8_t>(i + 1)};
        auto jk = j;
        jk.push_back(static_cast<std::uint8_t>(k + 1));
        pr.coeffs.push_back({jet_symbol(alpha, jk), step(alpha, first[alpha][i], j, k)});
      }
  return pr;
}

}  // namespace walker
