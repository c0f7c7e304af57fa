#pragma once

#include <array>
#include <functional>
#include <string>

#include "walker/expr/expr.hpp"
#include "walker/expr/render.hpp"

namespace walker {

using Matrix4 = std::array<std::array<Expr, 4>, 4>;

// Metric in coordinate order (x, t, y, z).
struct Metric4 {
  Matrix4 g{};

  const Expr& operator()(std::size_t i, std::size_t j) const { return g[i][j]; }
};

inline constexpr Coord kMetricCoords[4] = {Coord::X, Coord::T, Coord::Y, Coord::Z};

// 2(dx dy + dt dz) + a dy^2 + b dz^2 + 2c dy dz
inline Metric4 build_metric(const Expr& a, const Expr& b, const Expr& c) {
  Metric4 m;
  for (auto& row : m.g) row.fill(Expr(0));
  m.g[0][2] = m.g[2][0] = Expr(1);
  m.g[1][3] = m.g[3][1] = Expr(1);
  m.g[2][2] = a;
  m.g[3][3] = b;
  m.g[2][3] = m.g[3][2] = c;
  return m;
}

inline Metric4 walker_metric() { return build_metric(sym::a(), sym::b(), sym::c()); }

// Closed-form inverse of the Walker form.
inline Metric4 inverse_metric(const Metric4& g) {
  const Expr& a = g.g[2][2];
  const Expr& b = g.g[3][3];
  const Expr& c = g.g[2][3];
  Metric4 inv;
  for (auto& row : inv.g) row.fill(Expr(0));
  inv.g[0][0] = -a;
  inv.g[0][1] = inv.g[1][0] = -c;
  inv.g[1][1] = -b;
  inv.g[0][2] = inv.g[2][0] = Expr(1);
  inv.g[1][3] = inv.g[3][1] = Expr(1);
  return inv;
}

inline Matrix4 matmul(const Matrix4& p, const Matrix4& q) {
  Matrix4 out;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      std::vector<Expr> terms;
      for (std::size_t k = 0; k < 4; ++k) terms.push_back(p[i][k] * q[k][j]);
      out[i][j] = add(std::move(terms));
    }
  return out;
}

inline Expr determinant(const Matrix4& m) {
  // Laplace expansion along the first row, recursive on minors
  std::function<Expr(const std::vector<std::vector<Expr>>&)> det = [&](const std::vector<std::vector<Expr>>& a) {
    std::size_t n = a.size();
    if (n == 1) return a[0][0];
    std::vector<Expr> terms;
    for (std::size_t col = 0; col < n; ++col) {
      if (a[0][col].is_zero_literal()) continue;
      std::vector<std::vector<Expr>> minor;
      for (std::size_t r = 1; r < n; ++r) {
        std::vector<Expr> row;
        for (std::size_t c = 0; c < n; ++c)
          if (c != col) row.push_back(a[r][c]);
        minor.push_back(std::move(row));
      }
      Expr t = a[0][col] * det(minor);
      terms.push_back(col % 2 ? -t : t);
    }
    return add(std::move(terms));
  };
  std::vector<std::vector<Expr>> a(4);
  for (std::size_t i = 0; i < 4; ++i) a[i].assign(m[i].begin(), m[i].end());
  return det(a);
}

// Line element in the style 2(dx dy + dt dz) + a dy^2 + b dz^2 + 2c dy dz.
inline std::string line_element(const Metric4& g) {
  auto wrap = [](const Expr& e) {
    std::string s = render(e);
    return e.is(Kind::Add) ? "(" + s + ")" : s;
  };
  std::string out = "2(dx dy + dt dz)";
  if (!g.g[2][2].is_zero_literal()) out += " + " + wrap(g.g[2][2]) + " dy^2";
  if (!g.g[3][3].is_zero_literal()) out += " + " + wrap(g.g[3][3]) + " dz^2";
  if (!g.g[2][3].is_zero_literal()) out += " + " + wrap(Expr(2) * g.g[2][3]) + " dy dz";
  return out;
}

}  // namespace walker
