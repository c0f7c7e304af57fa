#pragma once

#include <array>
#include <vector>

#include "walker/expr/diff.hpp"
#include "walker/geometry/metric.hpp"

namespace walker {

// Standard: R_ij = d_k G^k_ij - d_j G^k_ik + G^k_kl G^l_ij - G^k_jl G^l_ik.
// Flipped: the negative of that.
enum class RiemannSign { Standard, Flipped };

struct CurvatureBundle {
  std::array<std::array<std::array<Expr, 4>, 4>, 4> christoffel{};  // [k][i][j] = G^k_ij
  Matrix4 ricci{};
  Expr scalar;
};

inline CurvatureBundle ricci(const Metric4& g, RiemannSign sign = RiemannSign::Standard) {
  CurvatureBundle cb;
  Metric4 inv = inverse_metric(g);
  Expr dg[4][4][4];  // dg[l][i][j] = d_l g_ij
  for (std::size_t l = 0; l < 4; ++l)
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) dg[l][i][j] = diff(g.g[i][j], kMetricCoords[l]);
  const Expr half(make_rational(1, 2));
  for (std::size_t k = 0; k < 4; ++k)
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i; j < 4; ++j) {
        std::vector<Expr> terms;
        for (std::size_t l = 0; l < 4; ++l) {
          if (inv.g[k][l].is_zero_literal()) continue;
          terms.push_back(inv.g[k][l] * (dg[i][j][l] + dg[j][i][l] - dg[l][i][j]));
        }
        cb.christoffel[k][i][j] = cb.christoffel[k][j][i] = half * add(std::move(terms));
      }
  const auto& G = cb.christoffel;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i; j < 4; ++j) {
      std::vector<Expr> terms;
      for (std::size_t k = 0; k < 4; ++k) {
        terms.push_back(diff(G[k][i][j], kMetricCoords[k]));
        terms.push_back(-diff(G[k][i][k], kMetricCoords[j]));
        for (std::size_t l = 0; l < 4; ++l) {
          terms.push_back(G[k][k][l] * G[l][i][j]);
          terms.push_back(-(G[k][j][l] * G[l][i][k]));
        }
      }
      Expr r = add(std::move(terms));
      if (sign == RiemannSign::Flipped) r = -r;
      cb.ricci[i][j] = cb.ricci[j][i] = r;
    }
  std::vector<Expr> tr;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (!inv.g[i][j].is_zero_literal()) tr.push_back(inv.g[i][j] * cb.ricci[i][j]);
  cb.scalar = add(std::move(tr));
  return cb;
}

struct EinsteinComponent {
  std::size_t i, j;
  Expr value;  // R_ij - (tau/4) g_ij
};

inline std::vector<EinsteinComponent> einstein_residual(const Metric4& g, RiemannSign sign = RiemannSign::Standard) {
  CurvatureBundle cb = ricci(g, sign);
  Expr quarter = cb.scalar * Expr(make_rational(1, 4));
  std::vector<EinsteinComponent> out;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i; j < 4; ++j) out.push_back({i, j, cb.ricci[i][j] - quarter * g.g[i][j]});
  return out;
}

inline std::string component_name(std::size_t i, std::size_t j) {
  const char* n = "xtyz";
  return std::string("E_") + n[i] + n[j];
}

}  // namespace walker
