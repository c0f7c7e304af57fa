#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <vector>

#include "walker/expr/eval.hpp"
#include "walker/expr/substitute.hpp"
#include "walker/liealg/algebra.hpp"

namespace walker {

// Minus: Ad(exp(sX))Y = Y - s[X,Y] + s^2/2 [X,[X,Y]] - ..., i.e. exp(-s ad X).
// Plus:  exp(+s ad X).
enum class AdjointSign { Minus, Plus };

inline const char* adjoint_sign_name(AdjointSign s) { return s == AdjointSign::Minus ? "minus" : "plus"; }

using EMatrix = std::vector<std::vector<Expr>>;

inline EMatrix to_ematrix(const RMatrix& m) {
  EMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (const auto& x : m[i]) out[i].push_back(Expr(x));
  return out;
}

inline EMatrix emul(const EMatrix& a, const EMatrix& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  EMatrix c(n, std::vector<Expr>(m, Expr(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<Expr> terms;
      for (std::size_t l = 0; l < k; ++l)
        if (!a[i][l].is_zero_literal() && !b[l][j].is_zero_literal()) terms.push_back(a[i][l] * b[l][j]);
      c[i][j] = add(std::move(terms));
    }
  return c;
}

inline CoeffVector mat_apply(const EMatrix& m, const CoeffVector& v) {
  CoeffVector out;
  for (std::size_t i = 0; i < 7; ++i) {
    std::vector<Expr> terms;
    for (std::size_t j = 0; j < 7; ++j)
      if (!m[i][j].is_zero_literal() && !v[j].is_zero_literal()) terms.push_back(m[i][j] * v[j]);
    out[i] = add(std::move(terms));
  }
  return out;
}

class AdjointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline bool nilpotent(const RMatrix& b) {
  RMatrix p = b;
  for (std::size_t k = 1; k < b.size(); ++k) p = rmul(p, b);
  return ris_zero(p);
}

// exp(s B) for nilpotent B: finite series.
inline EMatrix exp_nilpotent(const RMatrix& b, const Expr& s) {
  std::size_t n = b.size();
  EMatrix out = to_ematrix(ridentity(n));
  RMatrix p = ridentity(n);
  Rational fact = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    p = rmul(p, b);
    if (ris_zero(p)) break;
    fact *= Rational(static_cast<long>(k));
    Expr sk = pow(s, static_cast<long>(k));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (p[i][j] != 0) out[i][j] = out[i][j] + Expr(p[i][j] / fact) * sk;
  }
  return out;
}

// exp(s B) for B diagonalizable with rational spectrum, via spectral projectors.
inline EMatrix exp_diagonalizable(const RMatrix& b, const Expr& s) {
  std::size_t n = b.size();
  std::vector<Rational> ev = rational_roots(charpoly(b));
  std::vector<RMatrix> proj;
  RMatrix sum = rzeros(n, n), recon = rzeros(n, n);
  for (const auto& l : ev) {
    RMatrix p = ridentity(n);
    for (const auto& m : ev) {
      if (m == l) continue;
      RMatrix f = b;
      for (std::size_t i = 0; i < n; ++i) f[i][i] -= m;
      for (auto& row : f)
        for (auto& x : row) x /= (l - m);
      p = rmul(p, f);
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        sum[i][j] += p[i][j];
        recon[i][j] += l * p[i][j];
      }
    proj.push_back(std::move(p));
  }
  if (sum != ridentity(n) || recon != b) throw AdjointError("ad is neither nilpotent nor diagonalizable over Q");
  EMatrix out(n, std::vector<Expr>(n, Expr(0)));
  for (std::size_t k = 0; k < ev.size(); ++k) {
    Expr e = exp(Expr(ev[k]) * s);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (proj[k][i][j] != 0) out[i][j] = out[i][j] + Expr(proj[k][i][j]) * e;
  }
  return out;
}

inline RMatrix signed_ad(std::size_t i, AdjointSign sign) {
  RMatrix b = ad_matrix(i);
  if (sign == AdjointSign::Minus)
    for (auto& row : b)
      for (auto& x : row) x = -x;
  return b;
}

}  // namespace detail

// Matrix of Ad(exp(s X_i)) in the X-basis (column j = image of X_j), exact.
// i is 0-based.
inline EMatrix adjoint_matrix(std::size_t i, const Expr& s, AdjointSign sign = AdjointSign::Minus) {
  RMatrix b = detail::signed_ad(i, sign);
  if (detail::nilpotent(b)) return detail::exp_nilpotent(b, s);
  return detail::exp_diagonalizable(b, s);
}

inline bool ad_nilpotent(std::size_t i) { return detail::nilpotent(ad_matrix(i)); }

// Numeric Ad(exp(s X_i)) by scaling and squaring of a truncated Taylor series.
inline Eigen::Matrix<double, 7, 7> adjoint_matrix_numeric(std::size_t i, double s,
                                                         AdjointSign sign = AdjointSign::Minus) {
  RMatrix b = detail::signed_ad(i, sign);
  Eigen::Matrix<double, 7, 7> a;
  for (int r = 0; r < 7; ++r)
    for (int c = 0; c < 7; ++c) a(r, c) = to_double(b[r][c]) * s;
  int squarings = 0;
  double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  while (norm > 0.25) {
    norm /= 2;
    ++squarings;
  }
  a /= std::ldexp(1.0, squarings);
  Eigen::Matrix<double, 7, 7> term = Eigen::Matrix<double, 7, 7>::Identity();
  Eigen::Matrix<double, 7, 7> out = term;
  for (int k = 1; k <= 18; ++k) {
    term = term * a / k;
    out += term;
  }
  for (int k = 0; k < squarings; ++k) out = out * out;
  return out;
}

inline Eigen::Matrix<double, 7, 7> eval_matrix(const EMatrix& m, const NumericPoint& p) {
  Eigen::Matrix<double, 7, 7> out;
  for (int r = 0; r < 7; ++r)
    for (int c = 0; c < 7; ++c) out(r, c) = eval(m[r][c], p);
  return out;
}

// Applies F_i^s to a generator.
inline CoeffVector adjoint_apply(std::size_t i, const Expr& s, const CoeffVector& v,
                                 AdjointSign sign = AdjointSign::Minus) {
  return mat_apply(adjoint_matrix(i, s, sign), v);
}

}  // namespace walker
