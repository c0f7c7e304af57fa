#pragma once

// Exact dense linear algebra over the rationals, sized for the 7x7 and
// small coefficient systems used here.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "walker/core/rational.hpp"

namespace walker {

using RVector = std::vector<Rational>;
using RMatrix = std::vector<RVector>;

inline RMatrix rzeros(std::size_t rows, std::size_t cols) {
  return RMatrix(rows, RVector(cols, Rational(0)));
}

inline RMatrix ridentity(std::size_t n) {
  RMatrix m = rzeros(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline RMatrix rmul(const RMatrix& a, const RMatrix& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  RMatrix c = rzeros(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

inline RVector rapply(const RMatrix& a, const RVector& v) {
  RVector out(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  return out;
}

inline bool ris_zero(const RMatrix& a) {
  for (const auto& row : a)
    for (const auto& x : row)
      if (x != 0) return false;
  return true;
}

// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(RMatrix& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  std::size_t rows = a.size(), cols = a[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rrank(RMatrix a) { return rref(a).size(); }

// Basis of {v : a v = 0}.
inline std::vector<RVector> rnullspace(RMatrix a, std::size_t cols) {
  if (a.empty()) a = rzeros(1, cols);
  std::vector<std::size_t> piv = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<RVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RVector v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Some solution of a x = b, or nothing when inconsistent.
inline std::optional<RVector> rsolve(const RMatrix& a, const RVector& b) {
  std::size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
  RMatrix aug = a;
  for (std::size_t i = 0; i < rows; ++i) aug[i].push_back(b[i]);
  std::vector<std::size_t> piv = rref(aug);
  if (!piv.empty() && piv.back() == cols) return std::nullopt;
  RVector x(cols, Rational(0));
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug[r][cols];
  return x;
}

// Characteristic polynomial coefficients c_0..c_n of det(t I - a), monic
// (Faddeev-LeVerrier).
inline RVector charpoly(const RMatrix& a) {
  std::size_t n = a.size();
  RVector c(n + 1, Rational(0));
  c[n] = 1;
  RMatrix m = rzeros(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    RMatrix am = rmul(a, m);
    for (std::size_t i = 0; i < n; ++i) am[i][i] += c[n - k + 1];
    m = am;
    RMatrix a_m = rmul(a, m);
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += a_m[i][i];
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return c;
}

inline Rational poly_eval(const RVector& c, const Rational& t) {
  Rational acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * t + c[i];
  return acc;
}

// Distinct rational roots of a polynomial with rational coefficients.
inline std::vector<Rational> rational_roots(RVector c) {
  std::vector<Rational> roots;
  // clear denominators, then strip zero roots
  mpz_class l = 1;
  for (const auto& x : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<mpz_class> z;
  for (const auto& x : c) z.push_back(mpz_class(x * l));
  std::size_t low = 0;
  while (low < z.size() && z[low] == 0) ++low;
  if (low == z.size()) return roots;
  if (low > 0) roots.push_back(0);
  std::size_t high = z.size() - 1;
  while (high > low && z[high] == 0) --high;
  if (high == low) return roots;
  mpz_class p = abs(z[low]), q = abs(z[high]);
  auto divisors = [](mpz_class v) {
    std::vector<mpz_class> d;
    for (mpz_class i = 1; i * i <= v; ++i)
      if (v % i == 0) {
        d.push_back(i);
        if (i * i != v) d.push_back(v / i);
      }
    return d;
  };
  for (const auto& a : divisors(p))
    for (const auto& b : divisors(q))
      for (int sign : {1, -1}) {
        Rational r(a * sign, b);
        r.canonicalize();
        bool seen = false;
        for (const auto& x : roots) seen = seen || x == r;
        if (!seen && poly_eval(c, r) == 0) roots.push_back(r);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace walker
