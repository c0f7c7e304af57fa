#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "walker/core/linalg.hpp"
#include "walker/expr/expand.hpp"
#include "walker/expr/parse.hpp"
#include "walker/liealg/vector_field.hpp"

namespace walker {

// Coordinates in the X1..X7 basis.
using CoeffVector = std::array<Expr, 7>;

class NotClosed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// C[i][j][k] = C^i_{jk}, with [X_j, X_k] = sum_i C^i_{jk} X_i (0-based).
struct StructureConstants {
  std::array<std::array<std::array<Rational, 7>, 7>, 7> c{};

  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const { return c[i][j][k]; }
  Rational& operator()(std::size_t i, std::size_t j, std::size_t k) { return c[i][j][k]; }
};

namespace detail {

// Splits an expanded expression into monomial key -> rational coefficient.
inline void collect_monomials(const Expr& e, std::size_t slot, std::map<std::pair<std::size_t, std::string>, Rational>& out,
                              std::map<std::pair<std::size_t, std::string>, std::size_t>& rows) {
  for (const auto& term : terms_of(expand(e))) {
    if (term.is_zero_literal()) continue;
    Rational coeff;
    Expr rest;
    if (term.is_number()) {
      coeff = term.value();
      rest = Expr(1);
    } else {
      split_term(term, coeff, rest);
    }
    auto key = std::make_pair(slot, render(rest));
    out[key] += coeff;
    rows.emplace(key, rows.size());
  }
}

}  // namespace detail

// Coefficients of v in the given basis, by matching monomial coefficients.
// Empty when v leaves the span.
inline std::optional<RVector> decompose(const VectorField& v, const std::array<VectorField, 7>& basis) {
  std::map<std::pair<std::size_t, std::string>, std::size_t> rows;
  std::array<std::map<std::pair<std::size_t, std::string>, Rational>, 8> cols;
  for (std::size_t j = 0; j < 7; ++j)
    for (std::size_t s = 0; s < 5; ++s) detail::collect_monomials(basis[j].comp[s], s, cols[j], rows);
  for (std::size_t s = 0; s < 5; ++s) detail::collect_monomials(v.comp[s], s, cols[7], rows);
  RMatrix a = rzeros(rows.size(), 7);
  RVector rhs(rows.size(), Rational(0));
  for (const auto& [key, r] : rows) {
    for (std::size_t j = 0; j < 7; ++j) {
      auto it = cols[j].find(key);
      if (it != cols[j].end()) a[r][j] = it->second;
    }
    auto it = cols[7].find(key);
    if (it != cols[7].end()) rhs[r] = it->second;
  }
  return rsolve(a, rhs);
}

inline StructureConstants structure_constants(const std::array<VectorField, 7>& basis) {
  StructureConstants sc;
  for (std::size_t j = 0; j < 7; ++j)
    for (std::size_t k = j + 1; k < 7; ++k) {
      auto d = decompose(bracket(basis[j], basis[k]), basis);
      if (!d)
        throw NotClosed("[X" + std::to_string(j + 1) + ", X" + std::to_string(k + 1) + "] leaves the span");
      for (std::size_t i = 0; i < 7; ++i) {
        sc(i, j, k) = (*d)[i];
        sc(i, k, j) = -(*d)[i];
      }
    }
  return sc;
}

// Structure constants of the seven symmetry generators, computed once.
inline const StructureConstants& symmetry_algebra() {
  static const StructureConstants sc = structure_constants(symmetry_basis());
  return sc;
}

inline CoeffVector zero_coeffs() {
  CoeffVector v;
  v.fill(Expr(0));
  return v;
}

inline CoeffVector unit(std::size_t i) {
  CoeffVector v = zero_coeffs();
  v[i] = Expr(1);
  return v;
}

inline CoeffVector to_coeffs(const RVector& r) {
  CoeffVector v;
  for (std::size_t i = 0; i < 7; ++i) v[i] = Expr(r[i]);
  return v;
}

inline CoeffVector lin_comb(const Expr& s, const CoeffVector& u, const Expr& r, const CoeffVector& v) {
  CoeffVector out;
  for (std::size_t i = 0; i < 7; ++i) out[i] = s * u[i] + r * v[i];
  return out;
}

inline CoeffVector bracket(const CoeffVector& u, const CoeffVector& v,
                           const StructureConstants& sc = symmetry_algebra()) {
  CoeffVector out;
  for (std::size_t i = 0; i < 7; ++i) {
    std::vector<Expr> terms;
    for (std::size_t j = 0; j < 7; ++j) {
      if (u[j].is_zero_literal()) continue;
      for (std::size_t k = 0; k < 7; ++k)
        if (sc(i, j, k) != 0 && !v[k].is_zero_literal()) terms.push_back(Expr(sc(i, j, k)) * u[j] * v[k]);
    }
    out[i] = add(std::move(terms));
  }
  return out;
}

// Column k holds [X_i, X_k].
inline RMatrix ad_matrix(std::size_t i, const StructureConstants& sc = symmetry_algebra()) {
  RMatrix m = rzeros(7, 7);
  for (std::size_t r = 0; r < 7; ++r)
    for (std::size_t k = 0; k < 7; ++k) m[r][k] = sc(r, i, k);
  return m;
}

inline RMatrix ad_matrix(const RVector& x, const StructureConstants& sc = symmetry_algebra()) {
  RMatrix m = rzeros(7, 7);
  for (std::size_t j = 0; j < 7; ++j) {
    if (x[j] == 0) continue;
    for (std::size_t r = 0; r < 7; ++r)
      for (std::size_t k = 0; k < 7; ++k) m[r][k] += x[j] * sc(r, j, k);
  }
  return m;
}

// Number of (i<j<k) triples where the cyclic Jacobi sum is nonzero.
inline int jacobi_failures(const StructureConstants& sc = symmetry_algebra()) {
  int bad = 0;
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = i + 1; j < 7; ++j)
      for (std::size_t k = j + 1; k < 7; ++k) {
        for (std::size_t m = 0; m < 7; ++m) {
          Rational s = 0;
          for (std::size_t l = 0; l < 7; ++l)
            s += sc(l, j, k) * sc(m, i, l) + sc(l, k, i) * sc(m, j, l) + sc(l, i, j) * sc(m, k, l);
          if (s != 0) {
            ++bad;
            break;
          }
        }
      }
  return bad;
}

inline VectorField to_field(const CoeffVector& v) {
  VectorField out;
  for (auto& c : out.comp) c = Expr(0);
  const auto& basis = symmetry_basis();
  for (std::size_t i = 0; i < 7; ++i)
    if (!v[i].is_zero_literal()) out = out + v[i] * basis[i];
  return out;
}

inline const std::array<Expr, 7>& generator_symbols() {
  static const std::array<Expr, 7> g = [] {
    std::array<Expr, 7> out;
    for (int i = 0; i < 7; ++i) out[i] = param("X" + std::to_string(i + 1));
    return out;
  }();
  return g;
}

// Parses "X3 + 2*X6 - X7" or "eps*X2 + X5". The text must be linear in X1..X7
// with coefficients free of them.
inline CoeffVector parse_generator(std::string_view text) {
  ParseOptions opts;
  for (int i = 1; i <= 7; ++i) opts.extra_params.insert("X" + std::to_string(i));
  Expr e = parse(text, opts);
  const auto& g = generator_symbols();
  CoeffVector v;
  Expr rest = e;
  for (std::size_t i = 0; i < 7; ++i) {
    v[i] = expand(partial(e, g[i]));
    for (const auto& s : g)
      if (contains(v[i], s)) throw ParseError("generator text is not linear in X1..X7", 0);
    if (contains_if(v[i], [](const Expr& s) { return s.is(Kind::Coord) || s.is(Kind::Func); }))
      throw ParseError("generator coefficients must be constants", 0);
    rest = rest - v[i] * g[i];
  }
  if (!expand(rest).is_zero_literal()) throw ParseError("generator text has a term without X1..X7", 0);
  bool any = false;
  for (const auto& c : v) any = any || !c.is_zero_literal();
  if (!any) throw ParseError("generator is zero", 0);
  return v;
}

inline std::string render_generator(const CoeffVector& v) {
  std::string out;
  for (std::size_t i = 0; i < 7; ++i) {
    Expr c = v[i];
    if (c.is_zero_literal()) continue;
    bool neg = false;
    if ((c.is_number() && c.value() < 0) || (c.is(Kind::Mul) && c.coeff() < 0)) {
      neg = true;
      c = -c;
    }
    std::string name = "X" + std::to_string(i + 1);
    std::string term;
    if (c.is_one_literal()) term = name;
    else if (c.is(Kind::Add)) term = "(" + render(c) + ")*" + name;
    else term = render(c) + "*" + name;
    if (out.empty()) out = neg ? "-" + term : term;
    else out += (neg ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

inline std::optional<RVector> rational_coeffs(const CoeffVector& v) {
  RVector r(7);
  for (std::size_t i = 0; i < 7; ++i) {
    if (!v[i].is_number()) return std::nullopt;
    r[i] = v[i].value();
  }
  return r;
}

}  // namespace walker
