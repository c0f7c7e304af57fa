#pragma once

#include <vector>

#include "walker/expr/expr.hpp"

namespace walker {

// Total derivative with respect to a coordinate. Function symbols that depend
// on the coordinate gain the index, e.g. diff(a_1, t) = a_12.
inline Expr diff(const Expr& e, Coord v) {
  switch (e.kind()) {
    case Kind::Number:
    case Kind::Param:
      return 0;
    case Kind::Coord:
      return e.coord() == v ? 1 : 0;
    case Kind::Func:
      return e.func().depends_on(v) ? func(e.func().derived(v)) : Expr(0);
    case Kind::Add: {
      std::vector<Expr> terms;
      terms.reserve(e.ops().size());
      for (const auto& t : e.ops()) terms.push_back(diff(t, v));
      return add(std::move(terms));
    }
    case Kind::Mul: {
      std::vector<Expr> terms;
      const auto& fs = e.ops();
      for (std::size_t i = 0; i < fs.size(); ++i) {
        Expr d = diff(fs[i], v);
        if (d.is_zero_literal()) continue;
        std::vector<Expr> prod{Expr(e.coeff()), d};
        for (std::size_t j = 0; j < fs.size(); ++j)
          if (j != i) prod.push_back(fs[j]);
        terms.push_back(mul(std::move(prod)));
      }
      return add(std::move(terms));
    }
    case Kind::Pow: {
      Expr d = diff(e.base(), v);
      if (d.is_zero_literal()) return 0;
      return mul({Expr(e.exponent()), pow(e.base(), e.exponent() - 1), d});
    }
    case Kind::Ln: {
      Expr d = diff(e.arg(), v);
      if (d.is_zero_literal()) return 0;
      return d / e.arg();
    }
    case Kind::Exp: {
      Expr d = diff(e.arg(), v);
      if (d.is_zero_literal()) return 0;
      return e * d;
    }
    case Kind::Atan: {
      Expr d = diff(e.arg(), v);
      if (d.is_zero_literal()) return 0;
      return d / (1 + pow(e.arg(), 2));
    }
  }
  return 0;
}

inline Expr diff(const Expr& e, const std::vector<Coord>& vars) {
  Expr out = e;
  for (Coord c : vars) out = diff(out, c);
  return out;
}

// Partial derivative with respect to a leaf symbol, treating every other leaf
// (including other derivatives of the same function) as independent.
inline Expr partial(const Expr& e, const Expr& leaf) {
  switch (e.kind()) {
    case Kind::Number:
      return 0;
    case Kind::Coord:
    case Kind::Param:
    case Kind::Func:
      return equal(e, leaf) ? 1 : 0;
    case Kind::Add: {
      std::vector<Expr> terms;
      for (const auto& t : e.ops()) terms.push_back(partial(t, leaf));
      return add(std::move(terms));
    }
    case Kind::Mul: {
      std::vector<Expr> terms;
      const auto& fs = e.ops();
      for (std::size_t i = 0; i < fs.size(); ++i) {
        Expr d = partial(fs[i], leaf);
        if (d.is_zero_literal()) continue;
        std::vector<Expr> prod{Expr(e.coeff()), d};
        for (std::size_t j = 0; j < fs.size(); ++j)
          if (j != i) prod.push_back(fs[j]);
        terms.push_back(mul(std::move(prod)));
      }
      return add(std::move(terms));
    }
    case Kind::Pow: {
      Expr d = partial(e.base(), leaf);
      if (d.is_zero_literal()) return 0;
      return mul({Expr(e.exponent()), pow(e.base(), e.exponent() - 1), d});
    }
    case Kind::Ln: {
      Expr d = partial(e.arg(), leaf);
      return d.is_zero_literal() ? Expr(0) : d / e.arg();
    }
    case Kind::Exp: {
      Expr d = partial(e.arg(), leaf);
      return d.is_zero_literal() ? Expr(0) : e * d;
    }
    case Kind::Atan: {
      Expr d = partial(e.arg(), leaf);
      return d.is_zero_literal() ? Expr(0) : d / (1 + pow(e.arg(), 2));
    }
  }
  return 0;
}

}  // namespace walker
