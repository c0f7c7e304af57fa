#pragma once

#include <vector>

#include "walker/expr/expr.hpp"

namespace walker {

namespace detail {

inline std::vector<Expr> distribute(const std::vector<Expr>& lhs, const std::vector<Expr>& rhs) {
  std::vector<Expr> out;
  out.reserve(lhs.size() * rhs.size());
  for (const auto& l : lhs)
    for (const auto& r : rhs) out.push_back(mul({l, r}));
  return out;
}

}  // namespace detail

// Distributes products over sums and multiplies out positive integer powers of
// sums. Arguments of ln/exp/atan and bases of other powers are expanded in place.
inline Expr expand(const Expr& e) {
  switch (e.kind()) {
    case Kind::Add: {
      std::vector<Expr> terms;
      terms.reserve(e.ops().size() + 1);
      for (const auto& t : e.ops()) terms.push_back(expand(t));
      terms.push_back(Expr(e.value()));
      return add(std::move(terms));
    }
    case Kind::Mul: {
      std::vector<Expr> acc{Expr(e.coeff())};
      for (const auto& f : e.ops()) acc = detail::distribute(acc, terms_of(expand(f)));
      return add(std::move(acc));
    }
    case Kind::Pow: {
      Expr b = expand(e.base());
      const Rational& q = e.exponent();
      if (b.is(Kind::Add) && is_integer(q) && q > 0) {
        long n = to_long(q);
        std::vector<Expr> base_terms = terms_of(b);
        std::vector<Expr> acc = base_terms;
        for (long i = 1; i < n; ++i) acc = terms_of(add(detail::distribute(acc, base_terms)));
        return add(std::move(acc));
      }
      Expr p = pow(b, q);
      // a Mul base raised to an integer power may come back as a product of sums
      if (p.is(Kind::Mul) && !equal(b, e.base())) return expand(p);
      return p;
    }
    case Kind::Ln: return ln(expand(e.arg()));
    case Kind::Exp: return exp(expand(e.arg()));
    case Kind::Atan: return atan(expand(e.arg()));
    default: return e;
  }
}

}  // namespace walker
