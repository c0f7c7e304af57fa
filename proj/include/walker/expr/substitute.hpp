#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "walker/expr/diff.hpp"
#include "walker/expr/expr.hpp"

namespace walker {

// Simultaneous substitution of parameters, coordinates and functions.
// Binding a function symbol (without derivative index) also rewrites each of
// its derivatives as the matching derivative of the bound expression.
class Substitution {
 public:
  Substitution() = default;

  Substitution& bind(const Expr& symbol, const Expr& value) {
    if (symbol.is(Kind::Func)) {
      if (!symbol.func().index.empty())
        throw ExprError("bind the underived function, not " + symbol.key());
      funcs_[symbol.key()] = value;
    } else if (symbol.is(Kind::Param) || symbol.is(Kind::Coord)) {
      leaves_[symbol.key()] = value;
    } else {
      throw ExprError("only symbols can be bound");
    }
    memo_.clear();
    keep_.clear();
    derived_.clear();
    return *this;
  }

  bool empty() const { return funcs_.empty() && leaves_.empty(); }

  Expr operator()(const Expr& e) const { return apply(e); }

  Expr apply(const Expr& e) const {
    auto it = memo_.find(e.raw());
    if (it != memo_.end()) return it->second;
    Expr out = rebuild(e);
    memo_.emplace(e.raw(), out);
    keep_.push_back(e);
    return out;
  }

 private:
  std::map<std::string, Expr> funcs_;
  std::map<std::string, Expr> leaves_;
  mutable std::unordered_map<const Node*, Expr> memo_;
  mutable std::vector<Expr> keep_;  // pins memo keys
  mutable std::map<std::string, Expr> derived_;

  Expr derivative_of(const FuncSym& f) const {
    std::string key = funcsym_key(f);
    auto it = derived_.find(key);
    if (it != derived_.end()) return it->second;
    const Expr& base = funcs_.at(funcsym_key(f.base()));
    Expr d = base;
    for (auto digit : f.index) d = diff(d, static_cast<Coord>(digit));
    derived_.emplace(key, d);
    return d;
  }

  Expr rebuild(const Expr& e) const {
    switch (e.kind()) {
      case Kind::Number: return e;
      case Kind::Coord:
      case Kind::Param: {
        auto it = leaves_.find(e.key());
        return it == leaves_.end() ? e : it->second;
      }
      case Kind::Func:
        if (funcs_.count(funcsym_key(e.func().base()))) return derivative_of(e.func());
        return e;
      case Kind::Add: {
        std::vector<Expr> ops{Expr(e.value())};
        for (const auto& o : e.ops()) ops.push_back(apply(o));
        return add(std::move(ops));
      }
      case Kind::Mul: {
        std::vector<Expr> ops{Expr(e.coeff())};
        for (const auto& o : e.ops()) ops.push_back(apply(o));
        return mul(std::move(ops));
      }
      case Kind::Pow: return pow(apply(e.base()), e.exponent());
      case Kind::Ln: return ln(apply(e.arg()));
      case Kind::Exp: return exp(apply(e.arg()));
      case Kind::Atan: return atan(apply(e.arg()));
    }
    return e;
  }
};

inline Expr substitute(const Expr& e, const std::vector<std::pair<Expr, Expr>>& bindings) {
  Substitution s;
  for (const auto& [k, v] : bindings) s.bind(k, v);
  return s(e);
}

}  // namespace walker
