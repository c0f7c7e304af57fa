#pragma once

// Rational normal form: an expression is rewritten as N / (P1^k1 ... Pm^km)
// where N is an expanded Laurent polynomial in atoms and each Pi is a primitive
// expanded polynomial with leading coefficient 1. Atoms are coordinates,
// parameters, function symbols (any rational power), ln/exp/atan of arguments
// that are themselves in normal form, and radicals B^r with 0 < r < 1.
//
// Atoms are treated as independent symbols, so N == 0 proves the expression
// is identically zero. The converse does not hold: ln(x^2) - 2*ln(x) has a
// nonzero numerator.

#include <unordered_map>
#include <utility>
#include <vector>

#include "walker/expr/expand.hpp"
#include "walker/expr/expr.hpp"

namespace walker {

struct Frac {
  Expr num;
  std::vector<std::pair<Expr, long>> den;  // sorted by ExprLess on the polynomial
};

class RationalNormalizer {
 public:
  Frac to_frac(const Expr& e) {
    struct Depth {
      int& d;
      explicit Depth(int& v) : d(v) {
        if (++d > kMaxDepth) {
          --d;
          throw ExprError("normal form recursion limit reached");
        }
      }
      ~Depth() { --d; }
    } guard(depth_);
    switch (e.kind()) {
      case Kind::Number:
      case Kind::Coord:
      case Kind::Param:
      case Kind::Func:
        return {e, {}};
      case Kind::Add: {
        Frac acc{Expr(e.value()), {}};
        for (const auto& t : e.ops()) acc = add_frac(acc, to_frac(t));
        return acc;
      }
      case Kind::Mul: return mul_term(e);
      case Kind::Pow: return pow_frac(e);
      case Kind::Ln: {
        Expr l = ln(canon(e.arg()));
        return l.is(Kind::Ln) ? Frac{l, {}} : to_frac(l);
      }
      case Kind::Exp: {
        Expr x = exp(canon(e.arg()));
        if (x.is(Kind::Exp) && equal(canon(x.arg()), x.arg())) return {x, {}};
        return to_frac(x);
      }
      case Kind::Atan: {
        Expr a = atan(canon(e.arg()));
        return a.is(Kind::Atan) ? Frac{a, {}} : to_frac(a);
      }
    }
    return {e, {}};
  }

  Expr to_expr(const Frac& f) {
    std::vector<Expr> parts{f.num};
    for (const auto& [p, k] : f.den) parts.push_back(pow(p, -k));
    return mul(std::move(parts));
  }

  // Canonical representative of e: the normal form turned back into an Expr.
  Expr canon(const Expr& e) {
    if (e.is_number() || e.is_leaf()) return e;
    auto it = cache_.find(e.raw());
    if (it != cache_.end()) return it->second;
    Expr out = to_expr(to_frac(e));
    pins_.push_back(e);
    cache_.emplace(e.raw(), out);
    return out;
  }

  Frac add_frac(const Frac& a, const Frac& b) {
    if (a.num.is_zero_literal()) return b;
    if (b.num.is_zero_literal()) return a;
    if (a.den.empty() && b.den.empty()) return {add({a.num, b.num}), {}};
    std::vector<std::pair<Expr, long>> d;
    merge_den(a.den, b.den, d, false);
    Frac na = scale_to(a, d);
    Frac nb = scale_to(b, d);
    if (na.den.empty() && nb.den.empty()) return {add({na.num, nb.num}), d};
    Frac s = add_frac(na, nb);
    std::vector<std::pair<Expr, long>> all;
    merge_den(s.den, d, all, true);
    return {s.num, std::move(all)};
  }

  Frac mul_frac(const Frac& a, const Frac& b) {
    if (a.num.is_zero_literal() || b.num.is_zero_literal()) return {0, {}};
    std::vector<std::pair<Expr, long>> d, all;
    merge_den(a.den, b.den, d, true);
    Frac t = times(a.num, b.num);
    if (t.den.empty()) return {t.num, std::move(d)};
    merge_den(t.den, d, all, true);
    return {t.num, std::move(all)};
  }

  Frac inv_frac(const Frac& f) {
    if (f.num.is_zero_literal()) throw ExprError("division by zero");
    Expr extra;
    std::vector<std::pair<Expr, long>> den;
    if (!f.num.is(Kind::Add)) {
      extra = pow(f.num, -1);
    } else {
      Expr content;
      Expr p = primitive_part(f.num, content);
      extra = pow(content, -1);
      den.emplace_back(p, 1);
    }
    Frac out{1, std::move(den)};
    out = mul_frac(out, term_is_normal(extra) ? Frac{extra, {}} : to_frac(extra));
    // reinstate the old denominator in the numerator, cancelling a shared factor
    for (const auto& [q, k] : f.den) {
      long kk = k;
      for (auto it = out.den.begin(); it != out.den.end(); ++it) {
        if (!equal(it->first, q)) continue;
        long cancel = std::min(kk, it->second);
        kk -= cancel;
        if ((it->second -= cancel) == 0) out.den.erase(it);
        break;
      }
      for (long m = 0; m < kk; ++m) out = mul_frac(out, Frac{q, {}});
    }
    return out;
  }

  Frac pow_int(const Frac& f, long n) {
    if (n == 0) return {1, {}};
    if (n < 0) return pow_int(inv_frac(f), -n);
    Frac result{1, {}};
    Frac base = f;
    while (n > 0) {
      if (n & 1) result = mul_frac(result, base);
      n >>= 1;
      if (n) base = mul_frac(base, base);
    }
    return result;
  }

  bool is_zero(const Expr& e) { return to_frac(e).num.is_zero_literal(); }

 private:
  static constexpr int kMaxDepth = 400;
  std::unordered_map<const Node*, Expr> cache_;
  std::vector<Expr> pins_;
  int depth_ = 0;

  static void merge_den(const std::vector<std::pair<Expr, long>>& a,
                        const std::vector<std::pair<Expr, long>>& b,
                        std::vector<std::pair<Expr, long>>& out, bool sum) {
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      int c = i == a.size() ? 1 : j == b.size() ? -1 : compare(a[i].first, b[j].first);
      if (c < 0) out.push_back(a[i++]);
      else if (c > 0) out.push_back(b[j++]);
      else {
        long k = sum ? a[i].second + b[j].second : std::max(a[i].second, b[j].second);
        out.emplace_back(a[i].first, k);
        ++i;
        ++j;
      }
    }
  }

  // f rewritten over the larger denominator d (numerator only)
  Frac scale_to(const Frac& f, const std::vector<std::pair<Expr, long>>& d) {
    Frac acc{f.num, {}};
    for (const auto& [p, k] : d) {
      long have = 0;
      for (const auto& [q, kq] : f.den)
        if (equal(p, q)) have = kq;
      for (long m = have; m < k; ++m) acc = mul_frac(acc, Frac{p, {}});
    }
    return acc;
  }

  // Product of two normalized numerators, renormalized term by term.
  Frac times(const Expr& a, const Expr& b) {
    if (a.is_one_literal() && term_is_normal_poly(b)) return {b, {}};
    if (b.is_one_literal() && term_is_normal_poly(a)) return {a, {}};
    std::vector<Expr> la = terms_of(a), lb = terms_of(b);
    std::vector<Expr> out;
    out.reserve(la.size() * lb.size());
    bool clean = true;
    for (const auto& x : la)
      for (const auto& y : lb) {
        Expr t = mul({x, y});
        if (!term_is_normal(t)) clean = false;
        out.push_back(t);
      }
    Expr s = add(out);
    if (clean) return {s, {}};
    return renormalize(s);
  }

  bool term_is_normal_poly(const Expr& p) {
    for (const auto& t : terms_of(p))
      if (!term_is_normal(t)) return false;
    return true;
  }

  // Rewrites a polynomial whose terms may hold non-atomic factors.
  Frac renormalize(const Expr& poly) {
    std::vector<Expr> keep;
    Frac rest{0, {}};
    bool any = false;
    for (const auto& t : terms_of(poly)) {
      if (term_is_normal(t)) {
        keep.push_back(t);
      } else {
        rest = add_frac(rest, mul_term(t));
        any = true;
      }
    }
    if (!any) return {poly, {}};
    return add_frac(Frac{add(std::move(keep)), {}}, rest);
  }

  Frac mul_term(const Expr& e) {
    if (!e.is(Kind::Mul)) return to_frac(e);
    if (term_is_normal(e)) return {e, {}};
    Frac acc{Expr(e.coeff()), {}};
    for (const auto& f : e.ops()) acc = mul_frac(acc, to_frac(f));
    return acc;
  }

  Frac pow_frac(const Expr& e) {
    const Expr& b = e.base();
    const Rational& q = e.exponent();
    if (b.is_number()) return {e, {}};
    if (b.is_leaf()) return {reduce_leaf_power(b, q), {}};
    if (atom_is_normal(e)) return {e, {}};
    if (is_integer(q)) {
      if (atom_is_normal(e)) return {e, {}};
      return pow_int(to_frac(b), to_long(q));
    }
    Frac fb = to_frac(b);
    Expr cb = to_expr(fb);
    Rational n = floor_of(q);
    Rational r = q - n;
    Expr atom = pow(cb, r);
    Frac radical;
    if (atom_is_normal(atom)) radical = {atom, {}};
    else if (equal(atom, e)) throw ExprError("internal: radical did not normalize");
    else radical = to_frac(atom);
    if (n == 0) return radical;
    return mul_frac(pow_int(fb, to_long(n)), radical);
  }

  static Expr reduce_leaf_power(const Expr& b, const Rational& q) {
    if (b.is(Kind::Param) && is_integer(q)) {
      long k = to_long(q);
      if (b.domain() == ParamDomain::Sign) return pow(b, ((k % 2) + 2) % 2);
      if (b.domain() == ParamDomain::SignOrZero && k >= 3) return pow(b, k % 2 ? 1 : 2);
    }
    return pow(b, q);
  }

  bool atom_is_normal(const Expr& f) {
    switch (f.kind()) {
      case Kind::Coord:
      case Kind::Param:
      case Kind::Func:
        return true;
      case Kind::Ln:
      case Kind::Atan:
        return equal(canon(f.arg()), f.arg());
      case Kind::Exp: {
        Expr a = canon(f.arg());
        return equal(a, f.arg()) && equal(exp(a), f);
      }
      case Kind::Pow: {
        const Expr& b = f.base();
        const Rational& q = f.exponent();
        if (b.is_number()) return true;
        if (b.is_leaf()) return equal(reduce_leaf_power(b, q), f);
        // powers of a single transcendental atom behave like a leaf power
        if (b.is(Kind::Ln) || b.is(Kind::Atan)) return atom_is_normal(b);
        if (is_integer(q)) return false;
        return q > 0 && q < 1 && equal(canon(b), b);
      }
      default:
        return false;
    }
  }

  bool term_is_normal(const Expr& t) {
    if (t.is_number()) return true;
    if (t.is(Kind::Mul)) {
      for (const auto& f : t.ops())
        if (!atom_is_normal(f)) return false;
      return true;
    }
    return atom_is_normal(t);
  }

  // Splits an expanded sum into content * P with P primitive (no common
  // monomial factor, leading coefficient 1).
  Expr primitive_part(const Expr& poly, Expr& content) {
    std::vector<Expr> terms = terms_of(poly);
    auto factors_of = [](const Expr& t, std::vector<std::pair<Expr, Rational>>& out) {
      out.clear();
      auto push = [&](const Expr& f) {
        if (f.is(Kind::Pow)) out.emplace_back(f.base(), f.exponent());
        else out.emplace_back(f, 1);
      };
      if (t.is(Kind::Mul)) for (const auto& f : t.ops()) push(f);
      else if (!t.is_number()) push(t);
    };
    std::vector<std::pair<Expr, Rational>> common, cur;
    factors_of(terms.front(), common);
    for (std::size_t i = 1; i < terms.size() && !common.empty(); ++i) {
      factors_of(terms[i], cur);
      std::vector<std::pair<Expr, Rational>> next;
      for (const auto& [b, q] : common)
        for (const auto& [b2, q2] : cur)
          if (equal(b, b2)) {
            next.emplace_back(b, q < q2 ? q : q2);
            break;
          }
      common = std::move(next);
    }
    // radicals and transcendental atoms only come out with integer exponents
    std::vector<Expr> mono;
    for (const auto& [b, q] : common) {
      if (b.is_leaf()) {
        if (b.is(Kind::Param) && b.domain() != ParamDomain::Real) continue;
        mono.push_back(pow(b, q));
      }
    }
    Rational lead = terms.front().is(Kind::Mul) ? terms.front().coeff() : Rational(1);
    if (terms.front().is_number()) lead = terms.front().value();
    mono.push_back(Expr(lead));
    content = mul(mono);
    Expr inv = pow(content, -1);
    std::vector<Expr> scaled;
    scaled.reserve(terms.size());
    for (const auto& t : terms) scaled.push_back(mul({t, inv}));
    return add(std::move(scaled));
  }
};

inline Frac rational_normal_form(const Expr& e) {
  RationalNormalizer n;
  return n.to_frac(e);
}

inline Expr normalize(const Expr& e) {
  RationalNormalizer n;
  return n.canon(e);
}

}  // namespace walker
