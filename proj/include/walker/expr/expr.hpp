#pragma once

// Immutable symbolic expressions with automatic canonicalization.
//
// Every Expr is built through the constructors in this header (add, mul,
// pow, ln, exp, atan, ...), which keep the tree in a normal form:
//   - sums and products are flattened and sorted under a fixed total order
//   - like terms of a sum are merged, equal bases of a product are merged
//   - rational constants are folded; power exponents are rationals
// Two trees built from the same input therefore compare structurally equal.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "walker/core/rational.hpp"

namespace walker {

enum class Kind : std::uint8_t { Number, Coord, Param, Func, Ln, Exp, Atan, Pow, Mul, Add };

// Independent coordinates; the numeric value is the derivative index digit.
enum class Coord : std::uint8_t { X = 1, T = 2, Y = 3, Z = 4 };

inline constexpr Coord kAllCoords[] = {Coord::X, Coord::T, Coord::Y, Coord::Z};

inline char coord_name(Coord c) {
  switch (c) {
    case Coord::X: return 'x';
    case Coord::T: return 't';
    case Coord::Y: return 'y';
    case Coord::Z: return 'z';
  }
  return '?';
}

inline int coord_digit(Coord c) { return static_cast<int>(c); }

// Sampling domain of a parameter. Sign parameters obey p^2 = 1.
enum class ParamDomain : std::uint8_t { Real, Sign, SignOrZero };

inline ParamDomain domain_for_param(std::string_view name) {
  if (name == "eps" || name == "epsp") return ParamDomain::Sign;
  if (name == "epz") return ParamDomain::SignOrZero;
  return ParamDomain::Real;
}

// Function symbol with a sorted derivative multi-index (1->x, 2->t, 3->y, 4->z).
struct FuncSym {
  std::string name;
  std::uint8_t deps = 0xF;  // bit k-1 set when the function depends on coordinate k
  std::vector<std::uint8_t> index;

  bool depends_on(Coord c) const { return (deps >> (coord_digit(c) - 1)) & 1u; }

  FuncSym derived(Coord c) const {
    FuncSym out = *this;
    auto d = static_cast<std::uint8_t>(coord_digit(c));
    out.index.insert(std::upper_bound(out.index.begin(), out.index.end(), d), d);
    return out;
  }

  FuncSym base() const { return FuncSym{name, deps, {}}; }

  // a, b, c depend on all four coordinates and render without an argument list
  bool default_deps() const { return deps == 0xF; }

  friend bool operator==(const FuncSym& l, const FuncSym& r) {
    return l.name == r.name && l.deps == r.deps && l.index == r.index;
  }
};

inline std::uint8_t deps_mask(std::initializer_list<Coord> coords) {
  std::uint8_t m = 0;
  for (Coord c : coords) m |= static_cast<std::uint8_t>(1u << (coord_digit(c) - 1));
  return m;
}

inline std::string funcsym_key(const FuncSym& f) {
  std::string s = f.name;
  if (!f.index.empty()) {
    s += '_';
    for (auto d : f.index) s += static_cast<char>('0' + d);
  }
  if (!f.default_deps()) {
    s += '(';
    bool first = true;
    for (Coord c : kAllCoords) {
      if (!f.depends_on(c)) continue;
      if (!first) s += ',';
      s += coord_name(c);
      first = false;
    }
    s += ')';
  }
  return s;
}

class Expr;

struct Node {
  Kind kind = Kind::Number;
  Rational value;       // Number value, Mul coefficient, Add constant, Pow exponent
  Coord coord = Coord::X;
  ParamDomain domain = ParamDomain::Real;
  std::string name;     // Param name
  FuncSym func;
  std::vector<Expr> ops;
  std::string key;      // leaf lookup key for numeric points
  std::size_t hash = 0;
};

class Expr {
 public:
  Expr();
  Expr(int n);  // NOLINT(google-explicit-constructor)
  Expr(long n);  // NOLINT(google-explicit-constructor)
  Expr(const Rational& q);  // NOLINT(google-explicit-constructor)
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  Kind kind() const { return node_->kind; }
  bool is(Kind k) const { return node_->kind == k; }
  bool is_number() const { return node_->kind == Kind::Number; }
  bool is_zero_literal() const { return is_number() && node_->value == 0; }
  bool is_one_literal() const { return is_number() && node_->value == 1; }
  bool is_leaf() const {
    return kind() == Kind::Coord || kind() == Kind::Param || kind() == Kind::Func;
  }

  const Rational& value() const { return node_->value; }
  const Rational& coeff() const { return node_->value; }
  const Rational& exponent() const { return node_->value; }
  Coord coord() const { return node_->coord; }
  ParamDomain domain() const { return node_->domain; }
  const std::string& name() const { return node_->name; }
  const FuncSym& func() const { return node_->func; }
  const std::vector<Expr>& ops() const { return node_->ops; }
  const Expr& op(std::size_t i) const { return node_->ops[i]; }
  const Expr& base() const { return node_->ops[0]; }
  const Expr& arg() const { return node_->ops[0]; }
  const std::string& key() const { return node_->key; }
  std::size_t hash() const { return node_->hash; }
  const Node* raw() const { return node_.get(); }

 private:
  std::shared_ptr<const Node> node_;
};

class ExprError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline int kind_rank(Kind k) { return static_cast<int>(k); }

inline std::size_t compute_hash(const Node& n) {
  std::size_t h = static_cast<std::size_t>(n.kind) * 0x51ed27u;
  switch (n.kind) {
    case Kind::Number: hash_combine(h, hash_rational(n.value)); break;
    case Kind::Coord: hash_combine(h, static_cast<std::size_t>(n.coord)); break;
    case Kind::Param: hash_combine(h, std::hash<std::string>{}(n.name)); break;
    case Kind::Func:
      hash_combine(h, std::hash<std::string>{}(n.func.name));
      hash_combine(h, n.func.deps);
      for (auto d : n.func.index) hash_combine(h, d);
      break;
    default:
      hash_combine(h, hash_rational(n.value));
      for (const auto& o : n.ops) hash_combine(h, o.hash());
  }
  return h;
}

inline Expr finish(std::shared_ptr<Node> n) {
  n->hash = compute_hash(*n);
  return Expr(std::shared_ptr<const Node>(std::move(n)));
}

inline Expr make_number(const Rational& q) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Number;
  n->value = q;
  return finish(std::move(n));
}

inline const Expr& zero_expr() {
  static const Expr z = make_number(0);
  return z;
}

inline const Expr& one_expr() {
  static const Expr o = make_number(1);
  return o;
}

inline const Expr& minus_one_expr() {
  static const Expr m = make_number(-1);
  return m;
}

inline Expr raw_node(Kind k, const Rational& value, std::vector<Expr> ops) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->value = value;
  n->ops = std::move(ops);
  return finish(std::move(n));
}

}  // namespace detail

inline Expr::Expr() : Expr(detail::zero_expr()) {}
inline Expr::Expr(int n) : Expr(static_cast<long>(n)) {}
inline Expr::Expr(long n)
    : node_(n == 0   ? detail::zero_expr().node_
            : n == 1 ? detail::one_expr().node_
                     : detail::make_number(Rational(n)).node_) {}
inline Expr::Expr(const Rational& q) : node_(detail::make_number(q).node_) {}

// ---------------------------------------------------------------------------
// structural equality and total order

inline bool equal(const Expr& u, const Expr& v) {
  if (u.raw() == v.raw()) return true;
  if (u.hash() != v.hash() || u.kind() != v.kind()) return false;
  switch (u.kind()) {
    case Kind::Number: return u.value() == v.value();
    case Kind::Coord: return u.coord() == v.coord();
    case Kind::Param: return u.name() == v.name();
    case Kind::Func: return u.func() == v.func();
    default: break;
  }
  if (u.value() != v.value() || u.ops().size() != v.ops().size()) return false;
  for (std::size_t i = 0; i < u.ops().size(); ++i)
    if (!equal(u.op(i), v.op(i))) return false;
  return true;
}

inline bool operator==(const Expr& u, const Expr& v) { return equal(u, v); }
inline bool operator!=(const Expr& u, const Expr& v) { return !equal(u, v); }

int compare(const Expr& u, const Expr& v);

namespace detail {

inline int cmp_rational(const Rational& a, const Rational& b) {
  int c = cmp(a, b);
  return (c > 0) - (c < 0);
}

inline int compare_seq(const Expr* a, std::size_t na, const Expr* b, std::size_t nb) {
  std::size_t n = std::min(na, nb);
  for (std::size_t i = 0; i < n; ++i) {
    int c = compare(a[i], b[i]);
    if (c != 0) return c;
  }
  return (na > nb) - (na < nb);
}

inline int compare_leaf(const Expr& u, const Expr& v) {
  if (u.kind() != v.kind()) return kind_rank(u.kind()) < kind_rank(v.kind()) ? -1 : 1;
  switch (u.kind()) {
    case Kind::Coord:
      return (u.coord() > v.coord()) - (u.coord() < v.coord());
    case Kind::Param: {
      int c = u.name().compare(v.name());
      return (c > 0) - (c < 0);
    }
    case Kind::Func: {
      const auto& f = u.func();
      const auto& g = v.func();
      if (int c = f.name.compare(g.name); c != 0) return (c > 0) - (c < 0);
      if (f.deps != g.deps) return f.deps < g.deps ? -1 : 1;
      if (f.index.size() != g.index.size()) return f.index.size() < g.index.size() ? -1 : 1;
      for (std::size_t i = 0; i < f.index.size(); ++i)
        if (f.index[i] != g.index[i]) return f.index[i] < g.index[i] ? -1 : 1;
      return 0;
    }
    case Kind::Ln:
    case Kind::Exp:
    case Kind::Atan:
      return compare(u.arg(), v.arg());
    default:
      return 0;
  }
}

}  // namespace detail

// Total order used for canonical sorting. Numbers first; a product is compared
// as its factor sequence and a power as (base, exponent), so that x < 2x < x^2 < x*y.
inline int compare(const Expr& u, const Expr& v) {
  if (u.raw() == v.raw()) return 0;
  using detail::cmp_rational;
  using detail::compare_seq;
  const bool un = u.is_number(), vn = v.is_number();
  if (un && vn) return cmp_rational(u.value(), v.value());
  if (un) return -1;
  if (vn) return 1;

  if (u.is(Kind::Add) || v.is(Kind::Add)) {
    const Expr* a = u.is(Kind::Add) ? u.ops().data() : &u;
    std::size_t na = u.is(Kind::Add) ? u.ops().size() : 1;
    const Expr* b = v.is(Kind::Add) ? v.ops().data() : &v;
    std::size_t nb = v.is(Kind::Add) ? v.ops().size() : 1;
    if (int c = compare_seq(a, na, b, nb); c != 0) return c;
    Rational cu = u.is(Kind::Add) ? u.value() : Rational(0);
    Rational cv = v.is(Kind::Add) ? v.value() : Rational(0);
    if (int c = cmp_rational(cu, cv); c != 0) return c;
    return u.is(Kind::Add) ? (v.is(Kind::Add) ? 0 : 1) : -1;
  }
  if (u.is(Kind::Mul) || v.is(Kind::Mul)) {
    const Expr* a = u.is(Kind::Mul) ? u.ops().data() : &u;
    std::size_t na = u.is(Kind::Mul) ? u.ops().size() : 1;
    const Expr* b = v.is(Kind::Mul) ? v.ops().data() : &v;
    std::size_t nb = v.is(Kind::Mul) ? v.ops().size() : 1;
    if (int c = compare_seq(a, na, b, nb); c != 0) return c;
    Rational cu = u.is(Kind::Mul) ? u.value() : Rational(1);
    Rational cv = v.is(Kind::Mul) ? v.value() : Rational(1);
    if (int c = cmp_rational(cu, cv); c != 0) return c;
    return u.is(Kind::Mul) ? (v.is(Kind::Mul) ? 0 : 1) : -1;
  }
  if (u.is(Kind::Pow) || v.is(Kind::Pow)) {
    const Expr& bu = u.is(Kind::Pow) ? u.base() : u;
    const Expr& bv = v.is(Kind::Pow) ? v.base() : v;
    if (int c = compare(bu, bv); c != 0) return c;
    Rational eu = u.is(Kind::Pow) ? u.exponent() : Rational(1);
    Rational ev = v.is(Kind::Pow) ? v.exponent() : Rational(1);
    if (int c = cmp_rational(eu, ev); c != 0) return c;
    return u.is(Kind::Pow) ? (v.is(Kind::Pow) ? 0 : 1) : -1;
  }
  return detail::compare_leaf(u, v);
}

struct ExprLess {
  bool operator()(const Expr& a, const Expr& b) const { return compare(a, b) < 0; }
};

struct ExprHash {
  std::size_t operator()(const Expr& e) const { return e.hash(); }
};

// ---------------------------------------------------------------------------
// leaves

inline Expr coord(Coord c) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Coord;
  n->coord = c;
  n->key = std::string(1, coord_name(c));
  return detail::finish(std::move(n));
}

inline Expr param(const std::string& name) {
  if (name.empty()) throw ExprError("empty parameter name");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Param;
  n->name = name;
  n->domain = domain_for_param(name);
  n->key = name;
  return detail::finish(std::move(n));
}

inline Expr func(const FuncSym& f) {
  for (auto d : f.index)
    if (d < 1 || d > 4) throw ExprError("derivative index out of range in " + f.name);
  auto n = std::make_shared<Node>();
  n->kind = Kind::Func;
  n->func = f;
  std::sort(n->func.index.begin(), n->func.index.end());
  n->key = funcsym_key(n->func);
  return detail::finish(std::move(n));
}

// Dependent function a, b or c (of x, t, y, z) with an optional derivative index.
inline Expr dependent(const std::string& name, std::vector<std::uint8_t> index = {}) {
  return func(FuncSym{name, 0xF, std::move(index)});
}

// Function of the listed coordinates only, e.g. reduced(\"f\", {Coord::T}).
inline Expr reduced(const std::string& name, std::initializer_list<Coord> args,
                    std::vector<std::uint8_t> index = {}) {
  return func(FuncSym{name, deps_mask(args), std::move(index)});
}

namespace sym {
inline Expr x() { static const Expr e = coord(Coord::X); return e; }
inline Expr t() { static const Expr e = coord(Coord::T); return e; }
inline Expr y() { static const Expr e = coord(Coord::Y); return e; }
inline Expr z() { static const Expr e = coord(Coord::Z); return e; }
inline Expr a() { static const Expr e = dependent("a"); return e; }
inline Expr b() { static const Expr e = dependent("b"); return e; }
inline Expr c() { static const Expr e = dependent("c"); return e; }
}  // namespace sym

// ---------------------------------------------------------------------------
// canonicalizing constructors

Expr add(std::vector<Expr> ops);
Expr mul(std::vector<Expr> ops);
Expr pow(const Expr& base, const Rational& q);
Expr exp(const Expr& u);
Expr ln(const Expr& u);
Expr atan(const Expr& u);

namespace detail {

inline Expr mul_node(const Rational& coeff, std::vector<Expr> factors) {
  if (coeff == 0) return zero_expr();
  if (factors.empty()) return Expr(coeff);
  if (coeff == 1 && factors.size() == 1) return factors.front();
  return raw_node(Kind::Mul, coeff, std::move(factors));
}

inline void split_term(const Expr& term, Rational& coeff, Expr& rest) {
  if (term.is(Kind::Mul) && term.coeff() != 1) {
    coeff = term.coeff();
    rest = term.ops().size() == 1 ? term.op(0) : raw_node(Kind::Mul, 1, term.ops());
  } else {
    coeff = 1;
    rest = term;
  }
}

inline Expr scale_term(const Rational& c, const Expr& rest) {
  if (c == 1) return rest;
  if (rest.is(Kind::Mul)) return raw_node(Kind::Mul, c, rest.ops());
  return raw_node(Kind::Mul, c, {rest});
}

// m-th root extraction for a rational radical v^(a/m), 0 < a/m < 1
inline Expr number_radical(const Rational& v, const Rational& r) {
  if (v > 0) {
    unsigned long m = r.get_den().get_ui();
    mpz_class rn, rd;
    if (exact_root(v.get_num(), m, rn) && exact_root(v.get_den(), m, rd)) {
      Rational root(rn, rd);
      root.canonicalize();
      return Expr(rational_pow(root, r.get_num().get_si()));
    }
  }
  return raw_node(Kind::Pow, r, {make_number(v)});
}

}  // namespace detail

inline Expr add(std::vector<Expr> ops) {
  Rational constant = 0;
  std::vector<std::pair<Expr, Rational>> terms;
  terms.reserve(ops.size());
  auto push = [&](const Expr& term) {
    Rational c;
    Expr rest;
    detail::split_term(term, c, rest);
    terms.emplace_back(std::move(rest), std::move(c));
  };
  for (const auto& o : ops) {
    if (o.is_number()) {
      constant += o.value();
    } else if (o.is(Kind::Add)) {
      constant += o.value();
      for (const auto& t : o.ops()) push(t);
    } else {
      push(o);
    }
  }
  std::sort(terms.begin(), terms.end(),
            [](const auto& l, const auto& r) { return compare(l.first, r.first) < 0; });
  std::vector<Expr> out;
  out.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size();) {
    Rational c = terms[i].second;
    std::size_t j = i + 1;
    while (j < terms.size() && equal(terms[j].first, terms[i].first)) c += terms[j++].second;
    if (c != 0) out.push_back(detail::scale_term(c, terms[i].first));
    i = j;
  }
  if (out.empty()) return Expr(constant);
  if (constant == 0 && out.size() == 1) return out.front();
  return detail::raw_node(Kind::Add, constant, std::move(out));
}

inline Expr mul(std::vector<Expr> ops) {
  Rational coeff = 1;
  std::vector<std::pair<Expr, Rational>> factors;
  std::vector<Expr> exp_args;
  for (const auto& o : ops) {
    switch (o.kind()) {
      case Kind::Number:
        if (o.value() == 0) return detail::zero_expr();
        coeff *= o.value();
        break;
      case Kind::Mul:
        coeff *= o.coeff();
        for (const auto& f : o.ops()) {
          if (f.is(Kind::Pow)) factors.emplace_back(f.base(), f.exponent());
          else if (f.is(Kind::Exp)) exp_args.push_back(f.arg());
          else factors.emplace_back(f, 1);
        }
        break;
      case Kind::Pow: factors.emplace_back(o.base(), o.exponent()); break;
      case Kind::Exp: exp_args.push_back(o.arg()); break;
      default: factors.emplace_back(o, 1);
    }
  }
  std::sort(factors.begin(), factors.end(),
            [](const auto& l, const auto& r) { return compare(l.first, r.first) < 0; });
  std::vector<Expr> out;
  std::vector<Expr> again;
  auto absorb = [&](const Expr& r) {
    switch (r.kind()) {
      case Kind::Number: coeff *= r.value(); break;
      case Kind::Mul:
        coeff *= r.coeff();
        for (const auto& f : r.ops()) again.push_back(f);
        break;
      case Kind::Exp: exp_args.push_back(r.arg()); break;
      default: out.push_back(r);
    }
  };
  for (std::size_t i = 0; i < factors.size();) {
    Rational q = factors[i].second;
    std::size_t j = i + 1;
    while (j < factors.size() && equal(factors[j].first, factors[i].first)) q += factors[j++].second;
    if (q != 0) {
      const Expr& b = factors[i].first;
      // already-canonical single factors skip the power constructor
      if (q == 1) absorb(b);
      else if (j == i + 1 && !b.is_number() && !b.is(Kind::Mul) && !b.is(Kind::Pow) &&
               !b.is(Kind::Exp))
        absorb(detail::raw_node(Kind::Pow, q, {b}));
      else absorb(pow(b, q));
    }
    if (coeff == 0) return detail::zero_expr();
    i = j;
  }
  if (!exp_args.empty()) {
    Expr e = exp(add(std::move(exp_args)));
    if (e.is(Kind::Exp)) out.push_back(e);
    else {
      again.push_back(e);
    }
  }
  if (!again.empty()) {
    again.insert(again.end(), out.begin(), out.end());
    again.push_back(Expr(coeff));
    return mul(std::move(again));
  }
  std::sort(out.begin(), out.end(), ExprLess{});
  return detail::mul_node(coeff, std::move(out));
}

inline Expr pow(const Expr& base, const Rational& q) {
  if (q == 0) {
    if (base.is_zero_literal()) throw ExprError("0^0 is undefined");
    return detail::one_expr();
  }
  if (q == 1) return base;
  switch (base.kind()) {
    case Kind::Number: {
      const Rational& v = base.value();
      if (v == 0) {
        if (q < 0) throw ExprError("division by zero");
        return detail::zero_expr();
      }
      if (v == 1) return detail::one_expr();
      if (is_integer(q)) return Expr(rational_pow(v, to_long(q)));
      Rational n = floor_of(q);
      Rational r = q - n;
      Expr rad = detail::number_radical(v, r);
      Rational lead = rational_pow(v, to_long(n));
      if (rad.is_number()) return Expr(lead * rad.value());
      return detail::mul_node(lead, {rad});
    }
    case Kind::Pow: {
      const Rational& p = base.exponent();
      if (is_integer(q)) return pow(base.base(), p * q);
      bool even = is_integer(p) && mpz_even_p(p.get_num_mpz_t());
      if (even) return detail::raw_node(Kind::Pow, q, {base});
      return pow(base.base(), p * q);
    }
    case Kind::Mul: {
      if (!is_integer(q)) return detail::raw_node(Kind::Pow, q, {base});
      std::vector<Expr> parts;
      parts.reserve(base.ops().size() + 1);
      parts.push_back(Expr(rational_pow(base.coeff(), to_long(q))));
      for (const auto& f : base.ops()) parts.push_back(pow(f, q));
      return mul(std::move(parts));
    }
    case Kind::Exp:
      return exp(mul({Expr(q), base.arg()}));
    default:
      return detail::raw_node(Kind::Pow, q, {base});
  }
}

inline Expr exp(const Expr& u) {
  if (u.is_zero_literal()) return detail::one_expr();
  std::vector<Expr> terms;
  if (u.is(Kind::Add)) {
    terms = u.ops();
    if (u.value() != 0) terms.push_back(Expr(u.value()));
  } else {
    terms.push_back(u);
  }
  std::vector<Expr> powers, rest;
  for (const auto& t : terms) {
    if (t.is(Kind::Ln)) powers.push_back(pow(t.arg(), 1));
    else if (t.is(Kind::Mul) && t.ops().size() == 1 && t.op(0).is(Kind::Ln))
      powers.push_back(pow(t.op(0).arg(), t.coeff()));
    else rest.push_back(t);
  }
  if (powers.empty()) return detail::raw_node(Kind::Exp, 0, {u});
  if (!rest.empty()) powers.push_back(exp(add(std::move(rest))));
  return mul(std::move(powers));
}

inline Expr ln(const Expr& u) {
  if (u.is_one_literal()) return detail::zero_expr();
  if (u.is(Kind::Exp)) return u.arg();
  return detail::raw_node(Kind::Ln, 0, {u});
}

inline Expr atan(const Expr& u) {
  if (u.is_zero_literal()) return detail::zero_expr();
  return detail::raw_node(Kind::Atan, 0, {u});
}

inline Expr sqrt(const Expr& u) { return pow(u, make_rational(1, 2)); }

inline Expr operator+(const Expr& a, const Expr& b) { return add({a, b}); }
inline Expr operator-(const Expr& a) { return mul({detail::minus_one_expr(), a}); }
inline Expr operator-(const Expr& a, const Expr& b) { return add({a, -b}); }
inline Expr operator*(const Expr& a, const Expr& b) { return mul({a, b}); }
inline Expr operator/(const Expr& a, const Expr& b) { return mul({a, pow(b, -1)}); }
inline Expr& operator+=(Expr& a, const Expr& b) { return a = a + b; }
inline Expr& operator-=(Expr& a, const Expr& b) { return a = a - b; }
inline Expr& operator*=(Expr& a, const Expr& b) { return a = a * b; }
inline Expr pow(const Expr& base, long n) { return pow(base, Rational(n)); }
inline Expr pow(const Expr& base, int n) { return pow(base, Rational(n)); }

// ---------------------------------------------------------------------------
// traversal helpers

inline void for_each_leaf(const Expr& e, const std::function<void(const Expr&)>& fn) {
  if (e.is_leaf()) {
    fn(e);
    return;
  }
  for (const auto& o : e.ops()) for_each_leaf(o, fn);
}

// Coordinates, parameters and function symbols occurring in e, in canonical order.
inline std::vector<Expr> free_symbols(const Expr& e) {
  std::set<Expr, ExprLess> s;
  for_each_leaf(e, [&](const Expr& l) { s.insert(l); });
  return {s.begin(), s.end()};
}

inline bool contains_if(const Expr& e, const std::function<bool(const Expr&)>& pred) {
  if (pred(e)) return true;
  for (const auto& o : e.ops())
    if (contains_if(o, pred)) return true;
  return false;
}

inline bool contains(const Expr& e, const Expr& needle) {
  return contains_if(e, [&](const Expr& s) { return equal(s, needle); });
}

// True when some function symbol in e is named `name` (any derivative).
inline bool mentions_function(const Expr& e, const std::string& name) {
  return contains_if(e, [&](const Expr& s) { return s.is(Kind::Func) && s.func().name == name; });
}

inline std::vector<Expr> terms_of(const Expr& e) {
  if (!e.is(Kind::Add)) return {e};
  std::vector<Expr> out = e.ops();
  if (e.value() != 0) out.push_back(Expr(e.value()));
  return out;
}

}  // namespace walker
