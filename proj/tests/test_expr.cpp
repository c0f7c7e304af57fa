#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <random>

#include "walker/expr/diff.hpp"
#include "walker/expr/eval.hpp"
#include "walker/expr/expand.hpp"
#include "walker/expr/parse.hpp"
#include "walker/expr/ratnormal.hpp"
#include "walker/expr/render.hpp"
#include "walker/expr/substitute.hpp"
#include "walker/expr/zero.hpp"

using namespace walker;
using Catch::Approx;

namespace {

Expr P(const std::string& s) { return parse(s); }

// Random expression trees for property tests.
class TreeGen {
 public:
  explicit TreeGen(std::uint64_t seed, bool with_functions = true)
      : rng_(seed), functions_(with_functions) {}

  Expr leaf() {
    std::vector<Expr> pool{sym::x(), sym::t(), param("c1"), param("c2"), param("alpha")};
    if (functions_) {
      pool.push_back(sym::a());
      pool.push_back(dependent("b", {1, 2}));
      pool.push_back(reduced("f", {Coord::T}));
      pool.push_back(param("eps"));
    }
    int pick = uniform(0, static_cast<int>(pool.size()) + 1);
    if (pick >= static_cast<int>(pool.size())) {
      int n = uniform(-5, 5);
      int d = uniform(1, 3);
      return Expr(make_rational(n, d));
    }
    return pool[pick];
  }

  Expr tree(int depth) {
    if (depth == 0) return leaf();
    switch (uniform(0, 7)) {
      case 0:
      case 1: return tree(depth - 1) + tree(depth - 1);
      case 2: return tree(depth - 1) - tree(depth - 1);
      case 3:
      case 4: return tree(depth - 1) * tree(depth - 1);
      case 5: {
        Expr b = tree(depth - 1);
        if (b.is_zero_literal()) return b;
        static const Rational qs[] = {2, 3, -1, -2, make_rational(1, 2), make_rational(1, 3),
                                      make_rational(-3, 2)};
        return pow(b, qs[uniform(0, 6)]);
      }
      case 6: {
        Expr u = tree(depth - 1);
        int k = uniform(0, 2);
        return k == 0 ? exp(u) : k == 1 ? ln(u) : atan(u);
      }
      default: return leaf();
    }
  }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

 private:
  std::mt19937_64 rng_;
  bool functions_;
};

Expr safe_tree(TreeGen& g, int depth) {
  for (;;) {
    try {
      return g.tree(depth);
    } catch (const ExprError&) {
      // 0^-1 and friends; draw again
    }
  }
}

double central_difference(const Expr& e, NumericPoint p, const std::string& var, double h) {
  double x0 = p[var];
  p[var] = x0 + h;
  double fp = eval(e, p);
  p[var] = x0 - h;
  double fm = eval(e, p);
  return (fp - fm) / (2 * h);
}

}  // namespace

TEST_CASE("parse builds function symbols and folds identities") {
  Expr e = P("a_12 + c_22");
  REQUIRE(e.is(Kind::Add));
  REQUIRE(e.ops().size() == 2);
  CHECK(e.op(0) == dependent("a", {1, 2}));
  CHECK(e.op(1) == dependent("c", {2, 2}));

  CHECK(P("0*x + t") == sym::t());
  CHECK(P("a_21") == P("a_12"));
  CHECK(P("1*x^1 + 0") == sym::x());

  Expr cube = P("(c2*x+c3)^3");
  REQUIRE(cube.is(Kind::Pow));
  CHECK(cube.exponent() == 3);
  CHECK(cube.base() == P("c3 + x*c2"));
}

TEST_CASE("parse precedence and associativity") {
  CHECK(P("-x^2") == -(pow(sym::x(), 2)));
  CHECK(P("2^3^2") == Expr(512));
  CHECK(P("x/2/t") == sym::x() / (Expr(2) * sym::t()));
  CHECK(P("3/4") == Expr(make_rational(3, 4)));
  CHECK(P("x^-1") == pow(sym::x(), -1));
  CHECK(P("f_2(t)") == reduced("f", {Coord::T}, {2}));
  CHECK(P("sqrt(4)") == Expr(2));
  CHECK(P("8^(2/3)") == Expr(4));
}

TEST_CASE("parse errors carry byte offsets") {
  try {
    P("x + a_5");
    FAIL("expected ParseError");
  } catch (const ParseError& err) {
    CHECK(err.offset() == 6);
  }
  try {
    P("x + foo");
    FAIL("expected ParseError");
  } catch (const ParseError& err) {
    CHECK(err.offset() == 4);
    CHECK(std::string(err.what()).find("unknown identifier") != std::string::npos);
  }
  CHECK_THROWS_AS(P("1.5*x"), ParseError);
  CHECK_THROWS_AS(P("x +"), ParseError);
  CHECK_THROWS_AS(P("(x"), ParseError);
  CHECK_THROWS_AS(P("x^t"), ParseError);
  CHECK_THROWS_AS(P("0^0"), ParseError);
  CHECK_THROWS_AS(P("x/0"), ParseError);
  CHECK_THROWS_AS(pow(Expr(0), Rational(0)), ExprError);
}

TEST_CASE("parse accepts declared parameters only") {
  CHECK_THROWS_AS(P("lambda*x"), ParseError);
  ParseOptions opts;
  opts.extra_params = {"lambda"};
  CHECK(parse("lambda*x", opts) == param("lambda") * sym::x());
}

TEST_CASE("render output parses back to the same tree") {
  const char* samples[] = {
      "4*(t + c1)/(c2*x + c3)^2", "-x", "x - 1/2*t", "(c1/c2)^(1/3)*t", "sqrt(x + 1)/x",
      "exp(-x)*ln(t + 1)", "a_12 + c_22 - 2*a*b_1", "f_22(t)*g(t)^2 - 1", "(-8)^(1/3)",
      "eps*x + epsp", "atan(x/t)^2", "1/(2*x*(t + 1)^3)"};
  for (const char* s : samples) {
    Expr e = P(s);
    INFO(s << " rendered as " << render(e));
    CHECK(P(render(e)) == e);
  }
  CHECK(render(P("4*(t+c1)/(c2*x+c3)^2")) == "4*(t + c1)/(x*c2 + c3)^2");
}

TEST_CASE("parse(render(e)) == e on 1000 random trees") {
  TreeGen g(7);
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    Expr e = safe_tree(g, 4);
    std::string text = render(e);
    ParseOptions opts;
    Expr back = parse(text, opts);
    INFO(text);
    REQUIRE(back == e);
    ++checked;
  }
  CHECK(checked == 1000);
}

TEST_CASE("sums and products are canonical under reordering") {
  TreeGen g(11);
  std::mt19937_64 rng(5);
  for (int round = 0; round < 200; ++round) {
    std::vector<Expr> items;
    int n = g.uniform(2, 6);
    for (int i = 0; i < n; ++i) items.push_back(safe_tree(g, 2));
    std::vector<Expr> shuffled = items;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    // left fold against right fold of a permutation
    Expr s1 = items[0];
    for (std::size_t i = 1; i < items.size(); ++i) s1 = s1 + items[i];
    Expr s2 = shuffled.back();
    for (std::size_t i = shuffled.size() - 1; i-- > 0;) s2 = shuffled[i] + s2;
    REQUIRE(s1 == s2);
    Expr p1 = mul(items);
    Expr p2 = shuffled[0];
    for (std::size_t i = 1; i < shuffled.size(); ++i) p2 = p2 * shuffled[i];
    REQUIRE(p1 == p2);
  }
}

TEST_CASE("compare is a strict total order on random trees") {
  TreeGen g(3);
  std::vector<Expr> v;
  for (int i = 0; i < 120; ++i) v.push_back(safe_tree(g, 3));
  for (const auto& a : v) {
    REQUIRE(compare(a, a) == 0);
    for (const auto& b : v) {
      int ab = compare(a, b);
      REQUIRE(ab == -compare(b, a));
      REQUIRE((ab == 0) == (a == b));
      if (ab >= 0) continue;
      for (const auto& c : v)
        if (compare(b, c) < 0) REQUIRE(compare(a, c) < 0);
    }
  }
}

TEST_CASE("diff follows the index convention") {
  CHECK(diff(P("a_1"), Coord::T) == P("a_12"));
  CHECK(diff(P("a_2"), Coord::X) == P("a_12"));
  CHECK(diff(P("c1*t + c2"), Coord::X) == Expr(0));
  CHECK(diff(P("f(t)"), Coord::X) == Expr(0));
  CHECK(diff(P("f(t)"), Coord::T) == P("f_2(t)"));
  CHECK(diff(P("a*b"), Coord::Y) == P("a_3*b + a*b_3"));
}

TEST_CASE("diff of a nested power quotient") {
  Expr e = P("4*(t+c1)/(c2*x+c3)^2");
  Expr d = diff(e, Coord::X);
  Expr expected = P("-8*c2*(t+c1)/(c2*x+c3)^3");
  CHECK(d == expected);

  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.5, 2.0);
  for (int i = 0; i < 10; ++i) {
    NumericPoint p{{"x", u(rng)}, {"t", u(rng)}, {"c1", u(rng)}, {"c2", u(rng)}, {"c3", u(rng)}};
    double fd = central_difference(e, p, "x", 1e-5);
    CHECK(eval(d, p) == Approx(fd).epsilon(1e-7));
  }
}

TEST_CASE("diff agrees with central differences on random smooth trees") {
  TreeGen g(21, false);
  std::mt19937_64 rng(2);
  int compared = 0;
  for (int i = 0; compared < 100 && i < 5000; ++i) {
    Expr e = safe_tree(g, 3);
    std::vector<Expr> leaves = free_symbols(e);
    NumericPoint p = sample_point(leaves, rng);
    p["x"] = std::uniform_real_distribution<double>(0.7, 1.8)(rng);
    double fd;
    double d;
    double mag;
    try {
      fd = central_difference(e, p, "x", 1e-6);
      d = eval(diff(e, Coord::X), p);
      mag = std::max({1.0, std::fabs(eval(e, p)), std::fabs(d)});
      // skip points near a singularity where the difference quotient is unreliable
      double fd2 = central_difference(e, p, "x", 2e-6);
      if (std::fabs(fd - fd2) > 1e-6 * mag) continue;
    } catch (const DomainError&) {
      continue;
    }
    INFO(render(e));
    REQUIRE(std::fabs(d - fd) <= 1e-6 * mag);
    ++compared;
  }
  CHECK(compared == 100);
}

TEST_CASE("mixed partial derivatives commute") {
  TreeGen g(31);
  for (int i = 0; i < 200; ++i) {
    Expr e = safe_tree(g, 3);
    Expr xt = diff(diff(e, Coord::X), Coord::T);
    Expr tx = diff(diff(e, Coord::T), Coord::X);
    INFO(render(e));
    REQUIRE(is_zero(xt - tx).verdict == Verdict::ZeroSymbolic);
  }
}

TEST_CASE("substitution rewrites derivatives through the binding") {
  Substitution s;
  s.bind(sym::b(), P("a*f(t)"));
  CHECK(s(P("b_2")) == P("a_2*f(t) + a*f_2(t)"));
  CHECK(s(P("b_3")) == P("a_3*f(t)"));
  CHECK(s(P("b_13")) == P("a_13*f(t)"));

  Substitution id;
  id.bind(sym::a(), sym::a());
  Expr e = P("a_12*b + c_2");
  CHECK(id(e) == e);

  Substitution xt_only;
  xt_only.bind(sym::c(), P("x*t"));
  CHECK(xt_only(P("c_3 + c_24")) == Expr(0));

  Substitution par;
  par.bind(param("c1"), P("2*t"));
  CHECK(par(P("c1^2 + x")) == P("4*t^2 + x"));
}

TEST_CASE("expand distributes and multiplies out powers") {
  CHECK(expand(P("(x+1)^2")) == P("x^2 + 2*x + 1"));
  CHECK(expand(P("(x+t)*(x-t)")) == P("x^2 - t^2"));
  CHECK(expand(P("2*(x+1)*ln(t*(t+1))")) == P("2*x*ln(t^2+t) + 2*ln(t^2+t)"));
}

TEST_CASE("rational normal form proves rational identities") {
  RationalNormalizer n;
  CHECK(n.is_zero(P("(x^2-1)/(x-1) - (x+1)")));
  CHECK(n.is_zero(P("1/x + 1/t - (x+t)/(x*t)")));
  CHECK(n.is_zero(P("1/(x+1) - 1/(x+2) - 1/((x+1)*(x+2))")));
  CHECK(n.is_zero(P("sqrt(x+1)^2 - x - 1")));
  CHECK(n.is_zero(P("sqrt(x+1)*sqrt(x+1)*sqrt(x+1) - (x+1)*sqrt(x+1)")));
  CHECK(n.is_zero(P("1/sqrt(x+1) - sqrt(x+1)/(x+1)")));
  CHECK(n.is_zero(P("eps^2 - 1")));
  CHECK(n.is_zero(P("1/eps - eps")));
  CHECK(n.is_zero(P("epz^3 - epz")));
  CHECK(n.is_zero(P("exp(ln(x+1)) - x - 1")));
  CHECK(n.is_zero(P("exp(x)*exp(t) - exp(x+t)")));
  CHECK(n.is_zero(P("ln((x*t+x)/x) - ln(t+1)")));
  CHECK(n.is_zero(P("(c1/c2)^(1/3)*(c1/c2)^(2/3) - c1/c2")));
  CHECK_FALSE(n.is_zero(P("x - t")));
  CHECK_FALSE(n.is_zero(P("ln(x^2) - 2*ln(x)")));
}

TEST_CASE("is_zero verdicts") {
  CHECK(is_zero(P("a_11 - a_11")).verdict == Verdict::ZeroSymbolic);
  CHECK(is_zero(P("a_11*b - b*a_11")).verdict == Verdict::ZeroSymbolic);

  ZeroResult logs = is_zero(P("ln(x^2) - 2*ln(x)"));
  CHECK(logs.verdict == Verdict::ZeroNumeric);
  CHECK(logs.probes == 64);

  ZeroResult nz = is_zero(P("x - t"));
  REQUIRE(nz.verdict == Verdict::NonZero);
  CHECK(nz.witness.count("x") == 1);
  CHECK(nz.witness.count("t") == 1);
  CHECK(std::fabs(nz.witness.at("x") - nz.witness.at("t")) == Approx(std::fabs(nz.value)));

  // tiny but nonzero coefficients are still nonzero
  CHECK(is_zero(P("x/1000000000000")).verdict == Verdict::NonZero);
}

TEST_CASE("is_zero is deterministic for a fixed seed") {
  ZeroTestOptions opt;
  opt.seed = 99;
  ZeroResult r1 = is_zero(P("x - t + c1"), opt);
  ZeroResult r2 = is_zero(P("x - t + c1"), opt);
  CHECK(r1.witness == r2.witness);
}

TEST_CASE("symbolic zero is sound on random trees") {
  TreeGen g(41);
  int symbolic = 0;
  for (int i = 0; i < 300; ++i) {
    Expr a = safe_tree(g, 3);
    Expr b = safe_tree(g, 2);
    // a nontrivial identity and a perturbed copy
    Expr ident = expand(a * (b + 1)) - a * b - a;
    RationalNormalizer n;
    bool sym = false;
    try {
      sym = n.is_zero(ident);
    } catch (const ExprError&) {
      sym = false;
    }
    if (sym) ++symbolic;
    ZeroTestOptions opt;
    opt.samples = 8;
    opt.symbolic = false;
    opt.seed = static_cast<std::uint64_t>(i);
    ZeroResult numeric;
    try {
      numeric = probe_zero(ident, opt);
    } catch (const DomainError&) {
      continue;
    }
    INFO(render(ident));
    if (sym) REQUIRE(numeric.verdict != Verdict::NonZero);
  }
  CHECK(symbolic > 250);
}

TEST_CASE("eval examples") {
  CHECK(eval(P("b/a"), {{"a", 2}, {"b", 6}}) == Approx(3.0));
  CHECK(eval(P("-b/a^2"), {{"a", 2}, {"b", 8}}) == Approx(-2.0));
  NumericPoint p{{"x", 1}, {"t", 1}, {"c1", 0}, {"c2", 1}, {"c3", 1}};
  CHECK(eval(P("4*(t+c1)/(c2*x+c3)^2"), p) == Approx(1.0));
  CHECK(eval(P("(-8)^(1/3)"), {}) == Approx(-2.0));
  CHECK_THROWS_AS(eval(P("ln(x)"), {{"x", -1}}), DomainError);
  CHECK_THROWS_AS(eval(P("sqrt(x)"), {{"x", -1}}), DomainError);
  CHECK_THROWS_AS(eval(P("1/x"), {{"x", 1e-9}}), DomainError);
  CHECK_THROWS_AS(eval(P("x + t"), {{"x", 1}}), DomainError);
}
