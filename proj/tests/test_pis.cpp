#include <catch_amalgamated.hpp>

#include "walker/expr/parse.hpp"
#include "walker/expr/render.hpp"
#include "walker/jets/pde_system.hpp"
#include "walker/pis/ansatz.hpp"
#include "walker/pis/defect.hpp"
#include "walker/pis/invariants.hpp"

using namespace walker;

namespace {

Expr P(const std::string& s) { return parse(s); }

InvariantSet invs(std::initializer_list<const char*> texts) {
  InvariantSet s;
  for (auto t : texts) s.members.push_back(P(t));
  return s;
}

SolutionTriple triple(const char* a, const char* b, const char* c) { return {P(a), P(b), P(c), {}}; }

const SolutionTriple kFamily25[4] = {
    triple("c1", "c1*(c3*t + c4)", "c1*c2"),
    triple("c1*t + c2", "c1*c3^2*t + c5", "c3*(c1*t + c2) + c1*c4"),
    triple("-ln(t + c2)/c1 + c3", "c5*(t + c2)", "c4"),
    triple("c1*ln(t + c2) + c3*t + c4", "c6^2*(t + c2)/c3", "c5 + c6*t"),
};

// reduced unknowns f(t), g(t) for the A^7_1 ansatz b = a f, c = a g
const char* kEq21[6] = {
    "a_11 - a_22*f(t) - 2*a_2*f_2(t) - a*f_22(t)",
    "a_12*f(t) + a_1*f_2(t) + a_11*g(t)",
    "a_12 + a_22*g(t) + 2*a_2*g_2(t) + a*g_22(t)",
    "a_2^2*f(t) + a_2*a*f_2(t) - (a_2*g(t) + a*g_2(t))^2 + a*a_12*g(t) + a*a_22*f(t)",
    "a_1*a_2*f(t) - a_1*a_2*g(t)^2 - 2*a*a_1*g(t)*g_2(t) - a*a_12*g(t)^2 - a*a_22*f(t)*g(t) - "
    "2*a*a_2*f(t)*g_2(t) - a^2*f(t)*g_22(t)",
    "a_1^2*f(t) - 2*a*a_1*f(t)*g_2(t) - a_1^2*g(t)^2 + a*a_11*f(t) + 3*a*a_1*g(t)*f_2(t) + a*a_12*f(t)*g(t)",
};

const char* kEq22[4] = {
    "a^2*f_22(t) + a*a_2*f_2(t) + a^2*g_2(t)^2 - a_2^2*f(t) + a_2^2*g(t)^2 + 2*a*a_2*g(t)*g_2(t)",
    "a_1",
    "a*a_22*f(t) + a_2^2*f(t) - 2*a*a_2*g(t)*g_2(t) + a*a_2*f_2(t) - a^2*g_2(t)^2 - a_2^2*g(t)^2",
    "a^2*f(t)*g_22(t) - a*a_2*f_2(t)*g(t) + a^2*g(t)*g_2(t)^2 - a_2^2*f(t)*g(t) + a_2^2*g(t)^3 + "
    "2*a*a_2*g_2(t)*g(t)^2 + 2*a*a_2*f(t)*g_2(t)",
};

const char* kEq24[4][3] = {
    {"c3*t + c4", "c2", "c1"},
    {"(c1*c3^2*t + c5)/(c1*t + c2)", "c3 + c1*c4/(c1*t + c2)", "c1*t + c2"},
    {"c5*(t + c2)/(ln(t + c2) - c3*c1)", "c4/(ln(t + c2) - c3*c1)", "-ln(t + c2)/c1 + c3"},
    {"c6^2*(t + c2)/((c1*ln(t + c2) + c3*t + c4)*c3)", "(c5 + c6*t)/(c1*ln(t + c2) + c3*t + c4)",
     "c1*ln(t + c2) + c3*t + c4"},
};

PISAnsatz a71_ansatz() {
  PISAnsatz an;
  an.bindings = {{sym::b(), P("a*f(t)")}, {sym::c(), P("a*g(t)")}};
  an.arbitrary = {"a"};
  an.unknowns = {P("f(t)"), P("g(t)")};
  return an;
}

}  // namespace

TEST_CASE("invariant check") {
  auto a71 = make_subalgebra({"X1", "X7"});
  auto r = invariant_check(a71, invs({"t", "b/a", "c/a"}));
  CHECK(r.annihilated);
  CHECK(r.independent);
  auto one = invariant_check(a71, invs({"1"}));
  CHECK(one.annihilated);
  CHECK_FALSE(one.independent);
  CHECK(invariant_check(make_subalgebra({"X2", "X7"}), invs({"x", "b/a", "c/a"})).ok());
  auto bad = invariant_check(a71, invs({"x", "b/a"}));
  CHECK_FALSE(bad.annihilated);
  REQUIRE(bad.failures.size() == 1);
  CHECK(bad.failures[0].generator == 0);
  CHECK(bad.failures[0].member == 0);
  CHECK(invariant_check(make_subalgebra({"X5", "X7"}), invs({"t", "(c^2 - b*a)/b^2", "(-c*t + b*x)/b"})).ok());
  CHECK(invariant_check(make_subalgebra({"X2", "X6 + X7"}), invs({"x", "b/a^3", "c/a^2"})).ok());
  CHECK(invariant_check(make_subalgebra({"X4", "X7"}),
                        invs({"x", "(-a*t + c*x)/(x*a)", "(a*t^2 - 2*x*t*c + b*x^2)/(x^2*a)"}))
            .ok());
}

TEST_CASE("invariant rank and defect") {
  auto r = invariant_rank(invs({"t", "b/a", "c/a"}));
  CHECK(r.rank == 2);
  CHECK(r.defect == 1);
  auto id = invariant_rank(invs({"a", "b", "c"}));
  CHECK(id.rank == 3);
  CHECK(id.defect == 0);
  auto x5 = invariant_rank(invs({"t", "(c^2 - b*a)/b^2", "(-c*t + b*x)/b"}));
  CHECK(x5.rank == 2);
  CHECK(x5.defect == 1);
  InvariantSet s = invs({"t", "b/a", "c/a"});
  CHECK(s.xi_type().size() == 1);
  CHECK(s.i_type().size() == 2);
  CHECK(invariant_rank(s).rank + invariant_rank(s).defect == 3);
}

TEST_CASE("ansatz substitution reproduces the reduced system") {
  ReducedSystem red = ansatz_substitute(a71_ansatz(), einstein_system_2d());
  REQUIRE(red.residuals.size() == 6);
  for (std::size_t k = 0; k < 6; ++k) {
    INFO("equation " << k + 1 << ": " << render(red.residuals[k]));
    CHECK(is_zero(red.residuals[k] - P(kEq21[k])).verdict == Verdict::ZeroSymbolic);
  }
  PISAnsatz zero;
  zero.bindings = {{sym::a(), Expr(0)}, {sym::b(), Expr(0)}, {sym::c(), Expr(0)}};
  for (const auto& r : ansatz_substitute(zero, einstein_system_2d()).residuals) CHECK(r.is_zero_literal());

  PISAnsatz row3;
  row3.bindings = {{sym::b(), P("a^3*f(x)")}, {sym::c(), P("a^2*g(x)")}};
  for (const auto& r : ansatz_substitute(row3, einstein_system_2d()).residuals) {
    bool t_derivative = contains_if(r, [](const Expr& s) {
      if (!s.is(Kind::Func) || (s.func().name != "f" && s.func().name != "g")) return false;
      for (auto d : s.func().index)
        if (d != 1) return true;
      return false;
    });
    CHECK_FALSE(t_derivative);
  }
}

TEST_CASE("reduced families satisfy the reduced and consistency equations") {
  std::vector<Expr> eqs;
  for (auto e : kEq21) eqs.push_back(P(e));
  for (auto e : kEq22) eqs.push_back(P(e));
  std::vector<Expr> ineqs{P("f(t)"), P("g(t)"), P("a"), P("f(t) - g(t)^2")};
  for (int fam = 0; fam < 4; ++fam) {
    std::vector<std::pair<Expr, Expr>> family{
        {reduced("f", {Coord::T}), P(kEq24[fam][0])},
        {reduced("g", {Coord::T}), P(kEq24[fam][1])},
        {sym::a(), P(kEq24[fam][2])},
    };
    FamilyReport rep = verify_reduced_solutions(eqs, ineqs, family);
    for (const auto& e : rep.equations) {
      INFO("family " << fam + 1 << " equation " << e.equation << " " << verdict_name(e.result.verdict));
      CHECK(e.result.zero());
    }
    CHECK(rep.pass());
    if (fam < 2) {
      for (const auto& e : rep.equations) CHECK(e.result.verdict == Verdict::ZeroSymbolic);
    }
  }
  // f = g^2 violates the last inequation
  FamilyReport degenerate = verify_reduced_solutions(
      eqs, ineqs, {{reduced("f", {Coord::T}), P("c2^2")}, {reduced("g", {Coord::T}), P("c2")}, {sym::a(), P("c1")}});
  CHECK_FALSE(degenerate.pass());
  CHECK(degenerate.inequations[3].result.zero());
}

TEST_CASE("the four A^7_1 families solve the 2D system") {
  for (int fam = 0; fam < 4; ++fam) {
    auto v = system_residuals(kFamily25[fam], einstein_system_2d());
    for (const auto& e : v) {
      INFO("family " << fam + 1 << " equation " << e.equation + 1);
      CHECK(e.result.zero());
    }
  }
}

TEST_CASE("characteristic matrix") {
  auto a71 = make_subalgebra({"X1", "X7"});
  auto m = characteristic_matrix(a71, kFamily25[0]);
  for (const auto& e : m[0]) CHECK(is_zero(e).zero());
  CHECK(is_zero(m[1][0] - kFamily25[0].a).verdict == Verdict::ZeroSymbolic);
  CHECK(is_zero(m[1][1] - kFamily25[0].b).verdict == Verdict::ZeroSymbolic);
  CHECK(is_zero(m[1][2] - kFamily25[0].c).verdict == Verdict::ZeroSymbolic);

  SolutionTriple row2 = triple("(c1 + c2*t^3)*(x - c3)^2/t^3 - t*c4", "(c1 + c2*t^3)/t", "(c1 + c2*t^3)*(x - c3)/t^2");
  auto m5 = characteristic_matrix(make_subalgebra({"X5", "X7"}), row2);
  for (const auto& e : m5[0]) CHECK(is_zero(e).verdict == Verdict::ZeroSymbolic);
}

TEST_CASE("defect") {
  auto a71 = make_subalgebra({"X1", "X7"});
  for (const auto& fam : kFamily25) CHECK(defect(a71, fam) == 1);
  CHECK(defect(a71, triple("0", "0", "0")) == 0);
  CHECK(defect(make_subalgebra({"X3", "X5"}), triple("0", "0", "0")) == 0);
  SolutionTriple row3 = triple("4*(t + c1)/(c2*x + c3)^2", "4*c2^2*(t + c1)^3/(c2*x + c3)^4",
                               "4*c2*(t + c1)^2/(c2*x + c3)^3");
  CHECK(defect(make_subalgebra({"X2", "X6 + X7"}), row3) == 1);
  CHECK(defect(a71, triple("x*t", "x + t^2", "x^2*t")) == 2);
}

TEST_CASE("reducibility scan") {
  auto a71 = make_subalgebra({"X1", "X7"});
  auto r3 = reducibility_scan(a71, kFamily25[2]);
  REQUIRE(r3.directions.size() == 1);
  CHECK(r3.directions[0].generator == "X1");
  CHECK_FALSE(r3.whole_pencil);
  CHECK_FALSE(reducibility_scan(a71, triple("x*t", "x + t^2", "x^2*t")).reducible());
  CHECK(reducibility_scan(a71, triple("0", "0", "0")).whole_pencil);
  // invariant under 1/2 X1 + X7 but neither generator alone
  auto mixed = reducibility_scan(a71, triple("exp(2*x)*t", "exp(2*x)", "exp(2*x)*t^2"));
  REQUIRE(mixed.directions.size() == 1);
  CHECK(is_zero(mixed.directions[0].alpha - Expr(make_rational(1, 2))).zero());
  CHECK(mixed.directions[0].generator == "1/2*X1 + X7");
}
