#pragma once

#include <string>
#include <vector>

#include "walker/catalog/catalog.hpp"

namespace walker {

namespace detail {

inline const char* const kDomain1d = "eps, epsp in {-1, 1}; c1, c2, c3 real (named a, b, c in the source list)";
inline const char* const kDomain2d = "alpha, beta real; eps, epsp in {-1, 1}; epz in {-1, 0, 1}";

inline std::vector<CatalogEntry> optimal_1d() {
  const char* gens[13] = {
      "X7",
      "X1 + c1*X7",
      "X2 + c1*X7",
      "X6 + c1*X7",
      "eps*X1 + X6 + c1*X7",
      "X5 + c1*X6 + c2*X7",
      "eps*X2 + X5 + c1*X6 + c2*X7",
      "X4 + c1*X5 + c2*X6 + c3*X7",
      "eps*X1 + X4 + c1*X5 + c2*X6 + c3*X7",
      "X3 + c1*X5 + c2*X6 + c3*X7",
      "eps*X2 + X3 + c1*X5 + c2*X6 + c3*X7",
      "X3 + eps*X4 + c1*X5 + c2*X6 + c3*X7",
      "eps*X2 + X3 + epsp*X4 + c1*X5 + c2*X6 + c3*X7",
  };
  std::vector<CatalogEntry> out;
  for (int i = 0; i < 13; ++i) {
    CatalogEntry e;
    e.id = "thm31.X" + std::to_string(i + 1);
    e.kind = "optimal-1d";
    e.generators = {gens[i]};
    e.params = make_subalgebra(e.generators).params;
    e.domain = kDomain1d;
    e.provenance = "Theorem 3.1 item " + std::to_string(i + 1);
    out.push_back(std::move(e));
  }
  return out;
}

struct TwoDim {
  const char* name;  // superscript_subscript
  const char* g1;
  const char* g2;
};

inline std::vector<CatalogEntry> optimal_2d() {
  static const TwoDim rows[] = {
      {"1_1", "X1", "X3 + alpha*X6 + beta*X7"},
      {"2_1", "X1", "X2 + alpha*X5 + beta*X7"},
      {"3_1", "X1", "X5 + alpha*X7"},
      {"4_1", "X1", "X3 + epz*X5 + X6 + alpha*X7"},
      {"5_1", "X1", "X2 + alpha*X3 + beta*X7"},
      {"6_1", "X1", "X6 + alpha*X7"},
      {"7_1", "X1", "X7"},
      {"1_2", "X2", "X3 + alpha*X6 + beta*X7"},
      {"2_2", "X2", "X1 + epz*X4 + beta*X7"},
      {"3_2", "X2", "X4 + alpha*X7"},
      {"4_2", "X2", "X3 + epz*X4 + X6 + alpha*X7"},
      {"5_2", "X2", "X1 + X6 + alpha*X7"},
      {"6_2", "X2", "X6 + alpha*X7"},
      {"7_2", "X2", "X7"},
      {"1_3", "X6", "X3 + alpha*X7"},
      {"2_3", "X6", "X4"},
      {"3_3", "X6", "X5"},
      {"4_3", "X6", "X1 + alpha*X7"},
      {"5_3", "X6", "X2"},
      {"6_3", "X6", "X7"},
      {"1_4", "eps*X1 + X6", "X2"},
      {"2_4", "eps*X1 + X6", "X5"},
      {"3_4", "eps*X1 + X6", "X7"},
      {"1_5", "X5", "X3 + alpha*X6 + beta*X7"},
      {"2_5", "X5", "X1 + alpha*X6 + beta*X7"},
      {"3_5", "X5", "X6 + alpha*X7"},
      {"4_5", "X5", "X7"},
      {"1_6", "eps*X2 + X5", "X3 + 1/2*X6 + alpha*X7"},
      {"2_6", "eps*X2 + X5", "X1 + alpha*X7"},
      {"3_6", "eps*X2 + X5", "X7"},
      {"1_7", "X4", "X3 + alpha*X6 + beta*X7"},
      {"2_7", "X4", "X2 + alpha*X3 + beta*X7"},
      {"3_7", "X4", "X6 + alpha*X7"},
      {"4_7", "X4", "X7"},
      {"1_8", "eps*X1 + X4", "X3 + 2*X6 + alpha*X7"},
      {"2_8", "eps*X1 + X4", "X2 + alpha*X7"},
      {"3_8", "eps*X1 + X4", "X7"},
      {"1_9", "X3", "X2 + alpha*X7"},
      {"2_9", "X3", "X5"},
      {"3_9", "X3", "X1"},
      {"4_9", "X3", "X6 + alpha*X7"},
      {"5_9", "X3", "X7"},
      {"6_9", "X3", "X4"},
      {"1_10", "eps*X2 + X3", "X1"},
      {"2_10", "eps*X2 + X3", "X4"},
      {"3_10", "eps*X2 + X3", "X7"},
      {"4_10", "X2", "X3 + alpha*X7"},
      {"1_11", "X3 + eps*X4", "eps*X5 + X6 - 2*X7"},
      {"2_11", "X3 + eps*X4", "X2 + alpha*X7"},
      {"3_11", "X3 + eps*X4", "X7"},
      {"4_11", "X3 + eps*X4", "X3 + X6 + alpha*X7"},
      {"5_11", "X3 + eps*X4", "X1 + eps*X2"},
      {"1_12", "eps*X2 + X3 + epsp*X4", "X1 + epsp*X2"},
      {"2_12", "eps*X2 + X3 + epsp*X4", "X7"},
  };
  std::vector<CatalogEntry> out;
  for (const auto& r : rows) {
    CatalogEntry e;
    e.id = std::string("thm32.A") + r.name;
    e.kind = "optimal-2d";
    e.generators = {r.g1, r.g2};
    e.params = make_subalgebra(e.generators).params;
    e.domain = kDomain2d;
    std::string n = r.name;
    e.provenance = "Theorem 3.2, A^" + n.substr(0, n.find('_')) + "_" + n.substr(n.find('_') + 1);
    out.push_back(std::move(e));
  }
  return out;
}

inline CatalogAnsatz a71_ansatz() { return {{{"b", "a*f(t)"}, {"c", "a*g(t)"}}, {"a"}, {"f(t)", "g(t)"}}; }

inline CatalogEntry a71_pipeline() {
  CatalogEntry e;
  e.id = "a71.pipeline";
  e.kind = "reduced";
  e.generators = {"X1", "X7"};
  e.invariants = {"t", "b/a", "c/a"};
  e.ansatz = a71_ansatz();
  CatalogReduced r;
  r.residuals = {
      "a_11 - a_22*f(t) - 2*a_2*f_2(t) - a*f_22(t)",
      "a_12*f(t) + a_1*f_2(t) + a_11*g(t)",
      "a_12 + a_22*g(t) + 2*a_2*g_2(t) + a*g_22(t)",
      "a_2^2*f(t) + a_2*a*f_2(t) - (a_2*g(t) + a*g_2(t))^2 + a*a_12*g(t) + a*a_22*f(t)",
      "a_1*a_2*f(t) - a_1*a_2*g(t)^2 - 2*a*a_1*g(t)*g_2(t) - a*a_12*g(t)^2 - a*a_22*f(t)*g(t) - "
      "2*a*a_2*f(t)*g_2(t) - a^2*f(t)*g_22(t)",
      "a_1^2*f(t) - 2*a*a_1*f(t)*g_2(t) - a_1^2*g(t)^2 + a*a_11*f(t) + 3*a*a_1*g(t)*f_2(t) + "
      "a*a_12*f(t)*g(t)",
  };
  r.consistency = {
      "a^2*f_22(t) + a*a_2*f_2(t) + a^2*g_2(t)^2 - a_2^2*f(t) + a_2^2*g(t)^2 + 2*a*a_2*g(t)*g_2(t)",
      "a_1",
      "a*a_22*f(t) + a_2^2*f(t) - 2*a*a_2*g(t)*g_2(t) + a*a_2*f_2(t) - a^2*g_2(t)^2 - a_2^2*g(t)^2",
      "a^2*f(t)*g_22(t) - a*a_2*f_2(t)*g(t) + a^2*g(t)*g_2(t)^2 - a_2^2*f(t)*g(t) + a_2^2*g(t)^3 + "
      "2*a*a_2*g_2(t)*g(t)^2 + 2*a*a_2*f(t)*g_2(t)",
  };
  r.inequations = {"f(t)", "g(t)", "a", "f(t) - g(t)^2"};
  r.families = {
      {{"f(t)", "c3*t + c4"}, {"g(t)", "c2"}, {"a", "c1"}},
      {{"f(t)", "(c1*c3^2*t + c5)/(c1*t + c2)"}, {"g(t)", "c3 + c1*c4/(c1*t + c2)"}, {"a", "c1*t + c2"}},
      {{"f(t)", "c5*(t + c2)/(ln(t + c2) - c3*c1)"},
       {"g(t)", "c4/(ln(t + c2) - c3*c1)"},
       {"a", "-ln(t + c2)/c1 + c3"}},
      {{"f(t)", "c6^2*(t + c2)/((c1*ln(t + c2) + c3*t + c4)*c3)"},
       {"g(t)", "(c5 + c6*t)/(c1*ln(t + c2) + c3*t + c4)"},
       {"a", "c1*ln(t + c2) + c3*t + c4"}},
  };
  e.reduced = r;
  e.delta = 1;
  e.domain = "parameters c1..c6 real, generic";
  e.provenance = "Eqs. 16-24 (invariants, ansatz, reduced system, consistency conditions, inequations, families)";
  return e;
}

inline CatalogEntry pis_entry(std::string id, std::vector<std::string> gens, std::vector<std::string> invariants,
                              CatalogAnsatz ansatz, CatalogSolution sol, std::string provenance) {
  CatalogEntry e;
  e.id = std::move(id);
  e.kind = "pis";
  e.generators = std::move(gens);
  e.params = make_subalgebra(e.generators).params;
  e.invariants = std::move(invariants);
  e.ansatz = std::move(ansatz);
  e.solutions = {std::move(sol)};
  e.delta = 1;
  e.domain = "parameters real, generic";
  e.provenance = std::move(provenance);
  return e;
}

inline std::vector<CatalogEntry> a71_families() {
  const CatalogSolution sols[4] = {
      {"c1", "c1*(c3*t + c4)", "c1*c2", {"c1", "c2", "c3", "c4"}},
      {"c1*t + c2", "c1*c3^2*t + c5", "c3*(c1*t + c2) + c1*c4", {"c1", "c2", "c3", "c4", "c5"}},
      {"-ln(t + c2)/c1 + c3", "c5*(t + c2)", "c4", {"c1", "c2", "c3", "c4", "c5"}},
      {"c1*ln(t + c2) + c3*t + c4", "c6^2*(t + c2)/c3", "c5 + c6*t", {"c1", "c2", "c3", "c4", "c5", "c6"}},
  };
  std::vector<CatalogEntry> out;
  for (int i = 0; i < 4; ++i)
    out.push_back(pis_entry("eq25.family" + std::to_string(i + 1), {"X1", "X7"}, {"t", "b/a", "c/a"}, a71_ansatz(),
                            sols[i], "Eq. 25 case " + std::to_string(i + 1)));
  return out;
}

inline std::vector<CatalogEntry> pencil_invariant_solutions() {
  const CatalogSolution sols[3] = {
      {"0", "0", "0", {}},
      {"0", "c1*exp(beta/alpha*x)", "0", {"c1", "alpha", "beta"}},
      {"c2*exp(c1*t + beta/alpha*x)", "-c2*beta/(c1*alpha)*exp(c1*t + beta/alpha*x)",
       "-c1*c2*alpha/beta*exp(c1*t + beta/alpha*x)", {"c1", "c2", "alpha", "beta"}},
  };
  std::vector<CatalogEntry> out;
  for (int i = 0; i < 3; ++i) {
    CatalogEntry e;
    e.id = "eq26.family" + std::to_string(i + 1);
    e.kind = "invariant-solution";
    e.generators = {"alpha*X1 + beta*X7"};
    e.params = {"alpha", "beta"};
    e.solutions = {sols[i]};
    e.delta = 0;
    e.domain = "alpha, beta real, alpha != 0";
    e.provenance = "Eq. 26 case " + std::to_string(i + 1);
    out.push_back(std::move(e));
  }
  return out;
}

// Table 1 footnote terms; `log_of_square` selects ln((.)^2) over (ln(.))^2 for
// the first logarithm.
inline std::string table1_star_term(const char* v, bool log_of_square) {
  std::string s = v;
  std::string k = "(c1/c2)^(1/3)";
  std::string first = log_of_square ? "ln((" + s + " + " + k + ")^2)" : "ln(" + s + " + " + k + ")^2";
  return s + "*(c4 + c5)*(" + first + " - ln(" + s + "^2 - " + s + "*" + k + " + (c1/c2)^(2/3)) + 2*sqrt(3)*atan(2*c2*" +
         s + "/(sqrt(3)*c1)*(c1/c2)^(2/3) - 1/sqrt(3)))";
}

inline std::vector<CatalogEntry> table1() {
  CatalogAnsatz row1{{{"b", "a*f(x)"}, {"c", "a*g(x)"}}, {"a"}, {"f(x)", "g(x)"}};
  CatalogAnsatz row2{{{"a", "b*(x - g(t))^2/t^2 - b*f(t)"}, {"c", "b/t*(x - g(t))"}}, {"b"}, {"f(t)", "g(t)"}};
  CatalogAnsatz row3{{{"b", "a^3*f(x)"}, {"c", "a^2*g(x)"}}, {"a"}, {"f(x)", "g(x)"}};
  CatalogAnsatz row4{{{"b", "a*(g(x) + 2*t/x*f(x) + t^2/x^2)"}, {"c", "a*(f(x) + t/x)"}}, {"a"}, {"f(x)", "g(x)"}};
  std::vector<std::string> inv1{"x", "b/a", "c/a"};
  std::vector<std::string> inv2{"t", "(c^2 - b*a)/b^2", "(-c*t + b*x)/b"};
  std::vector<std::string> inv3{"x", "b/a^3", "c/a^2"};
  std::vector<std::string> inv4{"x", "(-a*t + c*x)/(x*a)", "(a*t^2 - 2*x*t*c + b*x^2)/(x^2*a)"};
  auto row2_sol = [](bool alt) {
    return CatalogSolution{"(c1 + c2*t^3)*(x - c3)^2/t^3 - " + table1_star_term("t", alt), "(c1 + c2*t^3)/t",
                           "(c1 + c2*t^3)*(x - c3)/t^2", {"c1", "c2", "c3", "c4", "c5"}};
  };
  auto row4_sol = [](bool alt) {
    return CatalogSolution{"(c1 + c2*x^3)/x", "(c1 + c2*x^3)*(t + c3)^2/x^3 + " + table1_star_term("x", alt),
                           "(c1 + c2*x^3)*(t + c3)/x^2", {"c1", "c2", "c3", "c4", "c5"}};
  };
  std::vector<CatalogEntry> out;
  out.push_back(pis_entry("table1.row1", {"X2", "X7"}, inv1, row1,
                          {"c1*x + c2", "c1*c3^2*x + (c5/c1 - c3^2*c2)*ln(c1*x + c2) + c6", "c3*(c1*x + c2) + c1*c4",
                           {"c1", "c2", "c3", "c4", "c5", "c6"}},
                          "Table 1 row 1, with footnote (*)"));
  out.push_back(pis_entry("table1.row2", {"X5", "X7"}, inv2, row2, row2_sol(false),
                          "Table 1 row 2, with footnote (**) read as printed: (ln(.))^2"));
  out.push_back(pis_entry("table1.row2.alt", {"X5", "X7"}, inv2, row2, row2_sol(true),
                          "Table 1 row 2, with footnote (**) read as ln((.)^2)"));
  out.push_back(pis_entry("table1.row3", {"X2", "X6 + X7"}, inv3, row3,
                          {"4*(t + c1)/(c2*x + c3)^2", "4*c2^2*(t + c1)^3/(c2*x + c3)^4",
                           "4*c2*(t + c1)^2/(c2*x + c3)^3", {"c1", "c2", "c3"}},
                          "Table 1 row 3"));
  out.push_back(pis_entry("table1.row4", {"X4", "X7"}, inv4, row4, row4_sol(false),
                          "Table 1 row 4, with footnote (***) read as printed: (ln(.))^2"));
  out.push_back(pis_entry("table1.row4.alt", {"X4", "X7"}, inv4, row4, row4_sol(true),
                          "Table 1 row 4, with footnote (***) read as ln((.)^2)"));
  return out;
}

inline CatalogEntry einstein_walker_example() {
  CatalogEntry e = pis_entry("eq27", {"X2", "X6 + X7"}, {"x", "b/a^3", "c/a^2"},
                             {{{"b", "a^3*f(x)"}, {"c", "a^2*g(x)"}}, {"a"}, {"f(x)", "g(x)"}},
                             {"4*(t + c1)/(c2*x + c3)^2", "4*c2^2*(t + c1)^3/(c2*x + c3)^4",
                              "4*c2*(t + c1)^2/(c2*x + c3)^3", {"c1", "c2", "c3"}},
                             "Eq. 27, metric Eq. 28");
  return e;
}

}  // namespace detail

inline const std::vector<CatalogEntry>& builtin() {
  static const std::vector<CatalogEntry> all = [] {
    std::vector<CatalogEntry> v;
    auto add = [&](std::vector<CatalogEntry> xs) { v.insert(v.end(), xs.begin(), xs.end()); };
    add(detail::optimal_1d());
    add(detail::optimal_2d());
    v.push_back(detail::a71_pipeline());
    add(detail::a71_families());
    add(detail::pencil_invariant_solutions());
    add(detail::table1());
    v.push_back(detail::einstein_walker_example());
    return v;
  }();
  return all;
}

}  // namespace walker
