#pragma once

#include <string>
#include <utility>
#include <vector>

#include "walker/expr/substitute.hpp"
#include "walker/expr/zero.hpp"
#include "walker/jets/pde_system.hpp"

namespace walker {

// a, b, c as functions of (x, t) with free parameters.
struct SolutionTriple {
  Expr a, b, c;
  std::vector<std::string> params;

  Substitution binding() const {
    Substitution s;
    s.bind(sym::a(), a).bind(sym::b(), b).bind(sym::c(), c);
    return s;
  }
};

// Dependent variables written through invariants. Bound symbols are a, b, c
// (or a subset; an unbound dependent stays an arbitrary function) and the
// unknowns are reduced functions such as f(t), g(t).
struct PISAnsatz {
  std::vector<std::pair<Expr, Expr>> bindings;
  std::vector<std::string> arbitrary;
  std::vector<Expr> unknowns;

  Substitution substitution() const {
    Substitution s;
    for (const auto& [k, v] : bindings) s.bind(k, v);
    return s;
  }
};

struct ReducedSystem {
  std::vector<Expr> residuals;
};

inline ReducedSystem ansatz_substitute(const PISAnsatz& ansatz, const PDESystem& sys) {
  Substitution s = ansatz.substitution();
  ReducedSystem out;
  for (const auto& r : sys.residuals) out.residuals.push_back(s(r));
  return out;
}

struct EquationVerdict {
  std::size_t equation = 0;
  ZeroResult result;
};

inline ZeroTestOptions check_options(int samples = 100, double tol = 1e-9, std::uint64_t seed = 42) {
  ZeroTestOptions o;
  o.samples = samples;
  o.tol = tol;
  o.seed = seed;
  return o;
}

// Residuals of sys on a concrete triple: symbolic first, numeric probes otherwise.
inline std::vector<EquationVerdict> system_residuals(const SolutionTriple& s, const PDESystem& sys,
                                                     const ZeroTestOptions& opt = check_options()) {
  Substitution b = s.binding();
  std::vector<EquationVerdict> out;
  for (std::size_t k = 0; k < sys.residuals.size(); ++k) out.push_back({k, is_zero(b(sys.residuals[k]), opt)});
  return out;
}

inline bool all_zero(const std::vector<EquationVerdict>& v) {
  for (const auto& e : v)
    if (!e.result.zero()) return false;
  return true;
}

struct FamilyReport {
  std::vector<EquationVerdict> equations;
  std::vector<EquationVerdict> inequations;  // pass means NOT identically zero
  bool pass() const {
    for (const auto& e : equations)
      if (!e.result.zero()) return false;
    for (const auto& e : inequations)
      if (e.result.zero()) return false;
    return true;
  }
};

// Substitutes a family for the reduced unknowns and checks the reduced
// equations vanish and the inequations do not.
inline FamilyReport verify_reduced_solutions(const std::vector<Expr>& equations, const std::vector<Expr>& inequations,
                                             const std::vector<std::pair<Expr, Expr>>& family,
                                             const ZeroTestOptions& opt = check_options()) {
  Substitution s;
  for (const auto& [k, v] : family) s.bind(k, v);
  FamilyReport rep;
  for (std::size_t k = 0; k < equations.size(); ++k) rep.equations.push_back({k, is_zero(s(equations[k]), opt)});
  for (std::size_t k = 0; k < inequations.size(); ++k)
    rep.inequations.push_back({k, is_zero(s(inequations[k]), opt)});
  return rep;
}

}  // namespace walker
