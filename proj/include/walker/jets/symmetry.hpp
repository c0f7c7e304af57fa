#pragma once

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "walker/expr/substitute.hpp"
#include "walker/jets/pde_system.hpp"
#include "walker/jets/prolong.hpp"

namespace walker {

// Order in which equations of the 2D Einstein system are solved for one
// second derivative each: (equation, derivative).
inline const std::vector<std::pair<std::size_t, Expr>>& einstein_solve_plan() {
  static const std::vector<std::pair<std::size_t, Expr>> plan{
      {0, parse("a_11")}, {1, parse("c_11")}, {2, parse("c_22")},
      {4, parse("c_12")}, {3, parse("a_22")}, {5, parse("b_11")},
  };
  return plan;
}

inline constexpr double kPivotGuard = 1e-3;

// Solves each planned equation for its designated derivative, in order, and
// stores the values in p. Returns false when a pivot is smaller than the guard.
inline bool solve_designated(NumericPoint& p, const PDESystem& sys,
                             const std::vector<std::pair<std::size_t, Expr>>& plan = einstein_solve_plan()) {
  for (const auto& [eq, var] : plan) {
    const Expr& res = sys.residuals[eq];
    Expr pivot = partial(res, var);
    Expr rest = res - pivot * var;  // each residual is linear in its designated derivative
    double pv = eval(pivot, p);
    if (std::fabs(pv) < kPivotGuard) return false;
    p[var.key()] = -eval(rest, p) / pv;
  }
  return true;
}

inline bool complete_on_shell(JetPoint& p, const PDESystem& sys = einstein_system_2d()) {
  NumericPoint np = p.numeric();
  if (!solve_designated(np, sys)) return false;
  for (const auto& [eq, var] : einstein_solve_plan()) {
    std::size_t alpha = var.func().name == "a" ? 0 : var.func().name == "b" ? 1 : 2;
    p.at(alpha, var.func().index) = np.at(var.key());
  }
  return true;
}

class SamplingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Random jet on the solution manifold of the 2D system. Free coordinates are
// uniform on [0.5, 2].
inline JetPoint on_shell_sample(std::uint64_t seed, int max_retries = 100) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), 0x5eedu};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> u(0.5, 2.0);
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    JetPoint p;
    p.x = u(rng);
    p.t = u(rng);
    for (auto& row : p.u)
      for (auto& v : row) v = u(rng);
    if (complete_on_shell(p)) return p;
  }
  throw SamplingError("no on-shell jet with admissible pivots");
}

inline std::vector<double> residuals_at(const PDESystem& sys, const JetPoint& p) {
  NumericPoint np = p.numeric();
  std::vector<double> out;
  for (const auto& r : sys.residuals) out.push_back(eval(r, np));
  return out;
}

struct SymmetryRow {
  std::size_t equation = 0;
  double max_relative = 0;
  NumericPoint worst;  // point with the largest relative residual
  double worst_value = 0;
};

struct SymmetryReport {
  bool pass = false;
  double max_relative = 0;
  std::vector<SymmetryRow> rows;
};

// pr^2 v applied to each equation, evaluated at n on-shell jets. The scale of
// each value is its magnitude shadow (sum of absolute term values), floored at 1.
inline SymmetryReport symmetry_check(const VectorField& v, const PDESystem& sys, int n, std::uint64_t seed = 42,
                                     double tol = 1e-8) {
  SymmetryReport rep;
  Prolongation pr = prolong2(v);
  std::vector<Expr> actions;
  for (const auto& r : sys.residuals) actions.push_back(pr.apply(r));
  rep.rows.resize(actions.size());
  for (std::size_t e = 0; e < actions.size(); ++e) rep.rows[e].equation = e;
  for (int k = 0; k < n; ++k) {
    JetPoint p = on_shell_sample(seed + static_cast<std::uint64_t>(k));
    NumericPoint np = p.numeric();
    for (std::size_t e = 0; e < actions.size(); ++e) {
      double val = eval(actions[e], np);
      double scale = std::max(1.0, eval_magnitude(actions[e], np));
      double rel = std::fabs(val) / scale;
      auto& row = rep.rows[e];
      if (rel > row.max_relative || row.worst.empty()) {
        row.max_relative = rel;
        row.worst = np;
        row.worst_value = val;
      }
    }
  }
  for (const auto& row : rep.rows) rep.max_relative = std::max(rep.max_relative, row.max_relative);
  rep.pass = rep.max_relative < tol;
  return rep;
}

}  // namespace walker
