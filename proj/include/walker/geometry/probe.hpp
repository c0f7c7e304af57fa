#pragma once

// Numeric check that the Einstein condition for the Walker metric matches the
// six-equation PDE system, at random second-order jets of a, b, c(x,t,y,z).

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "walker/expr/eval.hpp"
#include "walker/geometry/curvature.hpp"
#include "walker/jets/pde_system.hpp"
#include "walker/jets/symmetry.hpp"

namespace walker {

// Keys of all jet coordinates of a, b, c through order 2 in four variables.
inline std::vector<std::string> jet_keys_4d(bool with_yz = true) {
  std::vector<std::string> keys;
  std::uint8_t top = with_yz ? 4 : 2;
  for (const char* n : {"a", "b", "c"}) {
    keys.push_back(dependent(n).key());
    for (std::uint8_t i = 1; i <= top; ++i) {
      keys.push_back(dependent(n, {i}).key());
      for (std::uint8_t j = i; j <= top; ++j) keys.push_back(dependent(n, {i, j}).key());
    }
  }
  return keys;
}

// Random jet; coordinates without y, z dependence are zero when with_yz is off.
inline NumericPoint random_jet_4d(std::mt19937_64& rng, bool with_yz = true) {
  std::uniform_real_distribution<double> u(0.5, 2.0);
  NumericPoint p;
  for (const auto& k : jet_keys_4d(true)) p[k] = 0.0;
  for (const auto& k : jet_keys_4d(with_yz)) p[k] = u(rng);
  return p;
}

// Sets the designated derivatives so that equation k has residual target[k].
inline bool solve_with_targets(NumericPoint& p, const PDESystem& sys, const std::vector<double>& target) {
  for (const auto& [eq, var] : einstein_solve_plan()) {
    const Expr& res = sys.residuals[eq];
    Expr pivot = partial(res, var);
    Expr rest = res - pivot * var;
    double pv = eval(pivot, p);
    if (std::fabs(pv) < kPivotGuard) return false;
    p[var.key()] = (target[eq] - eval(rest, p)) / pv;
  }
  return true;
}

struct CorrespondenceEntry {
  std::size_t equation;
  double coefficient;  // meaningful when constant
  bool constant;       // same coefficient at every probed jet
};

struct CorrespondenceRow {
  std::string component;
  std::vector<CorrespondenceEntry> entries;
};

struct ProbeReport {
  bool pass = false;
  RiemannSign sign = RiemannSign::Standard;
  bool switched = false;
  int samples = 0;
  double max_on_shell = 0;      // max |E| over jets satisfying the system
  double min_generic = 1e300;   // min over generic jets of max |E|
  std::string counterexample;
  std::vector<CorrespondenceRow> correspondence;
};

namespace detail {

inline double max_abs(const std::vector<Expr>& comps, const NumericPoint& p) {
  double m = 0;
  for (const auto& e : comps) m = std::max(m, std::fabs(eval(e, p)));
  return m;
}

inline std::vector<Expr> einstein_components(RiemannSign sign) {
  std::vector<Expr> out;
  for (const auto& c : einstein_residual(walker_metric(), sign)) out.push_back(c.value);
  return out;
}

inline ProbeReport probe_once(int n, std::uint64_t seed, RiemannSign sign, double on_tol, double off_tol) {
  ProbeReport rep;
  rep.sign = sign;
  rep.samples = n;
  const PDESystem& sys = einstein_system_4d();
  std::vector<Expr> comps = einstein_components(sign);
  std::mt19937_64 rng(seed);
  const std::vector<double> zero(6, 0.0);
  const double delta = 1e-3;
  // coefficient[c][k] per probed jet
  std::vector<std::vector<std::vector<double>>> coeff(comps.size(), std::vector<std::vector<double>>(6));
  bool ok = true;
  for (int s = 0; s < n; ++s) {
    NumericPoint p = random_jet_4d(rng);
    if (!solve_with_targets(p, sys, zero)) {
      --s;
      continue;
    }
    double m = max_abs(comps, p);
    rep.max_on_shell = std::max(rep.max_on_shell, m);
    if (m >= on_tol && ok) {
      ok = false;
      rep.counterexample = "on-shell jet " + std::to_string(s) + " has max|E| = " + std::to_string(m);
    }
    for (std::size_t k = 0; k < 6; ++k) {
      NumericPoint q = p;
      std::vector<double> target = zero;
      target[k] = delta;
      solve_with_targets(q, sys, target);
      for (std::size_t c = 0; c < comps.size(); ++c) coeff[c][k].push_back(eval(comps[c], q) / delta);
    }
    NumericPoint g = random_jet_4d(rng);
    double mg = max_abs(comps, g);
    rep.min_generic = std::min(rep.min_generic, mg);
    if (mg <= off_tol && ok) {
      ok = false;
      rep.counterexample = "generic jet " + std::to_string(s) + " has max|E| = " + std::to_string(mg);
    }
  }
  auto ec = einstein_residual(walker_metric(), sign);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    CorrespondenceRow row{component_name(ec[c].i, ec[c].j), {}};
    for (std::size_t k = 0; k < 6; ++k) {
      const auto& v = coeff[c][k];
      double lo = 1e300, hi = -1e300, mag = 0;
      for (double x : v) {
        lo = std::min(lo, x);
        hi = std::max(hi, x);
        mag = std::max(mag, std::fabs(x));
      }
      if (v.empty() || mag < 1e-9) continue;
      bool constant = hi - lo < 1e-6 * std::max(1.0, mag);
      // snap constants to quarters, which is what the curvature produces
      double c0 = constant ? std::round(v.front() * 4) / 4 : v.front();
      row.entries.push_back({k, c0, constant});
    }
    rep.correspondence.push_back(std::move(row));
  }
  rep.pass = ok;
  return rep;
}

}  // namespace detail

// Tries the standard Riemann sign first and the flipped one once if the
// correspondence fails.
inline ProbeReport equivalence_probe(int n, std::uint64_t seed = 42, double on_tol = 1e-9, double off_tol = 1e-4) {
  ProbeReport rep = detail::probe_once(n, seed, RiemannSign::Standard, on_tol, off_tol);
  if (rep.pass) return rep;
  ProbeReport alt = detail::probe_once(n, seed, RiemannSign::Flipped, on_tol, off_tol);
  alt.switched = true;
  return alt.pass ? alt : rep;
}

}  // namespace walker
