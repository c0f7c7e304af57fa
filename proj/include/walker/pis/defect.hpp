#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "walker/expr/diff.hpp"
#include "walker/expr/ratnormal.hpp"
#include "walker/liealg/subalgebra.hpp"
#include "walker/pis/ansatz.hpp"
#include "walker/pis/numeric_rank.hpp"

namespace walker {

// Q^alpha = phi^alpha - xi^x u^alpha_x - xi^t u^alpha_t on the total space.
inline std::array<Expr, 3> characteristic(const VectorField& v) {
  std::array<Expr, 3> q;
  for (std::size_t alpha = 0; alpha < 3; ++alpha) {
    Expr u = total_space()[2 + alpha];
    q[alpha] = v.phi(alpha) - v.xi_x() * diff(u, Coord::X) - v.xi_t() * diff(u, Coord::T);
  }
  return q;
}

// One row per generator, evaluated on the solution.
inline std::vector<std::array<Expr, 3>> characteristic_matrix(const Subalgebra& h, const SolutionTriple& s) {
  Substitution b = s.binding();
  std::vector<std::array<Expr, 3>> rows;
  for (const auto& g : h.gens) {
    auto q = characteristic(to_field(g));
    for (auto& e : q) e = b(e);
    rows.push_back(q);
  }
  return rows;
}

class DefectBoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// dim of the orbit of the graph minus its dimension p = 2: the generic rank
// of the characteristic matrix.
inline int defect(const Subalgebra& h, const SolutionTriple& s, std::uint64_t seed = 42) {
  auto rows = characteristic_matrix(h, s);
  std::vector<std::vector<Expr>> m;
  for (const auto& r : rows) m.push_back({r.begin(), r.end()});
  int d = sampled_rank(m, seed);
  int bound = std::min<int>(static_cast<int>(h.gens.size()), 3);
  if (d < 0 || d > bound) throw DefectBoundError("defect outside [0, min(r, q)]");
  return d;
}

struct InvarianceDirection {
  Expr alpha, beta;  // alpha g1 + beta g2
  std::string generator;
};

struct ReducibilityReport {
  bool whole_pencil = false;
  std::vector<InvarianceDirection> directions;
  bool reducible() const { return whole_pencil || !directions.empty(); }
};

namespace detail {

inline bool row_vanishes(const std::array<Expr, 3>& q, const ZeroTestOptions& opt) {
  for (const auto& e : q)
    if (!is_zero(e, opt).zero()) return false;
  return true;
}

inline bool is_constant(const Expr& e, const ZeroTestOptions& opt) {
  return is_zero(diff(e, Coord::X), opt).zero() && is_zero(diff(e, Coord::T), opt).zero();
}

}  // namespace detail

// Finds the members alpha g1 + beta g2 (up to scale) of a two-dimensional
// algebra under which the solution is invariant, i.e. whose characteristic
// vanishes on it.
inline ReducibilityReport reducibility_scan(const Subalgebra& h, const SolutionTriple& s,
                                            const ZeroTestOptions& opt = check_options()) {
  ReducibilityReport rep;
  auto rows = characteristic_matrix(h, s);
  if (rows.size() != 2) return rep;
  const auto& q1 = rows[0];
  const auto& q2 = rows[1];
  bool z1 = detail::row_vanishes(q1, opt), z2 = detail::row_vanishes(q2, opt);
  if (z1 && z2) {
    rep.whole_pencil = true;
    return rep;
  }
  auto describe = [&](const Expr& a, const Expr& b) {
    return render_generator(lin_comb(a, h.gens[0], b, h.gens[1]));
  };
  if (z1) rep.directions.push_back({Expr(1), Expr(0), describe(Expr(1), Expr(0))});
  if (z2) rep.directions.push_back({Expr(0), Expr(1), describe(Expr(0), Expr(1))});
  if (z1 || z2) return rep;
  // beta = 1, alpha = -q2/q1 from the first component where q1 does not vanish
  for (std::size_t k = 0; k < 3; ++k) {
    if (is_zero(q1[k], opt).zero()) continue;
    Expr alpha = normalize(-q2[k] / q1[k]);
    if (!detail::is_constant(alpha, opt)) return rep;
    std::array<Expr, 3> comb;
    for (std::size_t j = 0; j < 3; ++j) comb[j] = alpha * q1[j] + q2[j];
    if (detail::row_vanishes(comb, opt)) rep.directions.push_back({alpha, Expr(1), describe(alpha, Expr(1))});
    return rep;
  }
  return rep;
}

}  // namespace walker
