#pragma once

#include <string>
#include <vector>

#include "walker/expr/render.hpp"
#include "walker/liealg/subalgebra.hpp"
#include "walker/pis/numeric_rank.hpp"

namespace walker {

// Invariants over (x, t, a, b, c): xi-type members involve only x, t.
struct InvariantSet {
  std::vector<Expr> members;

  std::vector<Expr> xi_type() const {
    std::vector<Expr> out;
    for (const auto& m : members)
      if (!mentions_dependent(m)) out.push_back(m);
    return out;
  }
  std::vector<Expr> i_type() const {
    std::vector<Expr> out;
    for (const auto& m : members)
      if (mentions_dependent(m)) out.push_back(m);
    return out;
  }

  static bool mentions_dependent(const Expr& e) {
    return mentions_function(e, "a") || mentions_function(e, "b") || mentions_function(e, "c");
  }
};

struct InvariantFailure {
  std::size_t generator;
  std::size_t member;
  NumericPoint witness;
  double value;
};

struct InvariantReport {
  bool annihilated = true;
  bool independent = true;
  int jacobian_rank = 0;
  std::vector<InvariantFailure> failures;

  bool ok() const { return annihilated && independent; }
};

inline InvariantReport invariant_check(const Subalgebra& h, const InvariantSet& inv, std::uint64_t seed = 42) {
  InvariantReport rep;
  for (std::size_t g = 0; g < h.gens.size(); ++g) {
    VectorField v = to_field(h.gens[g]);
    for (std::size_t m = 0; m < inv.members.size(); ++m) {
      ZeroResult z = is_zero(v.apply(inv.members[m]));
      if (!z.zero()) {
        rep.annihilated = false;
        rep.failures.push_back({g, m, z.witness, z.value});
      }
    }
  }
  std::vector<std::vector<Expr>> jac;
  for (const auto& m : inv.members) {
    std::vector<Expr> row;
    for (const auto& v : total_space()) row.push_back(partial(m, v));
    jac.push_back(std::move(row));
  }
  rep.jacobian_rank = sampled_rank(jac, seed);
  rep.independent = rep.jacobian_rank == static_cast<int>(inv.members.size());
  return rep;
}

struct RankResult {
  int rank = 0;
  int defect = 0;  // q - rank, q = 3
};

// Rank of d(I-type invariants)/d(a, b, c) at random points.
inline RankResult invariant_rank(const InvariantSet& inv, std::uint64_t seed = 42) {
  std::vector<std::vector<Expr>> jac;
  for (const auto& m : inv.i_type()) {
    std::vector<Expr> row;
    for (std::size_t k = 2; k < 5; ++k) row.push_back(partial(m, total_space()[k]));
    jac.push_back(std::move(row));
  }
  RankResult r;
  r.rank = jac.empty() ? 0 : sampled_rank(jac, seed);
  r.defect = 3 - r.rank;
  return r;
}

}  // namespace walker
