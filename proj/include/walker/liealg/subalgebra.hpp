#pragma once

#include <optional>
#include <string>
#include <vector>

#include "walker/expr/ratnormal.hpp"
#include "walker/expr/substitute.hpp"
#include "walker/expr/zero.hpp"
#include "walker/liealg/algebra.hpp"

namespace walker {

struct Subalgebra {
  std::vector<CoeffVector> gens;
  std::vector<std::string> params;  // symbolic parameters appearing in gens
};

inline Subalgebra make_subalgebra(const std::vector<std::string>& texts) {
  Subalgebra h;
  std::set<std::string> seen;
  for (const auto& t : texts) {
    h.gens.push_back(parse_generator(t));
    for (const auto& c : h.gens.back())
      for (const auto& s : free_symbols(c))
        if (s.is(Kind::Param) && seen.insert(s.name()).second) h.params.push_back(s.name());
  }
  return h;
}

// One branch of the closure check. `condition` is empty for the generic
// branch, or names the value taken by a sign-or-zero parameter.
struct ClosureBranch {
  std::string condition;
  bool closed = false;
  Expr lambda, mu;  // [g1, g2] = lambda g1 + mu g2
  std::string detail;
};

struct ClosureResult {
  bool closed = false;
  std::vector<ClosureBranch> branches;
};

namespace detail {

inline bool symbolically_zero(const Expr& e) {
  ZeroTestOptions opt;
  return is_zero(e, opt).verdict == Verdict::ZeroSymbolic;
}

inline ClosureBranch close_pair(const CoeffVector& g1, const CoeffVector& g2) {
  ClosureBranch br;
  CoeffVector w = bracket(g1, g2);
  // first 2x2 minor that is not identically zero
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = i + 1; j < 7; ++j) {
      Expr det = normalize(g1[i] * g2[j] - g1[j] * g2[i]);
      if (is_zero(det).zero()) continue;
      br.lambda = normalize((w[i] * g2[j] - w[j] * g2[i]) / det);
      br.mu = normalize((g1[i] * w[j] - g1[j] * w[i]) / det);
      for (std::size_t k = 0; k < 7; ++k) {
        Expr r = w[k] - br.lambda * g1[k] - br.mu * g2[k];
        if (!symbolically_zero(r)) {
          br.detail = "residual in X" + std::to_string(k + 1) + ": " + render(normalize(r));
          return br;
        }
      }
      br.closed = true;
      return br;
    }
  br.detail = "generators are linearly dependent";
  return br;
}

inline bool mentions_param(const Subalgebra& h, const std::string& name) {
  for (const auto& g : h.gens)
    for (const auto& c : g)
      if (contains(c, param(name))) return true;
  return false;
}

}  // namespace detail

// Closure of a 1- or 2-dimensional span, symbolic in its parameters. Sign
// parameters rely on eps^2 = 1 in the normal form; a sign-or-zero parameter
// is split into its three values.
inline ClosureResult subalgebra_closed(const Subalgebra& h) {
  ClosureResult res;
  if (h.gens.empty() || h.gens.size() > 2) {
    res.branches.push_back({"", false, Expr(0), Expr(0), "need 1 or 2 generators"});
    return res;
  }
  std::vector<std::pair<std::string, Substitution>> splits;
  std::vector<std::string> zero_params;
  for (const auto& p : h.params)
    if (domain_for_param(p) == ParamDomain::SignOrZero && detail::mentions_param(h, p)) zero_params.push_back(p);
  if (zero_params.empty()) splits.push_back({"", Substitution{}});
  else {
    // cartesian product over {-1, 0, 1}
    std::size_t n = zero_params.size(), total = 1;
    for (std::size_t k = 0; k < n; ++k) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      Substitution sub;
      std::string cond;
      std::size_t c = code;
      for (std::size_t k = 0; k < n; ++k) {
        int v = static_cast<int>(c % 3) - 1;
        c /= 3;
        sub.bind(param(zero_params[k]), Expr(v));
        if (!cond.empty()) cond += ", ";
        cond += zero_params[k] + "=" + std::to_string(v);
      }
      splits.push_back({cond, sub});
    }
  }
  res.closed = true;
  for (const auto& [cond, sub] : splits) {
    std::vector<CoeffVector> g = h.gens;
    for (auto& v : g)
      for (auto& c : v) c = sub.empty() ? c : sub(c);
    ClosureBranch br;
    if (g.size() == 1) {
      bool nonzero = false;
      for (const auto& c : g[0]) nonzero = nonzero || !is_zero(c).zero();
      br = {cond, nonzero, Expr(0), Expr(0), nonzero ? "" : "generator vanishes"};
    } else {
      br = detail::close_pair(g[0], g[1]);
      br.condition = cond;
    }
    res.closed = res.closed && br.closed;
    res.branches.push_back(std::move(br));
  }
  return res;
}

// Solutions of [x, Y] = lambda x + mu Y for fixed rational x. For every mu
// that is an eigenvalue of ad_x the solution set is a linear space in
// (Y, lambda); for any other mu only multiples of x solve, since ad_x x = 0.
struct NormalizerBranch {
  Rational mu;
  std::vector<RVector> basis;  // vectors (Y_1..Y_7, lambda)
};

struct NormalizerSolution {
  std::vector<NormalizerBranch> branches;
  bool complete = true;  // false if ad_x has eigenvalues outside Q
};

inline NormalizerSolution normalizer_solve(const RVector& x) {
  NormalizerSolution out;
  RMatrix ad = ad_matrix(x);
  RVector cp = charpoly(ad);
  std::vector<Rational> ev = rational_roots(cp);
  // count rational roots with multiplicity by deflation
  std::size_t found = 0;
  RVector poly = cp;
  for (const auto& r : ev) {
    while (poly.size() > 1 && poly_eval(poly, r) == 0) {
      RVector q(poly.size() - 1, Rational(0));
      Rational carry = 0;
      for (std::size_t i = poly.size() - 1; i-- > 0;) {
        carry = poly[i + 1] + carry * r;
        q[i] = carry;
      }
      poly = q;
      ++found;
    }
  }
  out.complete = found == 7;
  for (const auto& mu : ev) {
    RMatrix m = rzeros(7, 8);
    for (std::size_t i = 0; i < 7; ++i) {
      for (std::size_t j = 0; j < 7; ++j) m[i][j] = ad[i][j];
      m[i][i] -= mu;
      m[i][7] = -x[i];
    }
    out.branches.push_back({mu, rnullspace(m, 8)});
  }
  return out;
}

// Checks a candidate pair against the solved normalizer equations.
inline bool normalizer_admits(const NormalizerSolution& sol, const RVector& y) {
  for (const auto& br : sol.branches) {
    RMatrix m = rzeros(8, br.basis.size());
    for (std::size_t k = 0; k < br.basis.size(); ++k)
      for (std::size_t i = 0; i < 8; ++i) m[i][k] = br.basis[k][i];
    // y must equal the Y-part of some combination (lambda free)
    RMatrix a = rzeros(7, br.basis.size());
    for (std::size_t i = 0; i < 7; ++i) a[i] = m[i];
    if (rsolve(a, y)) return true;
  }
  return false;
}

}  // namespace walker
