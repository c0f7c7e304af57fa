#pragma once

#include <map>
#include <random>

#include "walker/expr/diff.hpp"
#include "walker/expr/eval.hpp"
#include "walker/geometry/curvature.hpp"
#include "walker/geometry/metric.hpp"

namespace walker {

struct NumericCertificate {
  bool pass = false;
  int samples = 0;
  double max_relative = 0;
  std::string worst_component;
  NumericPoint worst;
};

// Einstein components of the generic Walker metric, in a, b, c and their jets.
inline const std::vector<EinsteinComponent>& generic_einstein_components() {
  static const std::vector<EinsteinComponent> comps = einstein_residual(walker_metric());
  return comps;
}

// Evaluates the generic components with the jets of (a, b, c) taken from the
// given functions at seeded random points. Independent of whether the
// components simplify symbolically after substitution.
inline NumericCertificate certify_einstein_numeric(const Expr& a, const Expr& b, const Expr& c, int samples = 100,
                                                   std::uint64_t seed = 42, double tol = 1e-9) {
  const auto& comps = generic_einstein_components();
  std::map<std::string, Expr> jets;  // jet symbol -> expression in x, t, params
  for (const auto& comp : comps)
    for (const auto& s : free_symbols(comp.value)) {
      if (!s.is(Kind::Func) || jets.count(s.key())) continue;
      const FuncSym& f = s.func();
      Expr e = f.name == "a" ? a : f.name == "b" ? b : c;
      for (auto d : f.index) e = diff(e, static_cast<Coord>(d));
      jets.emplace(s.key(), e);
    }
  std::vector<std::string> params;
  for (const Expr& e : {a, b, c})
    for (const auto& s : free_symbols(e))
      if (s.is(Kind::Param) && std::find(params.begin(), params.end(), s.name()) == params.end())
        params.push_back(s.name());
  std::sort(params.begin(), params.end());

  NumericCertificate cert;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.5, 2.0);
  int attempts = 0;
  while (cert.samples < samples) {
    if (++attempts > samples * 50) throw DomainError("no admissible sample point for the metric functions");
    NumericPoint p;
    for (const char* v : {"x", "t", "y", "z"}) p[v] = u(rng);
    for (const auto& n : params) p[n] = u(rng);
    try {
      NumericPoint q = p;
      for (const auto& [k, e] : jets) q[k] = eval(e, p);
      for (const auto& comp : comps) {
        double v = eval(comp.value, q);
        double rel = std::abs(v) / std::max(1.0, eval_magnitude(comp.value, q));
        if (rel > cert.max_relative) {
          cert.max_relative = rel;
          cert.worst_component = component_name(comp.i, comp.j);
          cert.worst = p;
        }
      }
    } catch (const DomainError&) {
      continue;
    }
    ++cert.samples;
  }
  cert.pass = cert.max_relative < tol;
  return cert;
}

}  // namespace walker
