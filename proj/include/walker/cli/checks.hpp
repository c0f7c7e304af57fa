#pragma once

// Checks shared by the walker-kit driver and the acceptance binary.

#include <string>
#include <vector>

#include "walker/catalog/builtin.hpp"
#include "walker/cli/report.hpp"
#include "walker/expr/render.hpp"
#include "walker/geometry/curvature.hpp"
#include "walker/geometry/metric.hpp"
#include "walker/geometry/probe.hpp"
#include "walker/jets/symmetry.hpp"
#include "walker/pis/defect.hpp"
#include "walker/pis/invariants.hpp"

namespace walker {

enum class CheckMode { Symbolic, Numeric };

struct CheckOptions {
  CheckMode mode = CheckMode::Symbolic;
  int samples = 100;
  double tol = 1e-9;
  std::uint64_t seed = 42;

  ZeroTestOptions zero() const {
    ZeroTestOptions o = check_options(samples, tol, seed);
    o.symbolic = mode == CheckMode::Symbolic;
    return o;
  }
};

namespace detail {

inline CheckRecord verdict(std::string id, bool pass, std::string detail = {}) {
  CheckRecord r;
  r.id = std::move(id);
  r.pass = pass;
  r.verdict = pass ? "PASS" : "FAIL";
  r.detail = std::move(detail);
  return r;
}

inline ojson zero_witness(std::size_t index, const ZeroResult& z, const char* label = "equation") {
  return {{label, index + 1}, {"point", point_json(z.witness)}, {"value", z.value}};
}

// Summarizes per-equation verdicts: "6/6 zero (symbolic 4, numeric 2)".
inline std::string tally(const std::vector<EquationVerdict>& v) {
  int sym = 0, num = 0;
  for (const auto& e : v) {
    sym += e.result.verdict == Verdict::ZeroSymbolic;
    num += e.result.verdict == Verdict::ZeroNumeric;
  }
  return std::to_string(sym + num) + "/" + std::to_string(v.size()) + " zero (symbolic " + std::to_string(sym) +
         ", numeric " + std::to_string(num) + ")";
}

inline ojson verdict_list(const std::vector<EquationVerdict>& v) {
  ojson a = ojson::array();
  for (const auto& e : v) a.push_back(verdict_name(e.result.verdict));
  return a;
}

inline CheckRecord equations_record(std::string id, const std::vector<EquationVerdict>& v) {
  CheckRecord r = verdict(std::move(id), all_zero(v), tally(v));
  r.data = {{"verdicts", verdict_list(v)}};
  for (const auto& e : v)
    if (!e.result.zero()) {
      r.witness = zero_witness(e.equation, e.result);
      break;
    }
  return r;
}

inline std::string join(const std::vector<std::string>& xs, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

}  // namespace detail

inline CheckRecord closure_record(const std::string& id, const Subalgebra& h) {
  ClosureResult c = subalgebra_closed(h);
  std::vector<std::string> parts;
  ojson branches = ojson::array();
  for (const auto& b : c.branches) {
    std::string cond = b.condition.empty() ? "generic" : b.condition;
    parts.push_back(cond + (b.closed ? ": [g1,g2] = " + render(b.lambda) + " g1 + " + render(b.mu) + " g2"
                                     : ": " + b.detail));
    branches.push_back({{"condition", cond}, {"closed", b.closed}, {"lambda", render(b.lambda)},
                        {"mu", render(b.mu)}, {"detail", b.detail}});
  }
  CheckRecord r = detail::verdict(id, c.closed, detail::join(parts, "; "));
  r.data = {{"branches", branches}};
  return r;
}

inline std::vector<CheckRecord> verify_solution(const CatalogEntry& e, std::size_t k, const CheckOptions& opt) {
  std::vector<CheckRecord> out;
  std::string base = e.id + ".solution" + std::to_string(k + 1);
  SolutionTriple s = entry_solution(e.solutions[k]);
  out.push_back(timed([&] {
    return detail::equations_record(base + ".system", system_residuals(s, einstein_system_2d(), opt.zero()));
  }));
  if (!e.generators.empty() && e.delta) {
    out.push_back(timed([&] {
      try {
        int d = defect(entry_subalgebra(e), s, opt.seed);
        CheckRecord r = detail::verdict(base + ".defect", d <= *e.delta,
                                        "defect " + std::to_string(d) + ", declared " + std::to_string(*e.delta));
        r.data = {{"defect", d}, {"declared", *e.delta}};
        return r;
      } catch (const std::exception& ex) {
        return detail::verdict(base + ".defect", false, ex.what());
      }
    }));
  }
  return out;
}

inline std::vector<CheckRecord> verify_entry(const CatalogEntry& e, const CheckOptions& opt = {}) {
  std::vector<CheckRecord> out;
  if (e.kind == "optimal-1d") {
    out.push_back(timed([&] {
      CoeffVector v = parse_generator(e.generators.at(0));
      return detail::verdict(e.id + ".generator", true, render_generator(v));
    }));
  }
  if (e.generators.size() == 2) out.push_back(timed([&] { return closure_record(e.id + ".closure", entry_subalgebra(e)); }));
  if (!e.invariants.empty()) {
    out.push_back(timed([&] {
      InvariantReport rep = invariant_check(entry_subalgebra(e), entry_invariants(e), opt.seed);
      CheckRecord r = detail::verdict(e.id + ".invariants", rep.ok(),
                                      std::string(rep.annihilated ? "annihilated" : "not annihilated") +
                                          ", Jacobian rank " + std::to_string(rep.jacobian_rank) + " of " +
                                          std::to_string(e.invariants.size()));
      if (!rep.failures.empty()) {
        const auto& f = rep.failures.front();
        r.witness = {{"generator", e.generators[f.generator]},
                     {"invariant", e.invariants[f.member]},
                     {"point", point_json(f.witness)},
                     {"value", f.value}};
      }
      return r;
    }));
    out.push_back(timed([&] {
      RankResult rr = invariant_rank(entry_invariants(e), opt.seed);
      bool ok = !e.delta || rr.defect == *e.delta;
      CheckRecord r = detail::verdict(e.id + ".rank", ok,
                                      "rank " + std::to_string(rr.rank) + ", delta " + std::to_string(rr.defect));
      r.data = {{"rank", rr.rank}, {"delta", rr.defect}};
      return r;
    }));
  }
  if (e.ansatz && e.reduced) {
    out.push_back(timed([&] {
      ReducedSystem red = ansatz_substitute(entry_ansatz(*e.ansatz), einstein_system_2d());
      std::vector<EquationVerdict> v;
      auto stored = parse_all(e.reduced->residuals);
      for (std::size_t k = 0; k < red.residuals.size() && k < stored.size(); ++k)
        v.push_back({k, is_zero(red.residuals[k] - stored[k], opt.zero())});
      CheckRecord r = detail::equations_record(e.id + ".substitution", v);
      if (stored.size() != red.residuals.size()) {
        r.pass = false;
        r.verdict = "FAIL";
        r.detail += "; stored " + std::to_string(stored.size()) + " residuals, substitution gives " +
                    std::to_string(red.residuals.size());
      }
      return r;
    }));
    std::vector<Expr> eqs = parse_all(e.reduced->residuals);
    for (const auto& c : parse_all(e.reduced->consistency)) eqs.push_back(c);
    std::vector<Expr> ineqs = parse_all(e.reduced->inequations);
    for (std::size_t k = 0; k < e.reduced->families.size(); ++k) {
      out.push_back(timed([&] {
        FamilyReport fr = verify_reduced_solutions(eqs, ineqs, entry_family(e.reduced->families[k]), opt.zero());
        CheckRecord r = detail::verdict(e.id + ".family" + std::to_string(k + 1), fr.pass(),
                                        detail::tally(fr.equations));
        r.data = {{"equations", detail::verdict_list(fr.equations)},
                  {"inequations", detail::verdict_list(fr.inequations)}};
        for (const auto& q : fr.equations)
          if (!q.result.zero()) {
            r.witness = detail::zero_witness(q.equation, q.result);
            break;
          }
        for (const auto& q : fr.inequations)
          if (q.result.zero() && r.witness.is_null()) {
            r.witness = {{"inequation", q.equation + 1}, {"vanishes", e.reduced->inequations[q.equation]}};
            r.detail += "; inequation " + std::to_string(q.equation + 1) + " vanishes identically";
          }
        return r;
      }));
    }
  }
  for (std::size_t k = 0; k < e.solutions.size(); ++k)
    for (auto& r : verify_solution(e, k, opt)) out.push_back(std::move(r));
  return out;
}

// Ricci and Einstein verdicts for the Walker metric built from (a, b, c).
inline std::vector<CheckRecord> einstein_checks(const std::string& id, const Expr& a, const Expr& b, const Expr& c,
                                                const CheckOptions& opt) {
  std::vector<CheckRecord> out;
  Metric4 g = build_metric(a, b, c);
  out.push_back(timed([&] {
    CurvatureBundle cb = ricci(g);
    std::vector<EquationVerdict> v;
    std::size_t n = 0;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i; j < 4; ++j) v.push_back({n++, is_zero(cb.ricci[i][j], opt.zero())});
    CheckRecord r = detail::equations_record(id + ".ricci-flat", v);
    r.verdict = all_zero(v) ? "Ricci = 0" : "Ricci != 0";
    r.pass = true;  // informational
    return r;
  }));
  out.push_back(timed([&] {
    auto comps = einstein_residual(g);
    std::vector<EquationVerdict> v;
    for (std::size_t k = 0; k < comps.size(); ++k) v.push_back({k, is_zero(comps[k].value, opt.zero())});
    CheckRecord r = detail::equations_record(id + ".einstein", v);
    r.verdict = all_zero(v) ? "Einstein: yes" : "Einstein: no";
    r.pass = all_zero(v);
    for (const auto& q : v)
      if (!q.result.zero()) {
        r.witness = {{"component", component_name(comps[q.equation].i, comps[q.equation].j)},
                     {"point", point_json(q.result.witness)},
                     {"value", q.result.value}};
        break;
      }
    return r;
  }));
  return out;
}

inline VectorField negative_control_field() {
  VectorField v;
  for (auto& c : v.comp) c = Expr(0);
  v.comp[0] = coord(Coord::X);
  return v;
}

inline CheckRecord symmetry_record(const std::string& id, const VectorField& v, int samples, std::uint64_t seed,
                                   bool expect_symmetry) {
  return timed([&] {
    SymmetryReport rep = symmetry_check(v, einstein_system_2d(), samples, seed);
    bool ok = expect_symmetry ? rep.pass : rep.max_relative > 1e-3;
    CheckRecord r = detail::verdict(id, ok, "max relative residual " + format_double(rep.max_relative) + " over " +
                                                std::to_string(samples) + " on-shell jets");
    ojson rows = ojson::array();
    for (const auto& row : rep.rows) rows.push_back(row.max_relative);
    r.data = {{"max_relative", rep.max_relative}, {"per_equation", rows}};
    if (!expect_symmetry || !rep.pass) {
      for (const auto& row : rep.rows)
        if (row.max_relative > 1e-8) {
          r.witness = {{"equation", row.equation + 1}, {"point", point_json(row.worst)}, {"value", row.worst_value}};
          break;
        }
    }
    return r;
  });
}

// Report section: for algebras containing the pencil alpha X1 + beta X7, the
// listed invariant solutions of that pencil (not a verdict).
inline CheckRecord reducibility_record(const CatalogEntry& e, std::size_t k, const CheckOptions& opt) {
  return timed([&] {
    std::string id = e.id + ".solution" + std::to_string(k + 1) + ".reducibility";
    Subalgebra h = entry_subalgebra(e);
    ReducibilityReport rep = reducibility_scan(h, entry_solution(e.solutions[k]), opt.zero());
    CheckRecord r;
    r.id = id;
    r.pass = true;
    std::vector<std::string> dirs;
    ojson arr = ojson::array();
    for (const auto& d : rep.directions) {
      dirs.push_back(d.generator);
      arr.push_back({{"alpha", render(d.alpha)}, {"beta", render(d.beta)}, {"generator", d.generator}});
    }
    if (rep.whole_pencil) {
      r.verdict = "invariant under the whole algebra";
    } else if (rep.directions.empty()) {
      r.verdict = "non-reducible";
    } else {
      r.verdict = "reducible";
      r.detail = "invariant under " + detail::join(dirs);
    }
    r.data = {{"whole_pencil", rep.whole_pencil}, {"directions", arr}};
    if (h.gens.size() == 2 && e.generators[0] == "X1" && e.generators[1] == "X7") {
      std::vector<std::string> listed;
      for (const auto& c : builtin())
        if (c.kind == "invariant-solution") listed.push_back(c.id);
      r.data["pencil_invariant_solutions"] = listed;
      if (rep.reducible())
        r.detail += (r.detail.empty() ? "" : "; ") +
                    std::string("flag: invariant under a one-parameter subgroup of the algebra, so this solution is reducible");
    }
    return r;
  });
}

}  // namespace walker
