#pragma once

// Replays the adjoint normalizations used to bring a generic second
// generator Y into normal form next to X1. Components along X1 are ignored
// since X1 already belongs to the span.

#include <string>
#include <vector>

#include "walker/liealg/adjoint.hpp"
#include "walker/liealg/subalgebra.hpp"

namespace walker {

struct ReplayStep {
  std::size_t gen;  // 0-based
  Expr s;
};

struct ReplayTarget {
  std::size_t index;  // 0-based component of Y
  Expr expected;
};

struct ReplayCase {
  std::string id;
  std::string description;
  CoeffVector start;
  std::vector<ReplayStep> steps;
  std::vector<ReplayTarget> targets;
};

struct ReplayOutcome {
  std::string id;
  bool pass = false;
  CoeffVector result;
  std::string detail;
};

inline ReplayOutcome replay(const ReplayCase& rc, AdjointSign sign) {
  ReplayOutcome out;
  out.id = rc.id;
  CoeffVector y = rc.start;
  for (const auto& st : rc.steps) y = adjoint_apply(st.gen, st.s, y, sign);
  for (auto& c : y) c = normalize(c);
  out.result = y;
  out.pass = true;
  for (const auto& tg : rc.targets) {
    Expr diff = y[tg.index] - tg.expected;
    if (!detail::symbolically_zero(diff)) {
      out.pass = false;
      out.detail += "X" + std::to_string(tg.index + 1) + " coefficient is " + render(y[tg.index]) + ", expected " +
                    render(tg.expected) + "; ";
    }
  }
  return out;
}

// The normalization cases for a second generator next to X1. Coefficients
// are the parameters b2..b7; a sign s = +-1 with magnitude q stands for a
// coefficient whose absolute value enters a logarithm.
inline std::vector<ReplayCase> x1_normalization_cases() {
  auto b = [](int i) { return param("b" + std::to_string(i)); };
  auto vec = [](std::initializer_list<std::pair<int, Expr>> items) {
    CoeffVector v = zero_coeffs();
    for (const auto& [i, e] : items) v[i - 1] = e;
    return v;
  };
  const Expr q = param("q5");
  std::vector<ReplayCase> cases;
  cases.push_back({"d", "b2=b3=b4=0, b6!=0, X5 coefficient scaled to 1; F5 with s5=1/b6 removes X5",
                   vec({{5, 1}, {6, b(6)}, {7, b(7)}}),
                   {{4, Expr(1) / b(6)}},
                   {{4, Expr(0)}}});
  cases.push_back({"f", "b2=b4=0, b3=1, b6!=1; F5 with s5=b5/(-1+b6) removes X5",
                   vec({{3, 1}, {5, b(5)}, {6, b(6)}, {7, b(7)}}),
                   {{4, b(5) / (Expr(-1) + b(6))}},
                   {{4, Expr(0)}}});
  for (int sg : {1, -1}) {
    std::string tag = sg > 0 ? "+" : "-";
    cases.push_back({"g" + tag, "b2=b4=0, b3=b6=1, b5=" + tag + "q5; F6 with s6=-ln|b5| scales X5 to " + tag + "1",
                     vec({{3, 1}, {5, Expr(sg) * q}, {6, 1}, {7, b(7)}}),
                     {{5, -ln(q)}},
                     {{4, Expr(sg)}}});
  }
  cases.push_back({"i", "b4=b6=0, b2=1, b3!=0; F5 with s5=-b5/b3 removes X5",
                   vec({{2, 1}, {3, b(3)}, {5, b(5)}, {7, b(7)}}),
                   {{4, -b(5) / b(3)}},
                   {{4, Expr(0)}}});
  for (int sg : {1, -1}) {
    std::string tag = sg > 0 ? "+" : "-";
    cases.push_back({"j" + tag,
                     "b4=0, b2=b3=1, b6!=0, b5=" + tag + "q5; F2 with s2=-1/b6 removes X2, F6 with s6=-ln|b5| "
                     "scales X5 to " + tag + "1",
                     vec({{2, 1}, {3, 1}, {5, Expr(sg) * q}, {6, b(6)}, {7, b(7)}}),
                     {{1, Expr(-1) / b(6)}, {5, -ln(q)}},
                     {{1, Expr(0)}, {4, Expr(sg)}}});
  }
  cases.push_back({"k", "b4=0, b2=1, b6 scaled to 1, b3!=1; F2 with s2=-1/b6 and F5 with s5=-b5/(b3-1) remove X2, X5",
                   vec({{2, 1}, {3, b(3)}, {5, b(5)}, {6, 1}, {7, b(7)}}),
                   {{1, Expr(-1)}, {4, -b(5) / (b(3) - Expr(1))}},
                   {{1, Expr(0)}, {4, Expr(0)}}});
  return cases;
}

struct ReplayReport {
  AdjointSign sign = AdjointSign::Minus;
  bool switched = false;  // the first convention failed
  std::vector<ReplayOutcome> first_attempt;
  std::vector<ReplayOutcome> outcomes;
  bool pass = false;
};

// Runs all cases under the minus convention; if any fails, retries once with
// the plus convention and keeps whichever reproduces everything.
inline ReplayReport replay_all(const std::vector<ReplayCase>& cases = x1_normalization_cases()) {
  ReplayReport rep;
  auto run = [&](AdjointSign s) {
    std::vector<ReplayOutcome> v;
    for (const auto& c : cases) v.push_back(replay(c, s));
    return v;
  };
  auto ok = [](const std::vector<ReplayOutcome>& v) {
    for (const auto& o : v)
      if (!o.pass) return false;
    return true;
  };
  rep.outcomes = run(AdjointSign::Minus);
  rep.pass = ok(rep.outcomes);
  if (!rep.pass) {
    rep.first_attempt = rep.outcomes;
    rep.switched = true;
    rep.sign = AdjointSign::Plus;
    rep.outcomes = run(AdjointSign::Plus);
    rep.pass = ok(rep.outcomes);
  }
  return rep;
}

}  // namespace walker
