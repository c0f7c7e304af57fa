#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "walker/expr/eval.hpp"
#include "walker/expr/expr.hpp"
#include "walker/expr/ratnormal.hpp"

namespace walker {

enum class Verdict { ZeroSymbolic, ZeroNumeric, NonZero };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::ZeroSymbolic: return "ZeroSymbolic";
    case Verdict::ZeroNumeric: return "ZeroNumeric";
    case Verdict::NonZero: return "NonZero";
  }
  return "?";
}

inline bool is_zero_verdict(Verdict v) { return v != Verdict::NonZero; }

struct ZeroTestOptions {
  int samples = 64;
  double tol = 1e-9;
  std::uint64_t seed = 42;
  int max_retries = 50;
  bool symbolic = true;
  double lo = 0.5;
  double hi = 2.0;
};

struct ZeroResult {
  Verdict verdict = Verdict::NonZero;
  NumericPoint witness;  // set for NonZero
  double value = 0;      // residual at the witness (or worst probe)
  double scale = 0;
  int probes = 0;

  bool zero() const { return verdict != Verdict::NonZero; }
};

// Draws a value for each leaf: reals uniform on [lo, hi], sign parameters
// from {-1, 1}, sign-or-zero parameters from {-1, 0, 1}.
inline NumericPoint sample_point(const std::vector<Expr>& leaves, std::mt19937_64& rng,
                                 double lo = 0.5, double hi = 2.0) {
  std::uniform_real_distribution<double> real(lo, hi);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> three(-1, 1);
  NumericPoint p;
  for (const auto& l : leaves) {
    if (l.is(Kind::Param) && l.domain() == ParamDomain::Sign) p[l.key()] = coin(rng) ? 1.0 : -1.0;
    else if (l.is(Kind::Param) && l.domain() == ParamDomain::SignOrZero) p[l.key()] = three(rng);
    else p[l.key()] = real(rng);
  }
  return p;
}

// Numeric probes only.
inline ZeroResult probe_zero(const Expr& e, const ZeroTestOptions& opt = {}) {
  ZeroResult r;
  r.verdict = Verdict::ZeroNumeric;
  std::vector<Expr> leaves = free_symbols(e);
  std::mt19937_64 rng(opt.seed);
  double worst = -1;
  for (int i = 0; i < opt.samples; ++i) {
    bool ok = false;
    for (int attempt = 0; attempt <= opt.max_retries && !ok; ++attempt) {
      NumericPoint p = sample_point(leaves, rng, opt.lo, opt.hi);
      double v, s;
      try {
        v = eval(e, p);
        s = eval_magnitude(e, p);
      } catch (const DomainError&) {
        continue;
      }
      ok = true;
      ++r.probes;
      double rel = std::fabs(v) / std::max(s, 1e-300);
      if (!std::isfinite(v) || std::fabs(v) > opt.tol * s) {
        r.verdict = Verdict::NonZero;
        r.witness = std::move(p);
        r.value = v;
        r.scale = s;
        return r;
      }
      if (rel > worst) {
        worst = rel;
        r.value = v;
        r.scale = s;
      }
    }
    if (!ok) throw DomainError("no admissible sample point after retries");
  }
  return r;
}

// Symbolic normal form first; numeric probes when it does not reduce to zero.
inline ZeroResult is_zero(const Expr& e, const ZeroTestOptions& opt = {}) {
  if (e.is_zero_literal()) return {Verdict::ZeroSymbolic, {}, 0, 0, 0};
  if (opt.symbolic) {
    try {
      RationalNormalizer n;
      if (n.is_zero(e)) return {Verdict::ZeroSymbolic, {}, 0, 0, 0};
    } catch (const ExprError&) {
      // fall through to probes
    }
  }
  return probe_zero(e, opt);
}

}  // namespace walker
