#pragma once

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "walker/expr/expr.hpp"

namespace walker {

class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Floating values for leaves, keyed by their rendered name (x, c1, a_12, f_2(t)).
using NumericPoint = std::map<std::string, double>;

inline constexpr double kDenominatorGuard = 1e-6;
inline constexpr double kArgumentGuard = 1e-6;

namespace detail {

inline double real_power(double b, const Rational& q, bool guard) {
  if (is_integer(q)) {
    long n = to_long(q);
    if (n < 0 && guard && std::fabs(b) < kDenominatorGuard)
      throw DomainError("denominator too close to zero");
    return std::pow(b, static_cast<double>(n));
  }
  double e = to_double(q);
  if (guard && b <= kArgumentGuard) {
    // odd roots of negative numbers stay real
    bool odd_root = q.get_den() % 2 != 0;
    if (!odd_root || std::fabs(b) < kArgumentGuard)
      throw DomainError("root of a non-positive value");
    double r = std::pow(-b, e);
    bool odd_num = q.get_num() % 2 != 0;
    if (q < 0 && std::fabs(b) < kDenominatorGuard) throw DomainError("denominator too close to zero");
    return odd_num ? -r : r;
  }
  return std::pow(b, e);
}

}  // namespace detail

inline double eval(const Expr& e, const NumericPoint& p) {
  switch (e.kind()) {
    case Kind::Number: return to_double(e.value());
    case Kind::Coord:
    case Kind::Param:
    case Kind::Func: {
      auto it = p.find(e.key());
      if (it == p.end()) throw DomainError("no value bound for " + e.key());
      return it->second;
    }
    case Kind::Add: {
      double s = to_double(e.value());
      for (const auto& t : e.ops()) s += eval(t, p);
      return s;
    }
    case Kind::Mul: {
      double s = to_double(e.coeff());
      for (const auto& f : e.ops()) s *= eval(f, p);
      return s;
    }
    case Kind::Pow: return detail::real_power(eval(e.base(), p), e.exponent(), true);
    case Kind::Ln: {
      double a = eval(e.arg(), p);
      if (a <= kArgumentGuard) throw DomainError("logarithm of a non-positive value");
      return std::log(a);
    }
    case Kind::Exp: return std::exp(eval(e.arg(), p));
    case Kind::Atan: return std::atan(eval(e.arg(), p));
  }
  return 0;
}

// Magnitude bound used to scale zero tests: sums add absolute values of their
// terms, so cancellation inside the expression does not shrink the scale.
inline double eval_magnitude(const Expr& e, const NumericPoint& p) {
  switch (e.kind()) {
    case Kind::Add: {
      double s = std::fabs(to_double(e.value()));
      for (const auto& t : e.ops()) s += eval_magnitude(t, p);
      return s;
    }
    case Kind::Mul: {
      double s = std::fabs(to_double(e.coeff()));
      for (const auto& f : e.ops()) s *= eval_magnitude(f, p);
      return s;
    }
    case Kind::Pow:
      if (e.exponent() > 0)
        return std::pow(eval_magnitude(e.base(), p), to_double(e.exponent()));
      return std::fabs(eval(e, p));
    default: return std::fabs(eval(e, p));
  }
}

}  // namespace walker
