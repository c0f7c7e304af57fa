#pragma once

#include <string>
#include <vector>

#include "walker/expr/parse.hpp"

namespace walker {

struct PDESystem {
  std::string name;
  std::vector<Expr> residuals;
};

// Einstein condition for a, b, c depending on (x, t) only.
inline const PDESystem& einstein_system_2d() {
  static const PDESystem sys{
      "einstein-2d",
      {
          parse("a_11 - b_22"),
          parse("b_12 + c_11"),
          parse("a_12 + c_22"),
          parse("a_1*c_2 + a_2*b_2 - a_2*c_1 - c_2^2 + 2*c*a_12 + b*a_22 - a*c_12"),
          parse("a_2*b_1 - c_1*c_2 + c*a_11 - a*c_11 - c*c_12 - b*c_22"),
          parse("a_1*b_1 - b_1*c_2 + b_2*c_1 - c_1^2 + a*b_11 + 2*c*b_12 - b*c_12"),
      }};
  return sys;
}

// Einstein condition for a, b, c depending on (x, t, y, z).
inline const PDESystem& einstein_system_4d() {
  static const PDESystem sys{
      "einstein-4d",
      {
          parse("a_11 - b_22"),
          parse("b_12 + c_11"),
          parse("a_12 + c_22"),
          parse("a_1*c_2 + a_2*b_2 - a_2*c_1 - c_2^2 + 2*c*a_12 + b*a_22 - 2*a_24 - a*c_12 + 2*c_23"),
          parse("a_2*b_1 - c_1*c_2 + c*a_11 - a_14 - b_23 - a*c_11 - c*c_12 + c_13 - b*c_22 + c_24"),
          parse("a_1*b_1 - b_1*c_2 + b_2*c_1 - c_1^2 + a*b_11 + 2*c*b_12 - 2*b_13 - b*c_12 + 2*c_14"),
      }};
  return sys;
}

}  // namespace walker
