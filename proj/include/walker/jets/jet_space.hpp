#pragma once

// Second-order jets of (x, t) -> (a, b, c). Jet coordinates are the function
// symbols a, a_1, a_12, ... with 1 = x and 2 = t.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "walker/expr/eval.hpp"
#include "walker/expr/expr.hpp"

namespace walker {

inline const std::array<const char*, 3>& dependent_names() {
  static const std::array<const char*, 3> n{"a", "b", "c"};
  return n;
}

// Multi-indices through order 2, sorted: (), (1), (2), (1,1), (1,2), (2,2).
inline const std::vector<std::vector<std::uint8_t>>& jet_indices() {
  static const std::vector<std::vector<std::uint8_t>> idx{{}, {1}, {2}, {1, 1}, {1, 2}, {2, 2}};
  return idx;
}

inline Expr jet_symbol(std::size_t alpha, const std::vector<std::uint8_t>& index) {
  return dependent(dependent_names()[alpha], index);
}

struct JetPoint {
  double x = 0, t = 0;
  // u[alpha][k] with k indexing jet_indices()
  std::array<std::array<double, 6>, 3> u{};

  double& at(std::size_t alpha, const std::vector<std::uint8_t>& index) {
    const auto& idx = jet_indices();
    for (std::size_t k = 0; k < idx.size(); ++k)
      if (idx[k] == index) return u[alpha][k];
    throw ExprError("jet index beyond order 2");
  }

  NumericPoint numeric() const {
    NumericPoint p{{"x", x}, {"t", t}};
    const auto& idx = jet_indices();
    for (std::size_t alpha = 0; alpha < 3; ++alpha)
      for (std::size_t k = 0; k < idx.size(); ++k) p[jet_symbol(alpha, idx[k]).key()] = u[alpha][k];
    return p;
  }
};

}  // namespace walker
