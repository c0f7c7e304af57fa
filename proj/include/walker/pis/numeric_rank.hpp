#pragma once

#include <Eigen/Dense>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "walker/expr/eval.hpp"
#include "walker/expr/zero.hpp"

namespace walker {

class DegenerateLocus : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kRankSamples = 20;
inline constexpr double kRankCutoff = 1e-8;

// Singular values below cutoff * largest count as zero.
inline int numeric_rank(const Eigen::MatrixXd& m, double cutoff = kRankCutoff) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0) return 0;
  int r = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s(i) > cutoff * s(0)) ++r;
  return r;
}

inline std::vector<Expr> leaves_of(const std::vector<Expr>& exprs) {
  std::set<Expr, ExprLess> seen;
  for (const auto& e : exprs)
    for (const auto& s : free_symbols(e)) seen.insert(s);
  return {seen.begin(), seen.end()};
}

// Rank of the matrix of expressions, evaluated at `samples` random points;
// throws DegenerateLocus when the rank differs between points.
inline int sampled_rank(const std::vector<std::vector<Expr>>& rows, std::uint64_t seed = 42,
                        int samples = kRankSamples) {
  std::vector<Expr> all;
  for (const auto& r : rows) all.insert(all.end(), r.begin(), r.end());
  std::vector<Expr> leaves = leaves_of(all);
  std::mt19937_64 rng(seed);
  int rank = -1;
  int done = 0, attempts = 0;
  while (done < samples) {
    if (++attempts > samples * 50) throw DegenerateLocus("no admissible sample points");
    NumericPoint p = sample_point(leaves, rng);
    Eigen::MatrixXd m(rows.size(), rows.empty() ? 0 : rows[0].size());
    try {
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = eval(rows[i][j], p);
    } catch (const DomainError&) {
      continue;
    }
    int r = numeric_rank(m);
    if (rank >= 0 && r != rank) throw DegenerateLocus("rank varies between sample points");
    rank = r;
    ++done;
  }
  return std::max(rank, 0);
}

}  // namespace walker
