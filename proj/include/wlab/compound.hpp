#pragma once

#include <stdexcept>

#include <Eigen/Dense>

#include "wlab/combinatorics.hpp"

namespace wlab {

// Additive compound: the derivation extension of A to Lambda^p in the
// lexicographic basis e_J. p = 0 gives the 1x1 zero matrix.
template <class Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> compound_matrix(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a, int p) {
  const int n = static_cast<int>(a.rows());
  if (a.cols() != n) throw std::invalid_argument("compound_matrix needs a square matrix");
  if (p < 0 || p > n) throw std::invalid_argument("compound degree out of range");
  const SubsetBasis& sb = subset_basis(n, p);
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(sb.size(), sb.size());
  for (int col = 0; col < sb.size(); ++col) {
    const Mask J = sb.mask(col);
    for (Mask rest = J; rest; rest &= rest - 1) {
      const int j = __builtin_ctz(rest);
      const Mask others = J & ~(Mask{1} << j);
      for (int i = 0; i < n; ++i) {
        const Scalar aij = a(i, j);
        if (aij == Scalar(0)) continue;
        if (i == j) {
          out(col, col) += aij;
        } else if (!(others & (Mask{1} << i))) {
          const int sign = (count_between(others, i, j) & 1) ? -1 : 1;
          out(sb.rank(others | (Mask{1} << i)), col) += Scalar(sign) * aij;
        }
      }
    }
  }
  return out;
}

}  // namespace wlab
