// Test-only oracles, independent of the library's Smith-normal-form path.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

#include "weyl/homology.hpp"

namespace testing_oracles {

using Rational = boost::multiprecision::cpp_rational;

/// Rank over the rationals by Gaussian elimination. Used to cross-check
/// betti numbers computed through integer invariant factors.
inline int rational_rank(const weyl::IntegerMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols(), 0));
  for (const auto& [rc, v] : m.entries()) a[rc.first][rc.second] = Rational(v);
  int rank = 0;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pivot = -1;
    for (int i = row; i < m.rows(); ++i)
      if (a[i][col] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[row], a[pivot]);
    for (int i = row + 1; i < m.rows(); ++i) {
      if (a[i][col] == 0) continue;
      Rational f = a[i][col] / a[row][col];
      for (int j = col; j < m.cols(); ++j) a[i][j] -= f * a[row][j];
    }
    ++row;
    ++rank;
  }
  return rank;
}

/// Betti number by rank-nullity over Q, bypassing smith_normal_form.
inline long long rational_betti(const weyl::SimplicialComplex& k, int deg, bool reduced = false) {
  const long long faces = static_cast<long long>(k.faces(deg).size());
  const int low = rational_rank(weyl::boundary_matrix(k, deg, reduced));
  const int high = deg + 1 <= k.dim() ? rational_rank(weyl::boundary_matrix(k, deg + 1)) : 0;
  return faces - low - high;
}

}  // namespace testing_oracles
