#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace repcat {

// All rank and quotient computations run over exact rationals; nothing in the
// category-level code touches floating point.
using Rational = boost::multiprecision::cpp_rational;
using RatRow = std::vector<Rational>;
using RatMatrix = std::vector<RatRow>;

// In-place reduction to reduced row echelon form. Returns the pivot columns
// in increasing order; the rank is their number.
inline std::vector<int> row_reduce(RatMatrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = (int)m.size();
  const int cols = (int)m[0].size();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(m[r], m[sel]);
    const Rational lead = m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] /= lead;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline int rank_of(RatMatrix m) { return (int)row_reduce(m).size(); }

}  // namespace repcat
