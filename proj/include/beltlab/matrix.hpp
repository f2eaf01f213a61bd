#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "beltlab/rational.hpp"

namespace beltlab {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;

inline Mat identity_matrix(int n) {
  Mat m(n, Vec(n, Rat(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
  const int n = static_cast<int>(a.size());
  const int k = n ? static_cast<int>(a[0].size()) : 0;
  const int m = k ? static_cast<int>(b[0].size()) : 0;
  Mat c(n, Vec(m, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (int j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
    }
  return c;
}

inline Vec mat_vec(const Mat& a, const Vec& x) {
  Vec y(a.size(), Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j)
      if (a[i][j] != 0) y[i] += a[i][j] * x[j];
  return y;
}

// Determinant by fraction-free (Bareiss) elimination. The division by the
// previous pivot is exact at every step; pivoting picks the first nonzero
// entry, which is all exact arithmetic needs.
inline Rat det_bareiss(Mat m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return Rat(1);
  int sign = 1;
  Rat prev(1);
  for (int k = 0; k + 1 < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (m[i][k] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    const Rat pivot = m[k][k];
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = pivot;
  }
  Rat d = m[n - 1][n - 1];
  if (sign < 0) d = -d;
  return d;
}

// One exact solution of a x = b when the system is consistent; free variables
// are set to zero. Returns nullopt on an inconsistent system.
inline std::optional<Vec> solve_any(Mat a, Vec b) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[r]);
    std::swap(b[piv], b[r]);
    const Rat inv = 1 / a[r][c];
    for (int j = c; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rat f = a[i][c];
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (int i = r; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;
  Vec x(cols, Rat(0));
  for (int i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return x;
}

inline std::optional<Mat> invert(Mat a) {
  const int n = static_cast<int>(a.size());
  Mat inv = identity_matrix(n);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return std::nullopt;
    std::swap(a[piv], a[c]);
    std::swap(inv[piv], inv[c]);
    const Rat f = 1 / a[c][c];
    for (int j = 0; j < n; ++j) {
      a[c][j] *= f;
      inv[c][j] *= f;
    }
    for (int i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const Rat g = a[i][c];
      for (int j = 0; j < n; ++j) {
        a[i][j] -= g * a[c][j];
        inv[i][j] -= g * inv[c][j];
      }
    }
  }
  return inv;
}

}  // namespace beltlab
