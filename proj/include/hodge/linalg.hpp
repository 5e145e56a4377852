#pragma once

#include <optional>
#include <vector>

#include "hodge/rational.hpp"
#include "hodge/types.hpp"

namespace hodge {

using QMatrix = std::vector<std::vector<Rational>>;
using QVector = std::vector<Rational>;

/// Gaussian elimination helpers for the small dense systems that show up in
/// Cartan-matrix inversion, coweight solves and span tests. Everything exact.

inline int q_rank(QMatrix m) {
  int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (!m[r][c].is_zero()) { pivot = r; break; }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c].is_zero()) continue;
      Rational f = m[r][c] / m[rank][c];
      for (int k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Solves A x = b for square A; nullopt if singular.
inline std::optional<QVector> q_solve(QMatrix a, QVector b) {
  int n = static_cast<int>(a.size());
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (!a[r][c].is_zero()) { pivot = r; break; }
    if (pivot < 0) return std::nullopt;
    std::swap(a[c], a[pivot]);
    std::swap(b[c], b[pivot]);
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      Rational f = a[r][c] / a[c][c];
      for (int k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  QVector x(n);
  for (int i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

inline QMatrix q_invert(const QMatrix& a) {
  int n = static_cast<int>(a.size());
  QMatrix inv(n, QVector(n, Rational(0)));
  for (int j = 0; j < n; ++j) {
    QVector e(n, Rational(0));
    e[j] = 1;
    auto col = q_solve(a, e);
    if (!col) throw error("q_invert: singular matrix");
    for (int i = 0; i < n; ++i) inv[i][j] = (*col)[i];
  }
  return inv;
}

/// Is v in the rational span of the given vectors?
inline bool q_in_span(const std::vector<std::vector<int>>& span_vecs,
                      const std::vector<int>& v) {
  if (span_vecs.empty()) {
    for (int x : v)
      if (x != 0) return false;
    return true;
  }
  QMatrix m;
  for (const auto& s : span_vecs) {
    QVector row(s.begin(), s.end());
    m.push_back(row);
  }
  int r0 = q_rank(m);
  m.emplace_back(v.begin(), v.end());
  return q_rank(m) == r0;
}

}  // namespace hodge
