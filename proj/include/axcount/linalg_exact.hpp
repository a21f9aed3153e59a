#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "axcount/common.hpp"

namespace axcount {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using IntMatrix = std::vector<std::vector<Int>>;

inline IntMatrix int_matrix(int rows, int cols) {
  return IntMatrix(rows, std::vector<Int>(cols, 0));
}

// Row-style Hermite normal form: returns the echelon basis of the row
// span (pivots positive, entries above each pivot reduced into [0, pivot)).
inline IntMatrix hermite_normal_form(IntMatrix a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    // clear column c below row r by gcd steps
    while (true) {
      int piv = -1;
      for (int i = r; i < rows; ++i)
        if (a[i][c] != 0 && (piv < 0 || abs(a[i][c]) < abs(a[piv][c]))) piv = i;
      if (piv < 0) break;
      std::swap(a[r], a[piv]);
      bool clean = true;
      for (int i = r + 1; i < rows; ++i) {
        if (a[i][c] == 0) continue;
        Int q = a[i][c] / a[r][c];
        for (int j = 0; j < cols; ++j) a[i][j] -= q * a[r][j];
        if (a[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (a[r][c] == 0) continue;
    if (a[r][c] < 0)
      for (int j = 0; j < cols; ++j) a[r][j] = -a[r][j];
    for (int i = 0; i < r; ++i) {
      Int q = a[i][c] / a[r][c];
      if (a[i][c] - q * a[r][c] < 0) q -= 1;  // floor division
      if (q != 0)
        for (int j = 0; j < cols; ++j) a[i][j] -= q * a[r][j];
    }
    ++r;
  }
  a.resize(r);
  return a;
}

// Fraction-free (Bareiss) determinant.
inline Int determinant(IntMatrix a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) { piv = i; break; }
      if (piv < 0) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

// Exact inverse of an integer matrix with determinant +-1.
inline IntMatrix unimodular_inverse(const IntMatrix& m) {
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = Rational(m[i][j]);
    a[i][n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (a[i][c] != 0) { piv = i; break; }
    if (piv < 0) fail("unimodular_inverse: singular matrix");
    std::swap(a[c], a[piv]);
    Rational d = a[c][c];
    for (int j = 0; j < 2 * n; ++j) a[c][j] /= d;
    for (int i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (int j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  IntMatrix inv = int_matrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rational& v = a[i][n + j];
      if (denominator(v) != 1) fail("unimodular_inverse: non-integral inverse");
      inv[i][j] = numerator(v);
    }
  return inv;
}

}  // namespace axcount
