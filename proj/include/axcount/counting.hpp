#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "axcount/common.hpp"
#include "axcount/linalg_exact.hpp"

namespace axcount {

struct ColumnSumError : std::runtime_error { using std::runtime_error::runtime_error; };
struct KernelDimensionError : std::runtime_error { using std::runtime_error::runtime_error; };
struct NonIntegralSizesError : std::runtime_error { using std::runtime_error::runtime_error; };
struct NonPositiveError : std::runtime_error { using std::runtime_error::runtime_error; };
struct NotRegularError : std::runtime_error { using std::runtime_error::runtime_error; };
struct IncompleteFactorizationError : std::runtime_error { using std::runtime_error::runtime_error; };

// Labeled square non-negative integer matrix with constant column sums;
// entry (i, j) is the scaled count of axes moved from orbit j to orbit i
// by the triality element.
struct TransitionMatrix {
  std::vector<std::string> labels;
  std::vector<std::vector<Int>> entries;
  Int colsum = 0;

  int dim() const { return static_cast<int>(labels.size()); }

  int index_of(const std::string& label) const {
    for (int i = 0; i < dim(); ++i)
      if (labels[i] == label) return i;
    return -1;
  }

  // Hard precondition everywhere: the tables are transcribed by hand and
  // transcription errors must fail loudly.
  void check_column_sums() const {
    for (int j = 0; j < dim(); ++j) {
      Int s = 0;
      for (int i = 0; i < dim(); ++i) {
        if (entries[i][j] < 0) throw ColumnSumError("negative entry in column " + labels[j]);
        s += entries[i][j];
      }
      if (s != colsum)
        throw ColumnSumError("column " + labels[j] + " sums to " + s.str() +
                             ", expected " + colsum.str());
    }
  }
};

// Data file format: first line the labels, then one row of integers per
// label ('.' stands for 0); the constant column sum is derived.
inline TransitionMatrix load_transition_matrix(const std::string& path) {
  TransitionMatrix m;
  std::vector<std::vector<std::string>> rows;
  for (const auto& raw : read_lines(path)) {
    auto line = strip_comment(raw);
    if (line.empty()) continue;
    rows.push_back(split_ws(line));
  }
  if (rows.empty()) fail(path + ": empty transition matrix");
  m.labels = rows[0];
  int n = m.dim();
  if (static_cast<int>(rows.size()) != n + 1) fail(path + ": need one row per label");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i + 1].size()) != n) fail(path + ": bad row length");
    std::vector<Int> row;
    for (const auto& tok : rows[i + 1]) row.push_back(tok == "." ? Int(0) : Int(tok));
    m.entries.push_back(std::move(row));
  }
  Int s = 0;
  for (int i = 0; i < n; ++i) s += m.entries[i][0];
  m.colsum = s;
  m.check_column_sums();
  return m;
}

struct OrbitSizeVector {
  std::vector<std::string> labels;
  std::vector<Int> sizes;
  Int total = 0;

  const Int& size_of(const std::string& label) const {
    for (size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == label) return sizes[i];
    fail("orbit size vector: unknown label " + label);
  }
};

namespace detail {

// Kernel of (M - colsum I) by fraction-free elimination; requires a
// one-dimensional kernel and returns a primitive integer vector.
inline std::vector<Int> integer_kernel_vector(const TransitionMatrix& m) {
  const int n = m.dim();
  IntMatrix a = int_matrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a[i][j] = m.entries[i][j] - (i == j ? m.colsum : Int(0));

  std::vector<int> pivot_col(n, -1);
  int rank = 0;
  for (int c = 0; c < n && rank < n; ++c) {
    int piv = -1;
    for (int r = rank; r < n; ++r)
      if (a[r][c] != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(a[rank], a[piv]);
    for (int r = 0; r < n; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      Int g = gcd(a[rank][c], a[r][c]);
      Int fr = a[rank][c] / g, fp = a[r][c] / g;
      for (int j = 0; j < n; ++j) a[r][j] = a[r][j] * fr - a[rank][j] * fp;
    }
    pivot_col[rank] = c;
    ++rank;
  }
  if (n - rank != 1)
    throw KernelDimensionError("kernel dimension is " + std::to_string(n - rank) +
                               ", expected 1");
  std::vector<bool> is_pivot(n, false);
  for (int r = 0; r < rank; ++r) is_pivot[pivot_col[r]] = true;
  int free_col = 0;
  while (is_pivot[free_col]) ++free_col;

  std::vector<Rational> x(n, Rational(0));
  x[free_col] = 1;
  for (int r = rank - 1; r >= 0; --r) {
    int p = pivot_col[r];
    Rational s = 0;
    for (int j = 0; j < n; ++j)
      if (j != p && a[r][j] != 0) s += Rational(a[r][j]) * x[j];
    x[p] = -s / Rational(a[r][p]);
  }
  Int lcm_den = 1;
  for (const auto& v : x) lcm_den = lcm(lcm_den, denominator(v));
  std::vector<Int> k(n);
  Int g = 0;
  for (int i = 0; i < n; ++i) {
    k[i] = numerator(x[i]) * (lcm_den / denominator(x[i]));
    g = gcd(g, k[i]);
  }
  for (auto& v : k) v /= g;
  return k;
}

}  // namespace detail

// Exact recovery of the orbit sizes as the unique eigenvector of M for
// the eigenvalue colsum, scaled so the anchor label has the given size.
inline OrbitSizeVector orbit_sizes(const TransitionMatrix& m, const std::string& anchor_label,
                                   const Int& anchor_size) {
  m.check_column_sums();
  int ai = m.index_of(anchor_label);
  if (ai < 0) fail("orbit_sizes: unknown anchor label " + anchor_label);

  auto k = detail::integer_kernel_vector(m);
  if (k[ai] == 0) throw NonPositiveError("anchor entry of the kernel vector is zero");
  if (k[ai] < 0)
    for (auto& v : k) v = -v;

  OrbitSizeVector out;
  out.labels = m.labels;
  for (int i = 0; i < m.dim(); ++i) {
    Int num = k[i] * anchor_size;
    if (num % k[ai] != 0)
      throw NonIntegralSizesError("size of " + m.labels[i] + " is not an integer");
    Int s = num / k[ai];
    if (s <= 0) throw NonPositiveError("size of " + m.labels[i] + " is not positive");
    out.sizes.push_back(s);
    out.total += s;
  }
  // eigen-equation restated entrywise (flow conservation)
  for (int i = 0; i < m.dim(); ++i) {
    Int s = 0;
    for (int j = 0; j < m.dim(); ++j) s += m.entries[i][j] * out.sizes[j];
    if (s != m.colsum * out.sizes[i]) fail("orbit_sizes: flow conservation violated");
  }
  return out;
}

// Smallest k <= dim with all entries of M^k positive (boolean powering).
inline int regularity_index(const TransitionMatrix& m) {
  m.check_column_sums();
  const int n = m.dim();
  std::vector<std::vector<bool>> b(n, std::vector<bool>(n)), p(n, std::vector<bool>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b[i][j] = p[i][j] = m.entries[i][j] > 0;
  for (int k = 1; k <= n; ++k) {
    bool all = true;
    for (int i = 0; i < n && all; ++i)
      for (int j = 0; j < n && all; ++j) all = p[i][j];
    if (all) return k;
    std::vector<std::vector<bool>> q(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l)
        if (p[i][l])
          for (int j = 0; j < n; ++j)
            if (b[l][j]) q[i][j] = true;
    p.swap(q);
  }
  throw NotRegularError("matrix is not regular within dim steps");
}

inline Int monster_order(const Int& x_plus, const Int& x_minus, const Int& co2_order) {
  if (x_plus <= 0 || x_minus <= 0 || co2_order <= 0) fail("monster_order: inputs must be positive");
  return x_plus * x_minus * (Int(1) << 24) * co2_order;
}

inline Int baby_monster_order(const Int& x_minus, const Int& co2_order) {
  if (x_minus <= 0 || co2_order <= 0) fail("baby_monster_order: inputs must be positive");
  Int n = x_minus * (Int(1) << 24) * co2_order;
  if (n % 2 != 0) throw NonIntegralSizesError("baby monster order: halving fails");
  return n / 2;
}

// Trial division by primes below 10^4; sufficient for every order that
// appears here (largest prime factor 71).
inline std::map<int64_t, int> factorize(Int n) {
  if (n < 1) fail("factorize: n must be >= 1");
  std::map<int64_t, int> f;
  std::vector<bool> composite(10000, false);
  for (int64_t p = 2; p < 10000; ++p) {
    if (composite[p]) continue;
    for (int64_t q = p * p; q < 10000; q += p) composite[q] = true;
    while (n % p == 0) {
      ++f[p];
      n /= p;
    }
  }
  if (n != 1)
    throw IncompleteFactorizationError("cofactor " + n.str() + " above the trial bound");
  return f;
}

struct Sylow11Result {
  Int numerator;    // in lowest terms
  Int denominator;
  bool integral;
};

// Dimension count of a hypothetical fixed space for a subgroup of order
// 11^3: (196884 + (11^3 - 1) * 17) / 11^3, exact.
inline Sylow11Result sylow11_check() {
  Rational v(Int(196884) + (Int(1331) - 1) * 17, Int(1331));
  return Sylow11Result{numerator(v), denominator(v), denominator(v) == 1};
}

}  // namespace axcount
