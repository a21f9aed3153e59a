#pragma once

#include <array>
#include <cstdint>

#include "axcount/common.hpp"

namespace axcount {

// Invertible n x n bit matrix, n <= 24, acting on row vectors:
// (v * M)_j = XOR over set bits i of v of M.row[i]_j.
struct GF2Matrix {
  int n = 0;
  std::array<uint32_t, 24> row{};

  static GF2Matrix identity(int n) {
    GF2Matrix m;
    m.n = n;
    for (int i = 0; i < n; ++i) m.row[i] = 1u << i;
    return m;
  }

  uint32_t mask() const { return n == 32 ? ~0u : (1u << n) - 1; }

  uint32_t apply(uint32_t v) const {
    uint32_t r = 0;
    while (v) {
      int i = std::countr_zero(v);
      v &= v - 1;
      r ^= row[i];
    }
    return r;
  }

  GF2Matrix operator*(const GF2Matrix& b) const {
    GF2Matrix r;
    r.n = n;
    for (int i = 0; i < n; ++i) r.row[i] = b.apply(row[i]);
    return r;
  }

  bool operator==(const GF2Matrix& b) const {
    if (n != b.n) return false;
    for (int i = 0; i < n; ++i)
      if (row[i] != b.row[i]) return false;
    return true;
  }

  bool is_identity() const { return *this == identity(n); }

  // Gauss-Jordan over F2; throws on singular input.
  GF2Matrix inverse() const {
    std::array<uint32_t, 24> a = row;
    GF2Matrix inv = identity(n);
    for (int col = 0; col < n; ++col) {
      int piv = -1;
      for (int r = col; r < n; ++r)
        if (a[r] >> col & 1) { piv = r; break; }
      if (piv < 0) fail("GF2Matrix: singular matrix");
      std::swap(a[col], a[piv]);
      std::swap(inv.row[col], inv.row[piv]);
      for (int r = 0; r < n; ++r)
        if (r != col && (a[r] >> col & 1)) {
          a[r] ^= a[col];
          inv.row[r] ^= inv.row[col];
        }
    }
    return inv;
  }

  bool invertible() const {
    std::array<uint32_t, 24> a = row;
    for (int col = 0; col < n; ++col) {
      int piv = -1;
      for (int r = col; r < n; ++r)
        if (a[r] >> col & 1) { piv = r; break; }
      if (piv < 0) return false;
      std::swap(a[col], a[piv]);
      for (int r = col + 1; r < n; ++r)
        if (a[r] >> col & 1) a[r] ^= a[col];
    }
    return true;
  }
};

// Byte-sliced application table: three 256-entry lookups per vector.
// This is what makes BFS over 2^24 points cheap.
struct GF2Action {
  uint32_t t[3][256];

  explicit GF2Action(const GF2Matrix& m) {
    for (int byte = 0; byte < 3; ++byte) {
      t[byte][0] = 0;
      for (int v = 1; v < 256; ++v) {
        int low = std::countr_zero(static_cast<unsigned>(v));
        t[byte][v] = t[byte][v & (v - 1)] ^
                     (8 * byte + low < m.n ? m.row[8 * byte + low] : 0);
      }
    }
  }

  uint32_t apply(uint32_t v) const {
    return t[0][v & 255] ^ t[1][(v >> 8) & 255] ^ t[2][(v >> 16) & 255];
  }
};

}  // namespace axcount
