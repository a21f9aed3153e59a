#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "axcount/common.hpp"
#include "axcount/gf2.hpp"

namespace axcount {

// F2 row reduction helpers on bit-packed rows (up to 32 columns).

inline void f2_rref(std::vector<uint32_t>& rows, int ncols, std::vector<int>* pivots = nullptr) {
  int r = 0;
  for (int c = 0; c < ncols && r < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (rows[i] >> c & 1) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i)
      if (i != r && (rows[i] >> c & 1)) rows[i] ^= rows[r];
    if (pivots) pivots->push_back(c);
    ++r;
  }
  rows.resize(r);
}

inline std::vector<uint32_t> f2_nullspace(std::vector<uint32_t> constraints, int ncols) {
  std::vector<int> pivots;
  f2_rref(constraints, ncols, &pivots);
  std::vector<bool> is_pivot(ncols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<uint32_t> basis;
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    uint32_t v = 1u << f;
    for (size_t r = 0; r < pivots.size(); ++r)
      if (constraints[r] >> f & 1) v |= 1u << pivots[r];
    basis.push_back(v);
  }
  return basis;
}

namespace gf4 {
// Elements 0,1,2,3 = 0, 1, w, w+1 with w^2 = w+1.  Addition is XOR.
inline int mul(int a, int b) {
  static constexpr int t[4][4] = {
      {0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
  return t[a][b];
}
}  // namespace gf4

// The hexacode: words (a, b, c, f(1), f(w), f(w+1)) for f(x) = ax^2+bx+c.
inline std::vector<std::array<int, 6>> hexacode_words() {
  std::vector<std::array<int, 6>> words;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        std::array<int, 6> w{};
        w[0] = a; w[1] = b; w[2] = c;
        int pts[3] = {1, 2, 3};
        for (int k = 0; k < 3; ++k) {
          int x = pts[k];
          w[3 + k] = gf4::mul(a, gf4::mul(x, x)) ^ gf4::mul(b, x) ^ c;
        }
        words.push_back(w);
      }
  return words;
}

// The binary Golay code in MOG coordinates.  Points 0..23 fill a 4x6
// array column by column (point = 4*column + row); rows carry the GF(4)
// labels 0, 1, w, w+1 top to bottom.  A 24-bit word is a codeword iff
// every column parity equals the parity of the top row and the column
// scores form a hexacode word.
struct GolayCode {
  std::array<uint32_t, 12> basis{};      // RREF generator rows
  std::vector<uint32_t> codewords;       // all 4096, index-ordered
  std::vector<uint32_t> octads;          // the 759 weight-8 codewords

  // cocode lookup, indexed by 12-bit syndrome
  std::array<uint8_t, 4096> coset_weight{};
  std::array<uint32_t, 4096> coset_rep{};

  // Self-dual, so the generator matrix doubles as parity check.
  uint32_t syndrome_bits(uint32_t w) const {
    uint32_t s = 0;
    for (int k = 0; k < 12; ++k) s |= static_cast<uint32_t>(parity(w & basis[k])) << k;
    return s;
  }
  bool is_codeword(uint32_t w) const { return syndrome_bits(w) == 0; }
};

struct CocodeElement {
  uint32_t rep;       // minimal-weight representative
  int weight;         // 0..4
  uint32_t syndrome;  // 12-bit coset label
};

inline CocodeElement syndrome(const GolayCode& code, uint32_t word) {
  uint32_t s = code.syndrome_bits(word & 0xFFFFFFu);
  return CocodeElement{code.coset_rep[s], code.coset_weight[s], s};
}

namespace detail {

inline void fill_coset_table(GolayCode& code) {
  code.coset_weight.fill(255);
  auto put = [&](uint32_t w) {
    uint32_t s = code.syndrome_bits(w);
    if (code.coset_weight[s] == 255) {
      code.coset_weight[s] = static_cast<uint8_t>(popcount24(w));
      code.coset_rep[s] = w;
    }
  };
  put(0);
  for (int i = 0; i < 24; ++i) put(1u << i);
  for (int i = 0; i < 24; ++i)
    for (int j = i + 1; j < 24; ++j) put(1u << i | 1u << j);
  for (int i = 0; i < 24; ++i)
    for (int j = i + 1; j < 24; ++j)
      for (int k = j + 1; k < 24; ++k) put(1u << i | 1u << j | 1u << k);
  for (int i = 0; i < 24; ++i)
    for (int j = i + 1; j < 24; ++j)
      for (int k = j + 1; k < 24; ++k)
        for (int l = k + 1; l < 24; ++l) put(1u << i | 1u << j | 1u << k | 1u << l);
  for (int s = 0; s < 4096; ++s)
    if (code.coset_weight[s] == 255) fail("golay: cocode weight above 4");
}

}  // namespace detail

inline GolayCode build_golay() {
  // Column scores as an F2-linear map v -> 12 bits (2 bits per column).
  auto score_bit = [](int col, int bit) {
    // bit 0 of score(col): rows labeled 1 and w+1; bit 1: rows w and w+1
    uint32_t m = 0;
    if (bit == 0) m = (1u << (4 * col + 1)) | (1u << (4 * col + 3));
    else          m = (1u << (4 * col + 2)) | (1u << (4 * col + 3));
    return m;
  };

  // Hexacode as an F2 subspace of F2^12 and its orthogonal complement.
  std::vector<uint32_t> hexa_f2;
  for (const auto& w : hexacode_words()) {
    uint32_t bits = 0;
    for (int j = 0; j < 6; ++j) bits |= static_cast<uint32_t>(w[j]) << (2 * j);
    hexa_f2.push_back(bits);
  }
  f2_rref(hexa_f2, 12);
  if (hexa_f2.size() != 6) fail("golay: hexacode dimension != 6");
  std::vector<uint32_t> ortho;  // u with u.h = 0 for all h in the hexacode
  for (uint32_t u = 0; u < 4096; ++u) {
    bool ok = true;
    for (uint32_t h : hexa_f2)
      if (parity(u & h)) { ok = false; break; }
    if (ok) ortho.push_back(u);
  }
  f2_rref(ortho, 12);
  if (ortho.size() != 6) fail("golay: hexacode complement dimension != 6");

  std::vector<uint32_t> constraints;
  uint32_t row0 = 0;
  for (int j = 0; j < 6; ++j) row0 |= 1u << (4 * j);
  for (int j = 0; j < 6; ++j) {
    uint32_t colmask = 0xFu << (4 * j);
    constraints.push_back(colmask ^ row0);
  }
  for (uint32_t u : ortho) {
    uint32_t cons = 0;
    for (int j = 0; j < 6; ++j)
      for (int b = 0; b < 2; ++b)
        if (u >> (2 * j + b) & 1) cons ^= score_bit(j, b);
    constraints.push_back(cons);
  }

  auto basis = f2_nullspace(constraints, 24);
  if (basis.size() != 12) fail("golay: code dimension != 12");
  f2_rref(basis, 24);

  GolayCode code;
  for (int i = 0; i < 12; ++i) code.basis[i] = basis[i];

  code.codewords.resize(4096);
  code.codewords[0] = 0;
  for (uint32_t i = 1; i < 4096; ++i)
    code.codewords[i] = code.codewords[i & (i - 1)] ^ code.basis[std::countr_zero(i)];
  for (uint32_t c : code.codewords)
    if (popcount24(c) == 8) code.octads.push_back(c);
  if (code.octads.size() != 759) fail("golay: octad count != 759");

  detail::fill_coset_table(code);
  return code;
}

// A permutation of the 24 points, required to preserve the code.
struct M24Element {
  std::array<uint8_t, 24> perm{};

  static M24Element identity() {
    M24Element e;
    for (int i = 0; i < 24; ++i) e.perm[i] = static_cast<uint8_t>(i);
    return e;
  }

  uint32_t apply(uint32_t word) const {
    uint32_t r = 0;
    while (word) {
      int i = std::countr_zero(word);
      word &= word - 1;
      r |= 1u << perm[i];
    }
    return r;
  }

  M24Element operator*(const M24Element& b) const {  // apply a, then b
    M24Element r;
    for (int i = 0; i < 24; ++i) r.perm[i] = b.perm[perm[i]];
    return r;
  }

  M24Element inverse() const {
    M24Element r;
    for (int i = 0; i < 24; ++i) r.perm[perm[i]] = static_cast<uint8_t>(i);
    return r;
  }

  GF2Matrix matrix() const {  // permutation matrix on F2^24 row vectors
    GF2Matrix m;
    m.n = 24;
    for (int i = 0; i < 24; ++i) m.row[i] = 1u << perm[i];
    return m;
  }
};

inline bool preserves_code(const GolayCode& code, const M24Element& g) {
  for (int k = 0; k < 12; ++k)
    if (!code.is_codeword(g.apply(code.basis[k]))) return false;
  return true;
}

// Loads the generating permutations of M24 shipped with the data files
// and validates each one against the code.
inline std::vector<M24Element> m24_generators(const GolayCode& code,
                                              const std::string& path = data_path("m24_generators.txt")) {
  std::vector<M24Element> gens;
  for (const auto& raw : read_lines(path)) {
    std::string line = strip_comment(raw);
    if (line.empty()) continue;
    auto toks = split_ws(line);
    if (toks.size() != 24) fail("m24_generators: expected 24 images per line");
    M24Element g;
    uint32_t seen = 0;
    for (int i = 0; i < 24; ++i) {
      int v = std::stoi(toks[i]);
      if (v < 0 || v >= 24 || (seen >> v & 1)) fail("m24_generators: not a permutation");
      seen |= 1u << v;
      g.perm[i] = static_cast<uint8_t>(v);
    }
    if (!preserves_code(code, g)) fail("m24_generators: generator does not preserve the code");
    gens.push_back(g);
  }
  if (gens.size() < 2) fail("m24_generators: need at least two generators");
  return gens;
}

// data/golay_basis.txt: one generator row per line as a 24-character
// 0/1 string, character j = point j.
inline std::vector<std::string> golay_basis_lines(const GolayCode& code) {
  std::vector<std::string> lines;
  for (int k = 0; k < 12; ++k) {
    std::string s(24, '0');
    for (int j = 0; j < 24; ++j)
      if (code.basis[k] >> j & 1) s[j] = '1';
    lines.push_back(s);
  }
  return lines;
}

// Fixed basis of the even cocode: the first eleven duads {0,i} whose
// syndromes are linearly independent.
struct EvenCocodeBasis {
  std::array<uint32_t, 11> words{};      // duad words
  std::array<uint32_t, 11> syndromes{};  // their 12-bit syndromes
  // echelonized syndromes with bookkeeping for coordinate extraction
  std::array<uint32_t, 11> ech{};
  std::array<uint32_t, 11> combo{};
  std::array<int, 11> lead{};

  explicit EvenCocodeBasis(const GolayCode& code) {
    int k = 0;
    for (int i = 1; i < 24 && k < 11; ++i) {
      uint32_t w = 1u | (1u << i);
      uint32_t s = code.syndrome_bits(w);
      uint32_t e = s, cb = 1u << k;
      for (int j = 0; j < k; ++j)
        if (e >> lead[j] & 1) { e ^= ech[j]; cb ^= combo[j]; }
      if (e == 0) continue;
      words[k] = w;
      syndromes[k] = s;
      ech[k] = e;
      combo[k] = cb;
      lead[k] = std::countr_zero(e);
      ++k;
    }
    if (k != 11) fail("even cocode basis: rank != 11");
    // re-echelonize fully so extraction is a single sweep
    for (int a = 0; a < 11; ++a)
      for (int b = 0; b < 11; ++b)
        if (a != b && (ech[b] >> lead[a] & 1)) { ech[b] ^= ech[a]; combo[b] ^= combo[a]; }
  }

  // Coordinates of an even coset (given by syndrome) in this basis.
  uint32_t coordinates(uint32_t s) const {
    uint32_t coords = 0;
    for (int j = 0; j < 11; ++j)
      if (s >> lead[j] & 1) { s ^= ech[j]; coords ^= combo[j]; }
    if (s != 0) fail("even cocode: syndrome outside the even subspace");
    return coords;
  }
};

// Induced action of a code-preserving permutation on the even cocode.
inline GF2Matrix cocode_action(const GolayCode& code, const EvenCocodeBasis& basis,
                               const M24Element& g) {
  if (!preserves_code(code, g)) fail("cocode_action: g does not preserve the code");
  GF2Matrix m;
  m.n = 11;
  for (int k = 0; k < 11; ++k) {
    uint32_t img = g.apply(basis.words[k]);
    m.row[k] = basis.coordinates(code.syndrome_bits(img));
  }
  if (!m.invertible()) fail("cocode_action: action not invertible");
  return m;
}

}  // namespace axcount
