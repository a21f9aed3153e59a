#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "axcount/gf2.hpp"
#include "axcount/golay.hpp"
#include "axcount/leech.hpp"

namespace axcount {

// An automorphism candidate of the Leech lattice with entries in (1/2)Z,
// stored as twice the actual value and acting on coordinate row vectors.
struct IntegralAutomorphism {
  std::array<std::array<int32_t, 24>, 24> num{};  // entry = num/2

  static IntegralAutomorphism from_permutation(const M24Element& g) {
    IntegralAutomorphism a;
    for (int i = 0; i < 24; ++i) a.num[i][g.perm[i]] = 2;
    return a;
  }

  static IntegralAutomorphism sign_change(uint32_t support) {
    IntegralAutomorphism a;
    for (int i = 0; i < 24; ++i) a.num[i][i] = (support >> i & 1) ? -2 : 2;
    return a;
  }

  static IntegralAutomorphism negation() { return sign_change(0xFFFFFFu); }
};

// v * g for an integer lattice vector; rejects non-integral images.
template <class T>
inline std::array<int32_t, 24> apply_automorphism(const IntegralAutomorphism& g, const T* v) {
  std::array<int32_t, 24> out{};
  for (int j = 0; j < 24; ++j) {
    int64_t s = 0;
    for (int i = 0; i < 24; ++i) s += int64_t(v[i]) * g.num[i][j];
    if (s & 1) fail("apply_automorphism: image not integral");
    out[j] = static_cast<int32_t>(s / 2);
  }
  return out;
}

// True iff g maps the basis into the lattice, preserves the Gram matrix,
// and is invertible as a lattice map.
inline bool verify_automorphism(const Lattice& lat, const IntegralAutomorphism& g) {
  std::array<std::array<int32_t, 24>, 24> img;
  for (int i = 0; i < 24; ++i) {
    for (int j = 0; j < 24; ++j) {
      int64_t s = 0;
      for (int k = 0; k < 24; ++k) s += int64_t(lat.basis[i][k]) * g.num[k][j];
      if (s & 1) return false;
      img[i][j] = static_cast<int32_t>(s / 2);
    }
    if (!lat.is_member(img[i].data())) return false;
  }
  for (int i = 0; i < 24; ++i)
    for (int j = i; j < 24; ++j) {
      int64_t a = 0, b = 0;
      for (int k = 0; k < 24; ++k) {
        a += int64_t(img[i][k]) * img[j][k];
        b += int64_t(lat.basis[i][k]) * lat.basis[j][k];
      }
      if (a != b) return false;
    }
  // Gram preservation forces determinant +-1; the mod-2 check below is a
  // cheap independent invertibility witness.
  GF2Matrix c;
  c.n = 24;
  for (int i = 0; i < 24; ++i) {
    uint32_t row = 0;
    for (int j = 0; j < 24; ++j) {
      int64_t s = 0;
      for (int k = 0; k < 24; ++k) s += int64_t(img[i][k]) * lat.pinv[k][j];
      if (s & 7) return false;
      row |= static_cast<uint32_t>((s >> 3) & 1) << j;
    }
    c.row[i] = row;
  }
  return c.invertible();
}

// Induced action on Lambda/2Lambda class indices.
inline GF2Matrix reduce_mod2(const Lattice& lat, const IntegralAutomorphism& g) {
  if (!verify_automorphism(lat, g)) fail("reduce_mod2: not a lattice automorphism");
  GF2Matrix m;
  m.n = 24;
  for (int i = 0; i < 24; ++i) {
    auto img = apply_automorphism(g, lat.basis[i]);
    m.row[i] = lat.to_leech2(img.data());
  }
  return m;
}

// Generators of Co0 = Aut(Lambda): the M24 permutations, the sign change
// on the octad formed by the first two MOG columns, and the non-monomial
// tetrad map xi.  xi acts on each MOG column tetrad by the orthogonal
// involution J/2 - I, negated on the first column.
inline IntegralAutomorphism xi_generator() {
  IntegralAutomorphism a;
  for (int blk = 0; blk < 6; ++blk) {
    int sign = blk == 0 ? -1 : 1;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        a.num[4 * blk + r][4 * blk + c] = sign * (r == c ? -1 : 1);
  }
  return a;
}

inline std::vector<IntegralAutomorphism> co0_generators(const Lattice& lat,
                                                        const std::vector<M24Element>& m24) {
  std::vector<IntegralAutomorphism> gens;
  for (const auto& g : m24) gens.push_back(IntegralAutomorphism::from_permutation(g));
  if (!lat.code.is_codeword(0xFFu)) fail("co0_generators: first two columns not an octad");
  gens.push_back(IntegralAutomorphism::sign_change(0xFFu));
  gens.push_back(xi_generator());
  for (const auto& g : gens)
    if (!verify_automorphism(lat, g)) fail("co0_generators: candidate fails verification");
  return gens;
}

inline std::vector<GF2Matrix> reduced_co1_generators(const Lattice& lat,
                                                     const std::vector<IntegralAutomorphism>& gens) {
  std::vector<GF2Matrix> out;
  for (const auto& g : gens) out.push_back(reduce_mod2(lat, g));
  return out;
}

// data/co0_generators.txt: blocks of "DENOM 2" followed by 24 rows of 24
// doubled entries.
inline std::vector<std::string> co0_generator_lines(const std::vector<IntegralAutomorphism>& gens) {
  std::vector<std::string> lines;
  for (const auto& g : gens) {
    lines.push_back("DENOM 2");
    for (int i = 0; i < 24; ++i) {
      std::string s;
      for (int j = 0; j < 24; ++j) {
        if (j) s += ' ';
        s += std::to_string(g.num[i][j]);
      }
      lines.push_back(s);
    }
  }
  return lines;
}

inline std::vector<IntegralAutomorphism> load_co0_generators(
    const std::string& path = data_path("co0_generators.txt")) {
  std::vector<IntegralAutomorphism> gens;
  int row = -1;
  for (const auto& raw : read_lines(path)) {
    auto line = strip_comment(raw);
    if (line.empty()) continue;
    if (line == "DENOM 2") {
      if (row >= 0 && row != 24) fail("co0_generators: short block");
      gens.emplace_back();
      row = 0;
      continue;
    }
    if (row < 0 || row >= 24) fail("co0_generators: row outside a block");
    auto t = split_ws(line);
    if (t.size() != 24) fail("co0_generators: expected 24 entries per row");
    for (int j = 0; j < 24; ++j) gens.back().num[row][j] = std::stoi(t[j]);
    ++row;
  }
  if (row != 24) fail("co0_generators: truncated file");
  return gens;
}

}  // namespace axcount
