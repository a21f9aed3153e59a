#pragma once

// One-time derivation machinery behind the shipped data files: the
// extended quadratic-residue copy of the Golay code with its PSL(2,23)
// symmetries, a search for a code automorphism outside PSL(2,23), and a
// backtracking code equivalence onto the MOG copy.  Used by the data
// generator tool and by the regeneration tests; the library proper only
// loads and validates the results.

#include <algorithm>
#include <array>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "axcount/common.hpp"
#include "axcount/golay.hpp"

namespace axcount::bootstrap {

inline constexpr int P = 23;  // points 0..22 = GF(23), point 23 = infinity

struct QrGolay {
  std::vector<uint32_t> basis;  // 12 rows
  std::unordered_set<uint32_t> member;
  std::vector<uint32_t> octads;
};

inline std::vector<int> quadratic_residues() {
  std::vector<int> q;
  std::array<bool, P> is{};
  for (int x = 1; x < P; ++x) is[x * x % P] = true;
  for (int x = 1; x < P; ++x)
    if (is[x]) q.push_back(x);
  return q;
}

namespace detail {

inline bool golay_weight_enum(const std::vector<uint32_t>& codewords) {
  std::array<int, 25> we{};
  for (uint32_t c : codewords) ++we[popcount24(c)];
  return we[0] == 1 && we[8] == 759 && we[12] == 2576 && we[16] == 759 && we[24] == 1;
}

inline std::vector<uint32_t> span_codewords(const std::vector<uint32_t>& basis) {
  std::vector<uint32_t> words(size_t{1} << basis.size(), 0);
  for (uint32_t i = 1; i < words.size(); ++i)
    words[i] = words[i & (i - 1)] ^ basis[std::countr_zero(i)];
  return words;
}

}  // namespace detail

// Extended quadratic-residue code of length 24: span the cyclic shifts
// of a residue-set indicator, adjoin the all-ones word if needed, and
// append an overall parity bit at infinity.  The candidate passing the
// Golay weight enumerator is the code.
inline QrGolay build_qr_golay() {
  auto q = quadratic_residues();
  uint32_t chi_q = 0, chi_n = 0;
  for (int x : q) chi_q |= 1u << x;
  for (int x = 1; x < P; ++x)
    if (!(chi_q >> x & 1)) chi_n |= 1u << x;

  auto shift = [](uint32_t w) {
    uint32_t r = 0;
    for (int i = 0; i < P; ++i)
      if (w >> i & 1) r |= 1u << ((i + 1) % P);
    return r;
  };

  for (uint32_t base : {chi_q, chi_q | 1u, chi_n, chi_n | 1u}) {
    std::vector<uint32_t> rows;
    uint32_t w = base;
    for (int i = 0; i < P; ++i) {
      rows.push_back(w);
      w = shift(w);
    }
    f2_rref(rows, P);
    if (rows.size() == 11) {
      rows.push_back((1u << P) - 1);
      f2_rref(rows, P);
    }
    if (rows.size() != 12) continue;
    for (uint32_t& r : rows)
      if (popcount24(r) & 1) r |= 1u << P;  // parity bit at infinity
    auto words = detail::span_codewords(rows);
    if (!detail::golay_weight_enum(words)) continue;
    QrGolay code;
    code.basis = rows;
    for (uint32_t c : words) {
      code.member.insert(c);
      if (popcount24(c) == 8) code.octads.push_back(c);
    }
    return code;
  }
  fail("qr golay: no candidate span matches the Golay weight enumerator");
}

using Perm = std::array<uint8_t, 24>;

inline uint32_t perm_apply(const Perm& p, uint32_t w) {
  uint32_t r = 0;
  while (w) {
    int i = std::countr_zero(w);
    w &= w - 1;
    r |= 1u << p[i];
  }
  return r;
}

inline bool perm_preserves(const QrGolay& code, const Perm& p) {
  for (uint32_t b : code.basis)
    if (!code.member.count(perm_apply(p, b))) return false;
  return true;
}

// All 6072 elements of PSL(2,23) as permutations of {0..22, infinity}.
inline std::vector<Perm> psl2_23() {
  std::vector<Perm> out;
  std::unordered_set<uint64_t> seen;
  auto inv_mod = [](int x) {
    int r = 1;
    for (int e = P - 2; e;) {
      if (e & 1) r = r * x % P;
      x = x * x % P;
      e >>= 1;
    }
    return r;
  };
  for (int a = 0; a < P; ++a)
    for (int b = 0; b < P; ++b)
      for (int c = 0; c < P; ++c) {
        // solve a*d - b*c = 1 for d when possible
        if (a != 0) {
          int d = static_cast<int>((1 + static_cast<long long>(b) * c) % P * inv_mod(a) % P);
          Perm p{};
          for (int x = 0; x <= P; ++x) {
            int y;
            if (x == P) {
              y = c == 0 ? P : a * inv_mod(c) % P;
            } else {
              int den = (c * x + d) % P;
              y = den == 0 ? P : (a * x + b) % P * inv_mod(den) % P;
            }
            p[x] = static_cast<uint8_t>(y);
          }
          uint64_t key = 0;
          for (int x = 0; x < 12; ++x) key = key * 24 + p[x];
          if (seen.insert(key).second) out.push_back(p);
        } else {
          if (b == 0 || c == 0) continue;
          // a = 0: -b*c = 1
          if ((P - static_cast<long long>(b) * c % P) % P != 1) continue;
          for (int d = 0; d < P; ++d) {
            Perm p{};
            for (int x = 0; x <= P; ++x) {
              int y;
              if (x == P) {
                y = 0;  // a/c with a = 0
              } else {
                int den = (c * x + d) % P;
                y = den == 0 ? P : b % P * inv_mod(den) % P;
              }
              p[x] = static_cast<uint8_t>(y);
            }
            uint64_t key = 0;
            for (int x = 0; x < 12; ++x) key = key * 24 + p[x];
            if (seen.insert(key).second) out.push_back(p);
          }
        }
      }
  if (out.size() != 6072) fail("psl2_23: wrong order " + std::to_string(out.size()));
  return out;
}

// Generators of M24 in QR labels: the shift, the inversion, and a
// power-map automorphism found by scanning outside PSL(2,23).
inline std::vector<Perm> m24_qr_generators(const QrGolay& code) {
  Perm s{};
  for (int x = 0; x < P; ++x) s[x] = static_cast<uint8_t>((x + 1) % P);
  s[P] = P;
  Perm w{};
  auto inv_mod = [](int x) {
    int r = 1;
    for (int e = P - 2; e;) {
      if (e & 1) r = r * x % P;
      x = x * x % P;
      e >>= 1;
    }
    return r;
  };
  for (int x = 0; x <= P; ++x) {
    if (x == 0) w[x] = P;
    else if (x == P) w[x] = 0;
    else w[x] = static_cast<uint8_t>((P - 1) * inv_mod(x) % P);
  }
  if (!perm_preserves(code, s)) fail("m24 qr: shift fails");
  if (!perm_preserves(code, w)) fail("m24 qr: inversion fails");

  auto psl = psl2_23();
  std::unordered_set<uint64_t> psl_keys;
  for (const auto& p : psl) {
    uint64_t key = 0;
    for (int x = 0; x < 12; ++x) key = key * 24 + p[x];
    psl_keys.insert(key);
  }

  std::array<bool, P> is_q{};
  for (int x : quadratic_residues()) is_q[x] = true;

  for (int e : {3, 5, 9, 15}) {
    for (int u = 1; u < P; ++u)
      for (int v = 1; v < P; ++v) {
        Perm d{};
        uint32_t seen = 0;
        bool ok = true;
        d[0] = 0;
        d[P] = P;
        seen |= 1u | (1u << P);
        for (int x = 1; x < P && ok; ++x) {
          long long xe = 1;
          for (int k = 0; k < e; ++k) xe = xe * x % P;
          int y = static_cast<int>((is_q[x] ? u : v) * xe % P);
          if (y == 0 || (seen >> y & 1)) ok = false;
          else {
            d[x] = static_cast<uint8_t>(y);
            seen |= 1u << y;
          }
        }
        if (!ok || !perm_preserves(code, d)) continue;
        uint64_t key = 0;
        for (int x = 0; x < 12; ++x) key = key * 24 + d[x];
        if (psl_keys.count(key)) continue;
        return {s, w, d};
      }
  }
  fail("m24 qr: no power-map automorphism outside PSL(2,23) found");
}

// Code equivalence by octad forcing.  M24 is 5-transitive and the octad
// stabilizer induces A8, so the images of the first five points of one
// octad can be pinned; every further point is forced through octads with
// five mapped points, up to small bijection branching.
class OctadEquivalence {
 public:
  OctadEquivalence(std::vector<uint32_t> octads_a, std::vector<uint32_t> octads_b)
      : oa_(std::move(octads_a)), ob_(std::move(octads_b)) {
    std::sort(oa_.begin(), oa_.end());
    std::sort(ob_.begin(), ob_.end());
    for (uint32_t o : ob_) ob_set_.insert(o);
  }

  // Returns the first equivalence found (deterministic).
  Perm solve() {
    pi_.fill(255);
    used_ = 0;
    uint32_t oa0 = oa_[0], ob0 = ob_[0];
    std::array<int, 8> pa, pb;
    int na = 0, nb = 0;
    for (int i = 0; i < 24; ++i) {
      if (oa0 >> i & 1) pa[na++] = i;
      if (ob0 >> i & 1) pb[nb++] = i;
    }
    for (int k = 0; k < 5; ++k) assign(pa[k], pb[k]);
    if (!extend()) fail("octad equivalence: search failed");
    Perm out{};
    for (int i = 0; i < 24; ++i) out[i] = static_cast<uint8_t>(pi_[i]);
    return out;
  }

 private:
  std::vector<uint32_t> oa_, ob_;
  std::unordered_set<uint32_t> ob_set_;
  std::array<int, 24> pi_{};
  uint32_t used_ = 0;
  uint32_t mapped_ = 0;

  void assign(int x, int y) {
    pi_[x] = y;
    used_ |= 1u << y;
    mapped_ |= 1u << x;
  }
  void unassign(int x) {
    used_ &= ~(1u << pi_[x]);
    mapped_ &= ~(1u << x);
    pi_[x] = 255;
  }

  uint32_t image_of(uint32_t set) const {
    uint32_t r = 0;
    while (set) {
      int i = std::countr_zero(set);
      set &= set - 1;
      r |= 1u << pi_[i];
    }
    return r;
  }

  bool full_check() const {
    for (uint32_t o : oa_)
      if (!ob_set_.count(image_of(o))) return false;
    return true;
  }

  bool extend() {
    if (mapped_ == 0xFFFFFFu) return full_check();

    // best forcing octad: >=5 mapped points, >=1 unmapped, most mapped
    int best = -1, best_mapped = -1;
    for (size_t k = 0; k < oa_.size(); ++k) {
      int m = popcount24(oa_[k] & mapped_);
      int u = popcount24(oa_[k] & ~mapped_);
      if (m >= 5 && u >= 1 && m > best_mapped) {
        best_mapped = m;
        best = static_cast<int>(k);
        if (m == 7) break;
      }
    }
    if (best < 0) {
      // no forcing octad; branch a single point over all free targets
      int x = std::countr_zero(~mapped_);
      for (int y = 0; y < 24; ++y) {
        if (used_ >> y & 1) continue;
        assign(x, y);
        if (extend()) return true;
        unassign(x);
      }
      return false;
    }

    uint32_t oct = oa_[best];
    uint32_t img_part = image_of(oct & mapped_);
    // unique target octad containing the partial image
    uint32_t target = 0;
    int found = 0;
    for (uint32_t o : ob_)
      if ((o & img_part) == img_part) {
        target = o;
        if (++found > 1) break;
      }
    if (found != 1) return false;

    std::array<int, 3> ua{}, ub{};
    int na = 0, nb = 0;
    uint32_t rest_a = oct & ~mapped_, rest_b = target & ~used_;
    if (popcount24(rest_a) != popcount24(rest_b)) return false;
    while (rest_a) {
      ua[na++] = std::countr_zero(rest_a);
      rest_a &= rest_a - 1;
    }
    while (rest_b) {
      ub[nb++] = std::countr_zero(rest_b);
      rest_b &= rest_b - 1;
    }
    std::array<int, 3> idx{0, 1, 2};
    // iterate bijections in lexicographic order
    std::sort(idx.begin(), idx.begin() + na);
    do {
      for (int k = 0; k < na; ++k) assign(ua[k], ub[idx[k]]);
      if (extend()) return true;
      for (int k = 0; k < na; ++k) unassign(ua[k]);
    } while (std::next_permutation(idx.begin(), idx.begin() + na));
    return false;
  }
};

inline Perm conjugate(const Perm& g, const Perm& pi) {
  Perm inv{};
  for (int i = 0; i < 24; ++i) inv[pi[i]] = static_cast<uint8_t>(i);
  Perm r{};
  for (int y = 0; y < 24; ++y) r[y] = pi[g[inv[y]]];
  return r;
}

// End to end: M24 generators in the MOG labeling of `code`.
inline std::vector<M24Element> derive_m24_generators(const GolayCode& code) {
  QrGolay qr = build_qr_golay();
  auto qr_gens = m24_qr_generators(qr);
  OctadEquivalence eq(qr.octads, code.octads);
  Perm pi = eq.solve();
  std::vector<M24Element> out;
  for (const auto& g : qr_gens) {
    M24Element m;
    m.perm = conjugate(g, pi);
    if (!preserves_code(code, m)) fail("derive_m24: conjugated generator fails");
    out.push_back(m);
  }
  return out;
}

}  // namespace axcount::bootstrap

#include "axcount/orbit_engine.hpp"

namespace axcount::bootstrap {

// Reduces the derived triple to a two-element generating set, certified
// by the order chain; falls back to the full triple.
inline std::vector<M24Element> pick_generating_pair(const std::vector<M24Element>& gens) {
  const BigInt m24_order(244823040);
  const M24Element &s = gens[0], &w = gens[1], &d = gens[2];
  std::vector<std::vector<M24Element>> candidates = {
      {s, w * d}, {s, d * w}, {s * w, d}, {w * s, d}, {s * d, w}, {d * s, w}, {s, w * s * d},
  };
  for (auto& pair : candidates) {
    ActionGroup g(24, {pair[0].matrix(), pair[1].matrix()});
    if (order_via_chain(g) == m24_order) return pair;
  }
  return gens;
}

}  // namespace axcount::bootstrap
