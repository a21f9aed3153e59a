#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstring>
#include <map>
#include <memory>
#include <thread>
#include <vector>

#include "axcount/common.hpp"
#include "axcount/gf2.hpp"
#include "axcount/golay.hpp"
#include "axcount/linalg_exact.hpp"

namespace axcount {

// The Leech lattice in the scaling where coordinates are integers and
// the (halved squared) norm of a vector v is sum(v_i^2)/8.  Membership:
// all coordinates are congruent to a single m mod 2, the set of
// coordinates congruent to m+2 mod 4 supports a Golay codeword, and the
// coordinate sum is 4m mod 8.
struct Lattice {
  GolayCode code;
  int32_t basis[24][24];   // rows generate the lattice (Hermite normal form)
  int64_t pinv[24][24];    // v in lattice  <=>  v * pinv is divisible by 8;
                           // then (v * pinv)/8 are the basis coordinates of v
  uint8_t delta16[24][16][32];  // delta16[i][k][j] = (k * pinv[i][j]) mod 16
  GF2Matrix gram2;         // (B B^T / 8) mod 2: the bilinear form on Lambda/2Lambda

  uint32_t omega; // class of (8, 0^23)

  template <class T>
  bool is_member(const T* v) const {
    int m = static_cast<int>(v[0] & 1);
    uint32_t d = 0;
    int64_t sum = 0;
    for (int i = 0; i < 24; ++i) {
      if (static_cast<int>(v[i] & 1) != m) return false;
      if (((v[i] - m) & 3) == 2) d |= 1u << i;
      sum += v[i];
    }
    if (!code.is_codeword(d)) return false;
    return ((sum - 4 * m) & 7) == 0;
  }

  // Halved squared norm; exact integer for members.
  template <class T>
  int64_t norm(const T* v) const {
    int64_t s = 0;
    for (int i = 0; i < 24; ++i) s += int64_t(v[i]) * v[i];
    if (s % 8) fail("leech: squared length not divisible by 8");
    return s / 8;
  }

  // Class of v in Lambda/2Lambda as a 24-bit index (basis coordinates mod 2).
  template <class T>
  uint32_t to_leech2(const T* v) const {
    if (!is_member(v)) fail("to_leech2: not a lattice vector");
    uint32_t cls = 0;
    for (int j = 0; j < 24; ++j) {
      int64_t s = 0;
      for (int i = 0; i < 24; ++i) s += int64_t(v[i]) * pinv[i][j];
      if (s & 7) fail("to_leech2: inconsistent coordinate solve");
      cls |= static_cast<uint32_t>((s >> 3) & 1) << j;
    }
    return cls;
  }

  // <a, b> mod 2 on class indices, representative-free.
  int class_bilinear(uint32_t a, uint32_t b) const {
    return parity(a & gram2.apply(b));
  }
};

inline Lattice build_lattice(GolayCode code) {
  // Generators: doubled Golay words, 4(e_0 + e_i), 4(e_0 - e_1), and one
  // odd-frame vector.
  IntMatrix gen;
  for (int k = 0; k < 12; ++k) {
    std::vector<Int> row(24, 0);
    for (int i = 0; i < 24; ++i)
      if (code.basis[k] >> i & 1) row[i] = 2;
    gen.push_back(row);
  }
  for (int i = 1; i < 24; ++i) {
    std::vector<Int> row(24, 0);
    row[0] = 4;
    row[i] = 4;
    gen.push_back(row);
  }
  {
    std::vector<Int> row(24, 0);
    row[0] = 4;
    row[1] = -4;
    gen.push_back(row);
    std::vector<Int> odd(24, 1);
    odd[0] = -3;
    gen.push_back(odd);
  }

  IntMatrix b = hermite_normal_form(std::move(gen));
  if (b.size() != 24) fail("leech basis: rank != 24");
  if (determinant(b) != Int(1) << 36) fail("leech basis: determinant != 8^12");

  Lattice lat;
  lat.code = std::move(code);
  for (int i = 0; i < 24; ++i)
    for (int j = 0; j < 24; ++j) {
      if (abs(b[i][j]) > 8) fail("leech basis: unexpected entry size");
      lat.basis[i][j] = static_cast<int32_t>(b[i][j]);
    }

  IntMatrix gram = int_matrix(24, 24);
  for (int i = 0; i < 24; ++i)
    for (int j = 0; j < 24; ++j) {
      Int s = 0;
      for (int k = 0; k < 24; ++k) s += b[i][k] * b[j][k];
      if (s % 8 != 0) fail("leech basis: Gram not divisible by 8");
      gram[i][j] = s / 8;
    }
  if (determinant(gram) != 1) fail("leech basis: Gram determinant != 1");

  IntMatrix ginv = unimodular_inverse(gram);
  // pinv = B^T * G^{-1}; then v * pinv = 8 * (coordinates of v)
  for (int i = 0; i < 24; ++i)
    for (int j = 0; j < 24; ++j) {
      Int s = 0;
      for (int k = 0; k < 24; ++k) s += b[k][i] * ginv[k][j];
      if (abs(s) > (Int(1) << 40)) fail("leech: pinv entry out of range");
      lat.pinv[i][j] = static_cast<int64_t>(s);
    }
  for (int i = 0; i < 24; ++i)
    for (int j = 0; j < 24; ++j) {
      int64_t s = 0;
      for (int k = 0; k < 24; ++k) s += int64_t(lat.basis[i][k]) * lat.pinv[k][j];
      if (s != (i == j ? 8 : 0)) fail("leech: B * pinv != 8I");
    }

  for (int i = 0; i < 24; ++i)
    for (int k = 0; k < 16; ++k) {
      for (int j = 0; j < 24; ++j) {
        int64_t p = ((lat.pinv[i][j] % 16) + 16) % 16;
        lat.delta16[i][k][j] = static_cast<uint8_t>((k * p) & 15);
      }
      for (int j = 24; j < 32; ++j) lat.delta16[i][k][j] = 0;
    }

  lat.gram2.n = 24;
  for (int i = 0; i < 24; ++i) {
    uint32_t r = 0;
    for (int j = 0; j < 24; ++j)
      if ((gram[i][j] & 1) != 0) r |= 1u << j;
    lat.gram2.row[i] = r;
  }

  int8_t omega_vec[24] = {8};
  lat.omega = lat.to_leech2(omega_vec);
  return lat;
}

// data/leech_basis.txt: 24 rows of 24 integers.
inline std::vector<std::string> leech_basis_lines(const Lattice& lat) {
  std::vector<std::string> lines;
  for (int i = 0; i < 24; ++i) {
    std::string s;
    for (int j = 0; j < 24; ++j) {
      if (j) s += ' ';
      s += std::to_string(lat.basis[i][j]);
    }
    lines.push_back(s);
  }
  return lines;
}

namespace detail {

// Streaming enumerator of all lattice vectors of a given norm (4, 6 or 8),
// organized by congruence class: parity m, Golay codeword D of coordinates
// congruent to m+2 mod 4, magnitude upgrades, then sign patterns in Gray
// order.  The running class accumulator tracks v * pinv mod 16, whose bit 3
// per column is the Lambda/2Lambda class index bit.
template <class CB>
class VectorEnumerator {
 public:
  VectorEnumerator(const Lattice& lat, int norm, CB& cb)
      : lat_(lat), n8_(8 * norm), cb_(cb) {
    std::memset(cur_, 0, sizeof cur_);
    std::memset(acc_, 0, sizeof acc_);
  }

  // Processes the (m, D) tasks whose running index is tid mod nthreads.
  void run(int nthreads, int tid) {
    long task = 0;
    for (int m = 0; m < 2; ++m)
      for (uint32_t d : lat_.code.codewords) {
        if (task++ % nthreads != tid) continue;
        if (m == 0) run_even(d);
        else run_odd(d);
      }
  }

 private:
  const Lattice& lat_;
  int n8_;
  CB& cb_;
  int8_t cur_[24];
  uint8_t acc_[32];
  int sum_ = 0;
  int want_ = 0;
  int npos_[24];
  int dpos_[24], opos_[24];
  int nd_ = 0, no_ = 0;

  void set(int i, int v) {
    const uint8_t* row = lat_.delta16[i][(v - cur_[i]) & 15];
    for (int j = 0; j < 32; ++j) acc_[j] = static_cast<uint8_t>(acc_[j] + row[j]);
    sum_ += v - cur_[i];
    cur_[i] = static_cast<int8_t>(v);
  }

  void emit() {
    if ((sum_ & 7) != want_) return;
    uint32_t cls = 0;
    for (int j = 0; j < 24; ++j) cls |= static_cast<uint32_t>(acc_[j] >> 3 & 1) << j;
    cb_(cur_, cls);
  }

  void signs(int k) {
    emit();
    if (k == 0) return;
    for (uint32_t s = 1; s < (1u << k); ++s) {
      int p = npos_[std::countr_zero(s)];
      set(p, -cur_[p]);
      emit();
    }
    uint32_t g = ((1u << k) - 1) ^ (((1u << k) - 1) >> 1);
    for (int j = 0; j < k; ++j)
      if (g >> j & 1) {
        int p = npos_[j];
        set(p, -cur_[p]);
      }
  }

  void collect_signs() {
    int k = 0;
    for (int i = 0; i < nd_; ++i) npos_[k++] = dpos_[i];
    for (int i = 0; i < no_; ++i)
      if (cur_[opos_[i]] != 0) npos_[k++] = opos_[i];
    signs(k);
  }

  void choose_eights(int start, int c) {
    if (c == 0) { collect_signs(); return; }
    for (int i = start; i <= no_ - c; ++i) {
      if (cur_[opos_[i]] != 0) continue;
      set(opos_[i], 8);
      choose_eights(i + 1, c - 1);
      set(opos_[i], 0);
    }
  }

  void choose_fours(int start, int b, int c) {
    if (b == 0) { choose_eights(0, c); return; }
    for (int i = start; i <= no_ - b; ++i) {
      set(opos_[i], 4);
      choose_fours(i + 1, b - 1, c);
      set(opos_[i], 0);
    }
  }

  void choose_sixes(int start, int a, int b, int c) {
    if (a == 0) { choose_fours(0, b, c); return; }
    for (int i = start; i <= nd_ - a; ++i) {
      set(dpos_[i], 6);
      choose_sixes(i + 1, a - 1, b, c);
      set(dpos_[i], 2);
    }
  }

  void split_positions(uint32_t d) {
    nd_ = no_ = 0;
    for (int i = 0; i < 24; ++i) {
      if (d >> i & 1) dpos_[nd_++] = i;
      else opos_[no_++] = i;
    }
  }

  void run_even(uint32_t d) {
    int margin = n8_ - 4 * popcount24(d);
    if (margin < 0) return;
    want_ = 0;
    split_positions(d);
    for (int i = 0; i < nd_; ++i) set(dpos_[i], 2);
    for (int a = 0; 32 * a <= margin && a <= nd_; ++a) {
      int rem = margin - 32 * a;
      for (int c = 0; 64 * c <= rem; ++c) {
        int rem2 = rem - 64 * c;
        if (rem2 % 16) continue;
        int b = rem2 / 16;
        if (b + c > no_) continue;
        choose_sixes(0, a, b, c);
      }
    }
    for (int i = 0; i < nd_; ++i) set(dpos_[i], 0);
  }

  // Odd congruence class: values are forced by the side of D, so there is
  // no sign enumeration.  In D: -1, 3, or -5; outside D: 1, -3, or 5.
  void choose_threes(uint32_t d, int start, int p, int q) {
    if (p == 0) { choose_fives(d, 0, q); return; }
    for (int i = start; i <= 24 - p; ++i) {
      int8_t base = cur_[i];
      set(i, d >> i & 1 ? 3 : -3);
      choose_threes(d, i + 1, p - 1, q);
      set(i, base);
    }
  }

  void choose_fives(uint32_t d, int start, int q) {
    if (q == 0) { emit(); return; }
    for (int i = start; i <= 24 - q; ++i) {
      if (cur_[i] != 1 && cur_[i] != -1) continue;
      int8_t base = cur_[i];
      set(i, d >> i & 1 ? -5 : 5);
      choose_fives(d, i + 1, q - 1);
      set(i, base);
    }
  }

  void run_odd(uint32_t d) {
    int margin = n8_ - 24;
    if (margin < 0) return;
    want_ = 4;
    for (int i = 0; i < 24; ++i) set(i, d >> i & 1 ? -1 : 1);
    for (int q = 0; 24 * q <= margin; ++q) {
      int rem = margin - 24 * q;
      if (rem % 8) continue;
      int p = rem / 8;
      if (p + q > 24) continue;
      choose_threes(d, 0, p, q);
    }
    for (int i = 0; i < 24; ++i) set(i, 0);
  }
};

}  // namespace detail

// Calls cb(coords, class_index) for every lattice vector of the given
// norm exactly once.  With nthreads > 1 the callback must be thread-safe;
// the set of emitted vectors is independent of the partitioning.
template <class CB>
void enumerate_vectors(const Lattice& lat, int norm, CB cb, int nthreads = 1) {
  if (norm != 4 && norm != 6 && norm != 8) fail("enumerate_vectors: norm must be 4, 6, or 8");
  if (nthreads <= 1) {
    detail::VectorEnumerator<CB> e(lat, norm, cb);
    e.run(1, 0);
    return;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < nthreads; ++t)
    pool.emplace_back([&lat, norm, &cb, nthreads, t] {
      detail::VectorEnumerator<CB> e(lat, norm, cb);
      e.run(nthreads, t);
    });
  for (auto& th : pool) th.join();
}

// Multiset of absolute coordinate values; key[v] = how many coordinates
// have |coordinate| = v.
using ShapeKey = std::array<uint8_t, 9>;

// One minimal representative per short class, plus the norm-4 shape census.
struct ShortTable {
  std::vector<uint32_t> classes;                // sorted class indices
  std::vector<std::array<int8_t, 24>> reps;     // aligned with classes
  std::map<ShapeKey, uint64_t> shapes;
  uint64_t vector_count = 0;

  int index_of(uint32_t cls) const {
    auto it = std::lower_bound(classes.begin(), classes.end(), cls);
    if (it == classes.end() || *it != cls) return -1;
    return static_cast<int>(it - classes.begin());
  }
};

inline ShortTable build_short_table(const Lattice& lat) {
  ShortTable st;
  std::vector<uint64_t> seen(1 << 18, 0);
  std::vector<std::pair<uint32_t, std::array<int8_t, 24>>> found;
  enumerate_vectors(lat, 4, [&](const int8_t* v, uint32_t cls) {
    ++st.vector_count;
    ShapeKey key{};
    for (int i = 0; i < 24; ++i) ++key[v[i] < 0 ? -v[i] : v[i]];
    ++st.shapes[key];
    if (!(seen[cls >> 6] >> (cls & 63) & 1)) {
      seen[cls >> 6] |= 1ull << (cls & 63);
      std::array<int8_t, 24> rep;
      std::memcpy(rep.data(), v, 24);
      found.emplace_back(cls, rep);
    }
  });
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [cls, rep] : found) {
    st.classes.push_back(cls);
    st.reps.push_back(rep);
  }
  return st;
}

// Type bitmaps over the 2^24 classes plus per-class hit counters.
struct TypeTable {
  std::vector<uint64_t> bm[3];   // types 2, 3, 4
  std::vector<uint8_t> hits;     // empty when loaded from cache
  uint64_t counts[3] = {0, 0, 0};
  uint64_t norm_totals[3] = {0, 0, 0};

  static bool test(const std::vector<uint64_t>& bm, uint32_t idx) {
    return bm[idx >> 6] >> (idx & 63) & 1;
  }

  int type_of(uint32_t idx) const {
    idx &= 0xFFFFFFu;
    if (idx == 0) return 0;
    if (test(bm[0], idx)) return 2;
    if (test(bm[1], idx)) return 3;
    if (test(bm[2], idx)) return 4;
    fail("type_of: unmarked nonzero class");
  }

  int q(uint32_t idx) const { return type_of(idx) & 1; }
};

inline constexpr uint64_t kExpectedTypeCounts[3] = {98280, 8386560, 8292375};
inline constexpr uint64_t kExpectedNormTotals[3] = {196560, 16773120, 398034000};

// Marks classes in increasing norm order and validates the structural
// contract: no norm-6 or norm-8 vector may land in a previously marked
// class, and the per-class hit multiplicities must be exactly 2 / 2 / 48.
// Threads work on disjoint (parity, codeword) tasks into thread-local
// arrays merged after each pass, so the result is independent of the
// partitioning.
inline TypeTable build_type_table(const Lattice& lat, int nthreads = 1) {
  constexpr size_t kWords = size_t{1} << 18;
  constexpr size_t kClasses = size_t{1} << 24;
  if (nthreads < 1) nthreads = 1;

  TypeTable tt;
  for (int t = 0; t < 3; ++t) tt.bm[t].assign(kWords, 0);
  tt.hits.assign(kClasses, 0);

  struct Local {
    std::vector<uint64_t> bm;
    std::vector<uint8_t> hits;
    uint64_t emitted = 0;
    bool bad = false;
  };

  const int norms[3] = {4, 6, 8};
  for (int pass = 0; pass < 3; ++pass) {
    std::vector<Local> locals(nthreads);
    auto work = [&](int tid) {
      Local& loc = locals[tid];
      loc.bm.assign(kWords, 0);
      loc.hits.assign(kClasses, 0);
      auto mark = [&](const int8_t*, uint32_t cls) {
        for (int earlier = 0; earlier < pass; ++earlier)
          if (TypeTable::test(tt.bm[earlier], cls)) { loc.bad = true; return; }
        loc.bm[cls >> 6] |= 1ull << (cls & 63);
        ++loc.hits[cls];
        ++loc.emitted;
      };
      detail::VectorEnumerator<decltype(mark)> e(lat, norms[pass], mark);
      e.run(nthreads, tid);
    };
    if (nthreads == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < nthreads; ++t) pool.emplace_back(work, t);
      for (auto& th : pool) th.join();
    }
    for (const Local& loc : locals) {
      if (loc.bad)
        fail("build_type_table: a norm-" + std::to_string(norms[pass]) +
             " vector hit a class of smaller type");
      for (size_t i = 0; i < kWords; ++i) tt.bm[pass][i] |= loc.bm[i];
      for (size_t i = 0; i < kClasses; ++i) {
        unsigned h = tt.hits[i] + loc.hits[i];
        if (h > 255) fail("build_type_table: hit counter overflow");
        tt.hits[i] = static_cast<uint8_t>(h);
      }
      tt.norm_totals[pass] += loc.emitted;
    }
  }

  for (int t = 0; t < 3; ++t) {
    uint64_t cnt = 0;
    for (uint64_t w : tt.bm[t]) cnt += std::popcount(w);
    tt.counts[t] = cnt;
  }

  if (tt.bm[0][0] & 1 || tt.bm[1][0] & 1 || tt.bm[2][0] & 1)
    fail("build_type_table: zero class marked");
  if (1 + tt.counts[0] + tt.counts[1] + tt.counts[2] != kClasses)
    fail("build_type_table: some nonzero class is unmarked");

  const uint8_t expected_hits[3] = {2, 2, 48};
  for (size_t idx = 1; idx < kClasses; ++idx) {
    int t = TypeTable::test(tt.bm[0], static_cast<uint32_t>(idx))   ? 0
            : TypeTable::test(tt.bm[1], static_cast<uint32_t>(idx)) ? 1
                                                                    : 2;
    if (tt.hits[idx] != expected_hits[t])
      fail("build_type_table: hit multiplicity deviates at class " + std::to_string(idx));
  }
  return tt;
}

// Number of short lambda with lambda + beta of type 4.
inline uint64_t feasible_census(const TypeTable& tt, const ShortTable& st, uint32_t beta) {
  if (tt.type_of(beta) != 2) fail("feasible_census: beta is not short");
  uint64_t n = 0;
  for (uint32_t s : st.classes)
    if (TypeTable::test(tt.bm[2], s ^ beta)) ++n;
  return n;
}

struct FormBits {
  int bilinear;
  int q_a;
};

inline FormBits forms(const Lattice& lat, const TypeTable& tt, uint32_t a, uint32_t b) {
  return FormBits{lat.class_bilinear(a, b), tt.q(a)};
}

// Advisory binary cache of the three type bitmaps.
inline constexpr char kCacheMagic[] = "LEECH2TYPES1";

inline void save_type_cache(const TypeTable& tt, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("cannot write " + path);
  out.write(kCacheMagic, 12);
  for (int t = 0; t < 3; ++t)
    for (uint64_t w : tt.bm[t]) {
      uint8_t bytes[8];
      for (int k = 0; k < 8; ++k) bytes[k] = static_cast<uint8_t>(w >> (8 * k));
      out.write(reinterpret_cast<const char*>(bytes), 8);
    }
  if (!out) fail("short write to " + path);
}

inline TypeTable load_type_cache(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open " + path);
  char magic[12];
  in.read(magic, 12);
  if (!in || std::memcmp(magic, kCacheMagic, 12) != 0) fail("type cache: bad magic");
  TypeTable tt;
  for (int t = 0; t < 3; ++t) {
    tt.bm[t].resize(size_t{1} << 18);
    uint64_t cnt = 0;
    for (auto& w : tt.bm[t]) {
      uint8_t bytes[8];
      in.read(reinterpret_cast<char*>(bytes), 8);
      if (!in) fail("type cache: truncated");
      w = 0;
      for (int k = 0; k < 8; ++k) w |= uint64_t(bytes[k]) << (8 * k);
      cnt += std::popcount(w);
    }
    tt.counts[t] = cnt;
  }
  // structural re-verification of the advisory cache
  if (tt.bm[0][0] & 1 || tt.bm[1][0] & 1 || tt.bm[2][0] & 1)
    fail("type cache: zero class marked");
  uint64_t total = 1;
  for (int t = 0; t < 3; ++t) {
    if (tt.counts[t] != kExpectedTypeCounts[t]) fail("type cache: census mismatch");
    total += tt.counts[t];
  }
  for (size_t i = 0; i < tt.bm[0].size(); ++i)
    if ((tt.bm[0][i] & tt.bm[1][i]) | (tt.bm[0][i] & tt.bm[2][i]) | (tt.bm[1][i] & tt.bm[2][i]))
      fail("type cache: overlapping type bitmaps");
  if (total != size_t{1} << 24) fail("type cache: coverage mismatch");
  return tt;
}

}  // namespace axcount
