#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "axcount/common.hpp"
#include "axcount/gf2.hpp"

namespace axcount {

using BigInt = boost::multiprecision::cpp_int;

struct LasVegasMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A group of invertible bit matrices acting on F2^n from the right.
struct ActionGroup {
  int n = 0;
  std::vector<GF2Matrix> gens;
  std::vector<GF2Matrix> invs;
  uint64_t seed = kDefaultSeed;

  ActionGroup() = default;
  ActionGroup(int n_, std::vector<GF2Matrix> g, uint64_t seed_ = kDefaultSeed)
      : n(n_), gens(std::move(g)), seed(seed_) {
    for (const auto& m : gens) {
      if (m.n != n) fail("ActionGroup: dimension mismatch");
      invs.push_back(m.inverse());
    }
  }
};

// Schreier byte: bit7 visited, bit6 root, bit5 direction, bits 0-4 the
// generator index.  Direction 0 means the point was reached by applying
// the generator forwards.
namespace sv {
inline constexpr uint8_t kVisited = 0x80, kRoot = 0x40, kInverse = 0x20;
}

struct OrbitData {
  int n = 0;
  std::vector<int32_t> orbit_id;  // -1 outside the domain
  std::vector<uint8_t> schreier;
  std::vector<uint32_t> reps;     // smallest point of each orbit
  std::vector<uint64_t> sizes;
};

// Orbit partition of the (filtered) point set under the group.  BFS with
// layers processed in ascending index order; deterministic for a fixed
// generator order and independent of threading (there is none here).
inline OrbitData orbits(const ActionGroup& g,
                        const std::function<bool(uint32_t)>& domain = {}) {
  if (g.gens.size() > 32) fail("orbits: at most 32 generators supported");
  const size_t N = size_t{1} << g.n;
  OrbitData o;
  o.n = g.n;
  o.orbit_id.assign(N, -1);
  o.schreier.assign(N, 0);

  std::vector<GF2Action> fwd, inv;
  fwd.reserve(g.gens.size());
  inv.reserve(g.gens.size());
  for (size_t k = 0; k < g.gens.size(); ++k) {
    fwd.emplace_back(g.gens[k]);
    inv.emplace_back(g.invs[k]);
  }

  std::vector<uint32_t> layer, next;
  for (size_t start = 0; start < N; ++start) {
    if (o.schreier[start] & sv::kVisited) continue;
    if (domain && !domain(static_cast<uint32_t>(start))) continue;
    int32_t id = static_cast<int32_t>(o.reps.size());
    o.reps.push_back(static_cast<uint32_t>(start));
    o.sizes.push_back(1);
    o.schreier[start] = sv::kVisited | sv::kRoot;
    o.orbit_id[start] = id;
    layer.assign(1, static_cast<uint32_t>(start));
    while (!layer.empty()) {
      next.clear();
      for (uint32_t p : layer) {
        for (size_t k = 0; k < fwd.size(); ++k) {
          uint32_t q = fwd[k].apply(p);
          if (!(o.schreier[q] & sv::kVisited)) {
            if (domain && !domain(q)) fail("orbits: generator leaves the domain");
            o.schreier[q] = static_cast<uint8_t>(sv::kVisited | k);
            o.orbit_id[q] = id;
            ++o.sizes[id];
            next.push_back(q);
          }
          q = inv[k].apply(p);
          if (!(o.schreier[q] & sv::kVisited)) {
            if (domain && !domain(q)) fail("orbits: generator leaves the domain");
            o.schreier[q] = static_cast<uint8_t>(sv::kVisited | sv::kInverse | k);
            o.orbit_id[q] = id;
            ++o.sizes[id];
            next.push_back(q);
          }
        }
      }
      std::sort(next.begin(), next.end());
      layer.swap(next);
    }
  }
  return o;
}

// A word in the generators together with its resolved matrix.
struct GroupWord {
  std::vector<std::pair<int, int>> factors;  // (generator index, +1/-1)
  GF2Matrix matrix;
};

// Word w with rep(p) * w = p, read off the Schreier vector.
inline GroupWord map_to_rep(const OrbitData& o, const ActionGroup& g, uint32_t p) {
  if (p >= o.orbit_id.size() || o.orbit_id[p] < 0) fail("map_to_rep: point outside domain");
  GroupWord w;
  uint32_t x = p;
  while (!(o.schreier[x] & sv::kRoot)) {
    uint8_t e = o.schreier[x];
    int k = e & 31;
    if (e & sv::kInverse) {  // x = prev * inv(g_k)
      w.factors.emplace_back(k, -1);
      x = g.gens[k].apply(x);
    } else {  // x = prev * g_k
      w.factors.emplace_back(k, +1);
      x = g.invs[k].apply(x);
    }
  }
  std::reverse(w.factors.begin(), w.factors.end());
  w.matrix = GF2Matrix::identity(g.n);
  for (auto [k, e] : w.factors) w.matrix = w.matrix * (e > 0 ? g.gens[k] : g.invs[k]);
  return w;
}

namespace detail {
inline constexpr int kWordLength = 50;

inline GF2Matrix random_word(const ActionGroup& g, uint64_t stream) {
  SplitMix64 rng(stream);
  GF2Matrix m = GF2Matrix::identity(g.n);
  for (int s = 0; s < kWordLength; ++s) {
    uint64_t r = rng.next();
    size_t j = r % (2 * g.gens.size());
    m = m * (j & 1 ? g.invs[j / 2] : g.gens[j / 2]);
  }
  return m;
}
}  // namespace detail

// Seeded Monte Carlo elements of the stabilizer of p: a random word
// followed by the Schreier corrector pulling the image back to p.
inline std::vector<GF2Matrix> random_stabilizer_element(const OrbitData& o,
                                                        const ActionGroup& g,
                                                        uint32_t p, int count) {
  if (g.gens.empty()) return {};
  GroupWord to_p = map_to_rep(o, g, p);
  std::vector<GF2Matrix> out;
  for (int k = 0; k < count; ++k) {
    GF2Matrix w = detail::random_word(g, mix_stream(g.seed, p, static_cast<uint64_t>(k)));
    uint32_t q = w.apply(p);
    GF2Matrix corr = map_to_rep(o, g, q).matrix.inverse() * to_p.matrix;
    GF2Matrix s = w * corr;
    if (s.apply(p) != p) fail("random_stabilizer_element: corrector failed");
    out.push_back(s);
  }
  return out;
}

struct ChainOptions {
  std::optional<BigInt> claimed;
  std::vector<uint32_t> preferred_base;  // tried before standard basis vectors
  int batch = 16;
  int retries = 4;
  uint64_t seed = kDefaultSeed;
};

namespace detail {

// Per-level BFS used by the order chain.  Parent entries: bit15 visited,
// bit10 root, bit9 direction, bits 0-8 generator index.
struct ChainScratch {
  std::vector<uint16_t> parent;
};

inline uint64_t chain_orbit(const std::vector<GF2Matrix>& gens,
                            const std::vector<GF2Matrix>& invs, int n,
                            uint32_t base, ChainScratch& ws,
                            std::vector<uint32_t>& order_of_visit) {
  const size_t N = size_t{1} << n;
  ws.parent.assign(N, 0);
  std::vector<GF2Action> fwd, inv;
  for (size_t k = 0; k < gens.size(); ++k) {
    fwd.emplace_back(gens[k]);
    inv.emplace_back(invs[k]);
  }
  order_of_visit.assign(1, base);
  ws.parent[base] = 0x8000 | 0x0400;
  uint64_t size = 1;
  for (size_t head = 0; head < order_of_visit.size(); ++head) {
    uint32_t p = order_of_visit[head];
    for (size_t k = 0; k < fwd.size(); ++k) {
      uint32_t q = fwd[k].apply(p);
      if (!(ws.parent[q] & 0x8000)) {
        ws.parent[q] = static_cast<uint16_t>(0x8000 | k);
        order_of_visit.push_back(q);
        ++size;
      }
      q = inv[k].apply(p);
      if (!(ws.parent[q] & 0x8000)) {
        ws.parent[q] = static_cast<uint16_t>(0x8000 | 0x0200 | k);
        order_of_visit.push_back(q);
        ++size;
      }
    }
  }
  return size;
}

inline GF2Matrix chain_corrector(const std::vector<GF2Matrix>& gens,
                                 const std::vector<GF2Matrix>& invs, int n,
                                 const ChainScratch& ws, uint32_t q) {
  // matrix mapping q to the BFS root
  GF2Matrix m = GF2Matrix::identity(n);
  uint32_t x = q;
  while (!(ws.parent[x] & 0x0400)) {
    uint16_t e = ws.parent[x];
    int k = e & 0x01FF;
    if (e & 0x0200) {  // x = prev * inv(g_k); step back with g_k
      m = m * gens[k];
      x = gens[k].apply(x);
    } else {
      m = m * invs[k];
      x = invs[k].apply(x);
    }
  }
  return m;
}

}  // namespace detail

// Iterated orbit-stabilizer along a fixed base-point strategy: preferred
// points first, then the standard basis vectors in index order.  The
// result is a lower bound for the group order, exact with overwhelming
// probability; supplying `claimed` turns the computation into a Las
// Vegas check with doubling retries.
inline BigInt order_via_chain(const ActionGroup& g, const ChainOptions& opts = {}) {
  int batch = opts.batch;
  for (int attempt = 0;; ++attempt, batch *= 2) {
    std::vector<GF2Matrix> gens, invs;
    for (size_t i = 0; i < g.gens.size(); ++i) {
      if (g.gens[i].is_identity()) continue;
      if (std::find(gens.begin(), gens.end(), g.gens[i]) != gens.end()) continue;
      gens.push_back(g.gens[i]);
      invs.push_back(g.invs[i]);
    }

    BigInt order = 1;
    detail::ChainScratch ws;
    std::vector<uint32_t> visit_order;
    for (int level = 0; !gens.empty(); ++level) {
      if (level > 400) fail("order_via_chain: chain too deep");
      auto moved = [&](uint32_t p) {
        for (const auto& m : gens)
          if (m.apply(p) != p) return true;
        return false;
      };
      uint32_t base = 0;
      bool found = false;
      for (uint32_t p : opts.preferred_base)
        if (moved(p)) { base = p; found = true; break; }
      for (int i = 0; i < g.n && !found; ++i)
        if (moved(1u << i)) { base = 1u << i; found = true; }
      if (!found) break;  // fixes every basis vector, hence trivial

      order *= detail::chain_orbit(gens, invs, g.n, base, ws, visit_order);

      std::vector<GF2Matrix> sub, subinv;
      auto push_stab = [&](const GF2Matrix& s) {
        if (s.is_identity()) return;
        if (std::find(sub.begin(), sub.end(), s) != sub.end()) return;
        sub.push_back(s);
        subinv.push_back(s.inverse());
      };
      for (const auto& m : gens)
        if (m.apply(base) == base) push_stab(m);
      ActionGroup level_group;
      level_group.n = g.n;
      level_group.gens = gens;
      level_group.invs = invs;
      for (int k = 0; k < batch; ++k) {
        GF2Matrix w = detail::random_word(
            level_group,
            mix_stream(opts.seed, static_cast<uint64_t>(attempt) << 32 | static_cast<uint32_t>(level),
                       static_cast<uint64_t>(k), base));
        uint32_t q = w.apply(base);
        GF2Matrix s = w * detail::chain_corrector(gens, invs, g.n, ws, q);
        if (s.apply(base) != base) fail("order_via_chain: corrector failed");
        push_stab(s);
      }
      if (sub.size() > 511) fail("order_via_chain: too many level generators");
      gens.swap(sub);
      invs.swap(subinv);
    }

    if (!opts.claimed || order == *opts.claimed) return order;
    if (attempt >= opts.retries) {
      std::ostringstream msg;
      msg << "order_via_chain: Las Vegas mismatch, computed " << order
          << " vs claimed " << *opts.claimed << " after " << (attempt + 1) << " attempts";
      throw LasVegasMismatch(msg.str());
    }
  }
}

// Optional text dump: "ORBITS n k" then one "rep size" line per orbit.
inline std::string dump_orbits(const OrbitData& o) {
  std::ostringstream out;
  out << "ORBITS " << o.n << ' ' << o.reps.size() << '\n';
  for (size_t i = 0; i < o.reps.size(); ++i)
    out << o.reps[i] << ' ' << o.sizes[i] << '\n';
  return out.str();
}

}  // namespace axcount
