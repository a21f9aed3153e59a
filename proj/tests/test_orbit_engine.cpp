#include <algorithm>
#include <set>

#include "doctest.h"

#include "axcount/orbit_engine.hpp"
#include "fixtures.hpp"

using namespace axcount;
namespace tf = axcount::testing;

namespace {

// Brute-force closure oracle for small matrix groups.
std::vector<GF2Matrix> closure(const std::vector<GF2Matrix>& gens) {
  std::vector<GF2Matrix> all = {GF2Matrix::identity(gens.empty() ? 1 : gens[0].n)};
  for (size_t head = 0; head < all.size(); ++head)
    for (const auto& g : gens) {
      GF2Matrix p = all[head] * g;
      if (std::find(all.begin(), all.end(), p) == all.end()) all.push_back(p);
    }
  return all;
}

GF2Matrix from_rows(int n, std::initializer_list<uint32_t> rows) {
  GF2Matrix m;
  m.n = n;
  int i = 0;
  for (uint32_t r : rows) m.row[i++] = r;
  return m;
}

}  // namespace

TEST_CASE("trivial group: singleton orbits and order 1") {
  ActionGroup g(4, {});
  OrbitData o = orbits(g);
  CHECK(o.reps.size() == 16);
  for (auto s : o.sizes) CHECK(s == 1);
  CHECK(order_via_chain(g) == 1);
}

TEST_CASE("2x2 swap matrix") {
  ActionGroup g(2, {from_rows(2, {0b10, 0b01})});
  OrbitData o = orbits(g);
  REQUIRE(o.reps.size() == 3);
  CHECK(o.sizes[o.orbit_id[1]] == 2);
  CHECK(o.sizes[o.orbit_id[0]] == 1);
  CHECK(order_via_chain(g) == 2);
}

TEST_CASE("GL(3,2) from two generators: chain equals the closure oracle") {
  auto cyc = from_rows(3, {0b010, 0b100, 0b001});
  auto trans = from_rows(3, {0b011, 0b010, 0b100});
  std::vector<GF2Matrix> gens = {cyc, trans};
  size_t brute = closure(gens).size();
  ActionGroup g(3, gens);
  CHECK(order_via_chain(g) == brute);
  CHECK(brute == 168);  // frozen from the oracle: this pair generates GL(3,2)
}

TEST_CASE("random small groups: chain order and orbit partition match the oracle") {
  SplitMix64 rng(42);
  for (int trial = 0; trial < 12; ++trial) {
    int n = 3 + static_cast<int>(rng.next() % 2);  // 3 or 4
    std::vector<GF2Matrix> gens;
    for (int k = 0; k < 2; ++k) {
      GF2Matrix m;
      m.n = n;
      do {
        for (int i = 0; i < n; ++i) m.row[i] = static_cast<uint32_t>(rng.next()) & ((1u << n) - 1);
      } while (!m.invertible());
      gens.push_back(m);
    }
    auto grp = closure(gens);
    ActionGroup g(n, gens, /*seed=*/trial + 1);
    CHECK(order_via_chain(g) == grp.size());

    OrbitData o = orbits(g);
    for (uint32_t p = 0; p < (1u << n); ++p) {
      std::set<uint32_t> orbit;
      for (const auto& m : grp) orbit.insert(m.apply(p));
      CHECK(o.sizes[o.orbit_id[p]] == orbit.size());
      for (uint32_t q : orbit) CHECK(o.orbit_id[q] == o.orbit_id[p]);
    }
  }
}

TEST_CASE("orbit partition invariant under generator permutation") {
  SplitMix64 rng(5);
  std::vector<GF2Matrix> gens;
  for (int k = 0; k < 3; ++k) {
    GF2Matrix m;
    m.n = 5;
    do {
      for (int i = 0; i < 5; ++i) m.row[i] = static_cast<uint32_t>(rng.next()) & 31;
    } while (!m.invertible());
    gens.push_back(m);
  }
  OrbitData a = orbits(ActionGroup(5, gens));
  std::rotate(gens.begin(), gens.begin() + 1, gens.end());
  OrbitData b = orbits(ActionGroup(5, gens));
  CHECK(a.reps == b.reps);
  CHECK(a.sizes == b.sizes);
  CHECK(a.orbit_id == b.orbit_id);
}

TEST_CASE("M24 permutation matrices are transitive on weight-1 points") {
  std::vector<GF2Matrix> mats;
  for (const auto& g : tf::m24()) mats.push_back(g.matrix());
  ActionGroup g(24, mats);
  OrbitData o = orbits(g, [](uint32_t p) { return popcount24(p) == 1; });
  REQUIRE(o.reps.size() == 1);
  CHECK(o.sizes[0] == 24);
  CHECK(o.reps[0] == 1);
}

TEST_CASE("map_to_rep replay") {
  std::vector<GF2Matrix> mats;
  for (const auto& g : tf::m24()) {
    EvenCocodeBasis basis(tf::code());
    mats.push_back(cocode_action(tf::code(), basis, g));
  }
  ActionGroup g(11, mats);
  OrbitData o = orbits(g);

  // the representative itself yields the empty word
  CHECK(map_to_rep(o, g, o.reps[1]).factors.empty());

  SplitMix64 rng(3);
  for (int t = 0; t < 1000; ++t) {
    uint32_t p = static_cast<uint32_t>(rng.next()) & 2047;
    GroupWord w = map_to_rep(o, g, p);
    CHECK(w.matrix.apply(o.reps[o.orbit_id[p]]) == p);
    CHECK(w.matrix.inverse().apply(p) == o.reps[o.orbit_id[p]]);
  }
}

TEST_CASE("random stabilizer elements fix the point and are deterministic") {
  std::vector<GF2Matrix> mats;
  for (const auto& g : tf::m24()) mats.push_back(g.matrix());
  ActionGroup g(24, mats, /*seed=*/9);
  OrbitData o = orbits(g, [](uint32_t p) { return popcount24(p) == 1; });
  uint32_t p = 1u << 5;
  auto batch1 = random_stabilizer_element(o, g, p, 8);
  auto batch2 = random_stabilizer_element(o, g, p, 8);
  REQUIRE(batch1.size() == 8);
  for (size_t i = 0; i < batch1.size(); ++i) {
    CHECK(batch1[i].apply(p) == p);
    CHECK(batch1[i] == batch2[i]);
  }
  // orbits of a stabilizer subgroup refine the parent orbits
  ActionGroup stab(24, batch1);
  OrbitData os = orbits(stab, [](uint32_t q) { return popcount24(q) == 1; });
  for (uint32_t q = 0; q < 1u << 24; ++q) {
    if (popcount24(q) != 1) continue;
    uint32_t rep = os.reps[os.orbit_id[q]];
    CHECK(o.orbit_id[rep] == o.orbit_id[q]);
  }
  CHECK(os.sizes[os.orbit_id[p]] == 1);  // p itself is fixed
}

TEST_CASE("Las Vegas mismatch raises after retries") {
  ActionGroup g(2, {from_rows(2, {0b10, 0b01})});
  ChainOptions opts;
  opts.claimed = BigInt(3);  // true order is 2
  opts.retries = 1;
  CHECK_THROWS_AS(order_via_chain(g, opts), LasVegasMismatch);
}

TEST_CASE("orbit dump format") {
  ActionGroup g(2, {from_rows(2, {0b10, 0b01})});
  CHECK(dump_orbits(orbits(g)) == "ORBITS 2 3\n0 1\n1 2\n3 1\n");
}
