#include <array>

#include "doctest.h"

#include "axcount/bootstrap.hpp"
#include "axcount/golay.hpp"
#include "axcount/orbit_engine.hpp"
#include "fixtures.hpp"

using namespace axcount;
namespace tf = axcount::testing;

TEST_CASE("weight enumerator by exhaustive enumeration") {
  std::array<int, 25> we{};
  for (uint32_t c : tf::code().codewords) ++we[popcount24(c)];
  CHECK(we[0] == 1);
  CHECK(we[8] == 759);
  CHECK(we[12] == 2576);
  CHECK(we[16] == 759);
  CHECK(we[24] == 1);
  for (int w = 1; w < 8; ++w) CHECK(we[w] == 0);
}

TEST_CASE("zero and all-ones words are codewords") {
  CHECK(tf::code().is_codeword(0));
  CHECK(tf::code().is_codeword(0xFFFFFFu));
}

TEST_CASE("basis is self-orthogonal with weights divisible by 4") {
  const auto& code = tf::code();
  for (int i = 0; i < 12; ++i) {
    CHECK(popcount24(code.basis[i]) % 4 == 0);
    for (int j = 0; j < 12; ++j) CHECK(parity(code.basis[i] & code.basis[j]) == 0);
  }
}

TEST_CASE("cocode weight census") {
  std::array<int, 5> cw{};
  for (int s = 0; s < 4096; ++s) ++cw[tf::code().coset_weight[s]];
  CHECK(cw[0] == 1);
  CHECK(cw[1] == 24);
  CHECK(cw[2] == 276);
  CHECK(cw[3] == 2024);
  CHECK(cw[4] == 1771);
  // even part is an 11-dimensional subspace: 1 + 276 + 1771 = 2^11
  CHECK(cw[0] + cw[2] + cw[4] == 2048);
}

TEST_CASE("syndrome basics and linearity") {
  const auto& code = tf::code();
  CHECK(syndrome(code, 0).weight == 0);
  for (int i = 0; i < 24; ++i) CHECK(syndrome(code, 1u << i).weight == 1);
  SplitMix64 rng(7);
  for (int t = 0; t < 2000; ++t) {
    uint32_t a = static_cast<uint32_t>(rng.next()) & 0xFFFFFFu;
    uint32_t b = static_cast<uint32_t>(rng.next()) & 0xFFFFFFu;
    CHECK(syndrome(code, a ^ b).syndrome == (syndrome(code, a).syndrome ^ syndrome(code, b).syndrome));
    // same coset iff the difference is a codeword
    CHECK((syndrome(code, a).syndrome == syndrome(code, b).syndrome) == code.is_codeword(a ^ b));
  }
}

TEST_CASE("generators preserve the code, exhaustively") {
  const auto& code = tf::code();
  for (const auto& g : tf::m24())
    for (uint32_t c : code.codewords) CHECK(code.is_codeword(g.apply(c)));
}

TEST_CASE("generators map octads to octads") {
  for (const auto& g : tf::m24())
    for (uint32_t o : tf::code().octads) CHECK(popcount24(g.apply(o)) == 8);
}

TEST_CASE("a transposition does not preserve the code") {
  M24Element t = M24Element::identity();
  std::swap(t.perm[0], t.perm[1]);
  CHECK_FALSE(preserves_code(tf::code(), t));
  CHECK(preserves_code(tf::code(), M24Element::identity()));
}

TEST_CASE("group order from the generators is |M24|") {
  std::vector<GF2Matrix> mats;
  for (const auto& g : tf::m24()) mats.push_back(g.matrix());
  ChainOptions opts;
  opts.claimed = BigInt(244823040);
  CHECK(order_via_chain(ActionGroup(24, mats), opts) == 244823040);
}

TEST_CASE("cocode action") {
  const auto& code = tf::code();
  EvenCocodeBasis basis(code);

  CHECK(cocode_action(code, basis, M24Element::identity()).is_identity());

  std::vector<GF2Matrix> mats;
  for (const auto& g : tf::m24()) mats.push_back(cocode_action(code, basis, g));
  ActionGroup action(11, mats);

  // the weight-2 cosets form one orbit of size 276
  uint32_t duad = basis.coordinates(code.syndrome_bits(0b11));
  OrbitData od = orbits(action);
  bool found = false;
  for (size_t i = 0; i < od.reps.size(); ++i)
    if (od.orbit_id[duad] == static_cast<int32_t>(i)) {
      CHECK(od.sizes[i] == 276);
      found = true;
    }
  CHECK(found);

  // the action is faithful
  ChainOptions opts;
  opts.claimed = BigInt(244823040);
  CHECK(order_via_chain(action, opts) == 244823040);

  // homomorphism on sampled products
  const auto& gens = tf::m24();
  SplitMix64 rng(11);
  for (int t = 0; t < 20; ++t) {
    const auto& g = gens[rng.next() % gens.size()];
    const auto& h = gens[rng.next() % gens.size()];
    CHECK(cocode_action(code, basis, g * h) ==
          cocode_action(code, basis, g) * cocode_action(code, basis, h));
  }
}

TEST_CASE("shipped golay basis file matches the construction") {
  auto lines = golay_basis_lines(tf::code());
  std::vector<std::string> file;
  for (const auto& raw : read_lines(data_path("golay_basis.txt"))) {
    auto l = strip_comment(raw);
    if (!l.empty()) file.push_back(l);
  }
  CHECK(file == lines);
}

TEST_CASE("shipped m24 generators match the derivation") {
  auto derived = bootstrap::pick_generating_pair(bootstrap::derive_m24_generators(tf::code()));
  const auto& shipped = tf::m24();
  REQUIRE(shipped.size() == derived.size());
  for (size_t i = 0; i < shipped.size(); ++i) CHECK(shipped[i].perm == derived[i].perm);
}
