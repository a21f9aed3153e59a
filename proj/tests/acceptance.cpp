// Acceptance suite: runs every criterion end to end at its stated bound
// and prints one pass/fail line per criterion, followed by supplementary
// invariant checks.  Exit code 0 iff everything passes.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>

#include "axcount/bootstrap.hpp"
#include "axcount/certificate.hpp"
#include "axcount/cli.hpp"
#include "axcount/conway.hpp"
#include "axcount/counting.hpp"
#include "axcount/golay.hpp"
#include "axcount/leech.hpp"
#include "axcount/orbit_engine.hpp"
#include "axcount/spectrum.hpp"
#include "axcount/tables.hpp"

using namespace axcount;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void criterion(int n, const std::string& desc, bool ok, double elapsed, double bound) {
  bool pass = ok && elapsed <= bound;
  std::printf("%s criterion %2d: %s  [%.2fs, bound %.0fs]\n", pass ? "PASS" : "FAIL", n,
              desc.c_str(), elapsed, bound);
  if (!pass) ++g_failures;
}

void extra(const std::string& desc, bool ok) {
  std::printf("%s invariant   : %s\n", ok ? "PASS" : "FAIL", desc.c_str());
  if (!ok) ++g_failures;
}

}  // namespace

int main(int argc, char** argv) {
  int threads = 2;
  uint64_t seed = kDefaultSeed;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--threads") && i + 1 < argc) threads = std::atoi(argv[++i]);
    if (!std::strcmp(argv[i], "--seed") && i + 1 < argc) seed = std::strtoull(argv[++i], nullptr, 10);
  }
  std::printf("acceptance suite: seed %llu, %d census thread(s)\n",
              static_cast<unsigned long long>(seed), threads);

  // ---- criterion 1: Golay invariants -----------------------------------
  auto t0 = Clock::now();
  GolayCode code = build_golay();
  std::array<uint64_t, 25> we{};
  for (uint32_t c : code.codewords) ++we[popcount24(c)];
  std::array<uint64_t, 5> cw{};
  for (int s = 0; s < 4096; ++s) ++cw[code.coset_weight[s]];
  bool c1 = we[0] == 1 && we[8] == 759 && we[12] == 2576 && we[16] == 759 && we[24] == 1 &&
            cw[0] == 1 && cw[1] == 24 && cw[2] == 276 && cw[3] == 2024 && cw[4] == 1771;
  criterion(1, "Golay weight enumerator and cocode weight census", c1, seconds_since(t0), 1);

  // ---- criterion 2: |M24| via the chain ---------------------------------
  t0 = Clock::now();
  auto m24 = m24_generators(code);
  std::vector<GF2Matrix> m24_mats;
  for (const auto& g : m24) m24_mats.push_back(g.matrix());
  bool c2 = false;
  try {
    ChainOptions opts;
    opts.seed = seed;
    opts.claimed = BigInt(244823040);  // Las Vegas mode
    c2 = order_via_chain(ActionGroup(24, m24_mats, seed), opts) == 244823040;
  } catch (const LasVegasMismatch&) {
  }
  criterion(2, "|M24| = 244823040 by the chain, Las Vegas claim verified", c2,
            seconds_since(t0), 60);

  // ---- criterion 3: type census -----------------------------------------
  t0 = Clock::now();
  Lattice lat = build_lattice(code);
  TypeTable tt = build_type_table(lat, threads);  // validates multiplicities 2/2/48
  bool c3 = tt.counts[0] == 98280 && tt.counts[1] == 8386560 && tt.counts[2] == 8292375 &&
            tt.norm_totals[0] == 196560 && tt.norm_totals[1] == 16773120 &&
            tt.norm_totals[2] == 398034000;
  double census_bound = threads > 1 ? 600 : 1800;
  criterion(3, "Lambda/2Lambda census (1, 98280, 8386560, 8292375), multiplicities 2/2/48",
            c3, seconds_since(t0), census_bound);

  // ---- criterion 4: Co1 transitivity on the type classes ----------------
  t0 = Clock::now();
  auto co0 = co0_generators(lat, m24);
  auto co1_gens = reduced_co1_generators(lat, co0);
  ActionGroup co1(24, co1_gens, seed);
  OrbitData od = orbits(co1);
  bool c4 = od.reps.size() == 4;
  if (c4) {
    int32_t orbit_of_type[5] = {-1, -1, -1, -1, -1};
    for (size_t i = 0; i < od.reps.size(); ++i)
      orbit_of_type[tt.type_of(od.reps[i])] = static_cast<int32_t>(i);
    for (uint32_t p = 0; p < (1u << 24) && c4; ++p)
      c4 = od.orbit_id[p] == orbit_of_type[tt.type_of(p)];
  }
  criterion(4, "reduced Co0 generators are transitive on each type class", c4,
            seconds_since(t0), 600);

  // ---- criterion 5: |Co1| and |Co2| --------------------------------------
  t0 = Clock::now();
  Int co1_order = 0, co2_order = 0;
  bool c5 = false;
  try {
    ChainOptions opts;
    opts.seed = seed;
    opts.preferred_base = {lat.omega};
    opts.claimed = Int("4157776806543360000");
    co1_order = order_via_chain(co1, opts);
    co2_order = co1_order / 98280;
    c5 = co1_order == Int("4157776806543360000") && co1_order % 98280 == 0 &&
         co2_order == Int("42305421312000");
  } catch (const LasVegasMismatch&) {
  }
  criterion(5, "|Co1| = 4157776806543360000 and |Co2| = |Co1|/98280 = 42305421312000", c5,
            seconds_since(t0), 600);

  // ---- criterion 6: eigenspace bookkeeping ------------------------------
  t0 = Clock::now();
  ShortTable st = build_short_table(lat);
  int8_t beta_vec[24] = {};
  beta_vec[2] = 4;
  beta_vec[3] = -4;
  uint32_t beta = lat.to_leech2(beta_vec);
  ShortProfile prof = short_vector_profile(lat, st, beta);
  AdSpectrum dims = eigenspace_dims(prof);
  bool c6 = prof.ip1[0] == 22528 && prof.ip1[1] == 24576 && prof.ip0[0] == 24047 &&
            prof.ip0[1] == 22528 && prof.pairs[0] == 1276 && prof.pairs[1] == 1024 &&
            dims.dim16 == 1 && dims.dim0 == 96256 && dims.dim4 == 4371 &&
            dims.dim_half == 96256 && dims.total() == 196884;
  criterion(6, "profile (22528, 24576, 24047, 22528, 1276, 1024), dimensions (1, 96256, 4371, 96256)",
            c6, seconds_since(t0), 60);

  // ---- criteria 7/8: orbit sizes from the transition matrices -----------
  t0 = Clock::now();
  auto t1_rows = load_orbit_table(data_path("table1.txt"));
  TransitionMatrix m2 = load_transition_matrix(data_path("table2.txt"));
  OrbitSizeVector xp = orbit_sizes(m2, "2A", 196560);
  bool c7 = check_sizes_match(t1_rows, xp, "axes").ok() &&
            xp.size_of("4A") == Int("1630347264000") &&
            xp.size_of("12C") == Int("48057153579122688000") &&
            xp.total == Int("97239461142009186000");
  criterion(7, "axes matrix recovers all twelve sizes, total 97239461142009186000", c7,
            seconds_since(t0), 1);

  t0 = Clock::now();
  auto t3_rows = load_orbit_table(data_path("table3.txt"));
  TransitionMatrix m4 = load_transition_matrix(data_path("table4.txt"));
  OrbitSizeVector xm = orbit_sizes(m4, "2A1", 1);
  bool c8 = check_sizes_match(t3_rows, xm, "feasible").ok() &&
            xm.size_of("6C1") == Int("6685301145600") && xm.total == Int("11707448673375");
  criterion(8, "feasible matrix recovers all ten sizes, total 11707448673375", c8,
            seconds_since(t0), 1);

  // ---- criterion 9: the orders -------------------------------------------
  t0 = Clock::now();
  Int monster = monster_order(xp.total, xm.total, co2_order);
  Int baby = baby_monster_order(xm.total, co2_order);
  const Int kMonster("808017424794512875886459904961710757005754368000000000");
  const Int kBaby("4154781481226426191177580544000000");
  std::map<int64_t, int> monster_factors{{2, 46}, {3, 20}, {5, 9},  {7, 6},  {11, 2},
                                         {13, 3}, {17, 1}, {19, 1}, {23, 1}, {29, 1},
                                         {31, 1}, {41, 1}, {47, 1}, {59, 1}, {71, 1}};
  std::map<int64_t, int> baby_factors{{2, 41}, {3, 13}, {5, 6},  {7, 2},  {11, 1}, {13, 1},
                                      {17, 1}, {19, 1}, {23, 1}, {31, 1}, {47, 1}};
  bool c9 = monster == kMonster && baby == kBaby && factorize(monster) == monster_factors &&
            factorize(baby) == baby_factors;
  criterion(9, "Monster and Baby Monster orders with exact factorizations", c9,
            seconds_since(t0), 60);

  // ---- criterion 10: Sylow 11 --------------------------------------------
  t0 = Clock::now();
  auto syl = sylow11_check();
  criterion(10, "Sylow-11 fixed-space dimension is exactly 1814/11, non-integral",
            syl.numerator == 1814 && syl.denominator == 11 && !syl.integral,
            seconds_since(t0), 1);

  // ---- criterion 11: consistency suite -----------------------------------
  t0 = Clock::now();
  auto t5_rows = load_fusion_table(data_path("table5.txt"));
  auto t6_rows = load_fusion_table(data_path("table6.txt"));
  auto orders = load_classical_orders(data_path("classical_orders.txt"));
  CheckReport rep;
  rep.merge(check_suborbit_totals(t1_rows, t3_rows, t5_rows, t6_rows));
  rep.merge(check_fusion(t5_rows, t1_rows, "axes"));
  rep.merge(check_fusion(t6_rows, t3_rows, "feasible"));
  rep.merge(check_classical_formulas(orders));
  rep.check(orders.of("Co2") == co2_order, "embedded |Co2| equals the chain quotient");
  auto stab1 = check_stabilizer_products(t1_rows, (Int(1) << 25) * co1_order, "axes");
  auto stab3 = check_stabilizer_products(t3_rows, (Int(1) << 24) * co2_order, "feasible");
  bool c11 = rep.ok() && stab1.ok() && stab3.ok() &&
             stab1.passes.size() + stab3.passes.size() == 22;
  for (const auto& f : rep.failures) std::printf("      failure: %s\n", f.c_str());
  for (const auto& f : stab1.failures) std::printf("      failure: %s\n", f.c_str());
  for (const auto& f : stab3.failures) std::printf("      failure: %s\n", f.c_str());
  criterion(11, "suborbit totals, fusion aggregation, and all 22 stabilizer products", c11,
            seconds_since(t0), 60);

  // ---- criterion 12: certificate robustness ------------------------------
  t0 = Clock::now();
  bool c12 = true;
  {
    // end-to-end through the CLI surface: exit 0 on the shipped file
    std::ostringstream discard;
    auto* oldbuf = std::cout.rdbuf(discard.rdbuf());
    const char* good[] = {"axcount", "verify", "--cert", nullptr};
    std::string cert_path = data_path("monster.cert");
    good[3] = cert_path.c_str();
    c12 = run_cli(4, good) == 0;
    std::cout.rdbuf(oldbuf);

    Certificate cert = parse_certificate_file(cert_path);
    c12 = c12 && verify_certificate(cert, co1_order).pass();

    // 100 random single-entry tampers must all fail closed
    SplitMix64 rng(seed);
    for (int t = 0; t < 100 && c12; ++t) {
      Certificate bad = cert;
      TransitionMatrix& m = (rng.next() & 1) ? bad.axes : bad.feasible;
      int i = static_cast<int>(rng.next() % m.dim());
      int j = static_cast<int>(rng.next() % m.dim());
      Int delta(1 + rng.next() % 100000);
      if ((rng.next() & 1) && m.entries[i][j] >= delta) m.entries[i][j] -= delta;
      else m.entries[i][j] += delta;
      if (verify_certificate(bad).pass()) c12 = false;
    }

    // one tamper through the CLI exit-code contract
    std::ifstream in(cert_path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    auto pos = text.find("row 2A 93150");
    std::string bad_text = text;
    bad_text.replace(pos, 12, "row 2A 93149");
    auto tmp = std::filesystem::temp_directory_path() / "axcount_tampered.cert";
    std::ofstream(tmp) << bad_text;
    const char* badargs[] = {"axcount", "verify", "--cert", nullptr};
    std::string tmps = tmp.string();
    badargs[3] = tmps.c_str();
    oldbuf = std::cout.rdbuf(discard.rdbuf());
    c12 = c12 && run_cli(4, badargs) == 1;
    std::cout.rdbuf(oldbuf);
  }
  criterion(12, "shipped certificate verifies; 100 single-entry tampers all fail", c12,
            seconds_since(t0), 120);

  // ---- supplementary invariants ------------------------------------------
  {
    // theta-series cross-check: vector totals against census multiplicities
    extra("minimal vector totals equal (2, 2, 48) x class censuses",
          tt.norm_totals[0] == 2 * tt.counts[0] && tt.norm_totals[1] == 2 * tt.counts[1] &&
              tt.norm_totals[2] == 48 * tt.counts[2]);

    extra("type census sums to 2^24 with the zero class",
          1 + tt.counts[0] + tt.counts[1] + tt.counts[2] == (1u << 24));

    extra("type(omega) = 4 and type(beta) = 2",
          tt.type_of(lat.omega) == 4 && tt.type_of(beta) == 2);

    // quadratic form law over 10^4 random pairs
    bool qlaw = true;
    SplitMix64 rng(seed + 1);
    for (int t = 0; t < 10000 && qlaw; ++t) {
      uint32_t a = static_cast<uint32_t>(rng.next()) & 0xFFFFFFu;
      uint32_t b = static_cast<uint32_t>(rng.next()) & 0xFFFFFFu;
      qlaw = tt.q(a ^ b) == ((tt.q(a) + tt.q(b) + lat.class_bilinear(a, b)) & 1);
    }
    extra("q(a + b) = q(a) + q(b) + <a, b> over 10^4 random pairs", qlaw);

    extra("forms: <omega, beta> even, q(omega) = 0",
          forms(lat, tt, lat.omega, beta).bilinear == 0 && forms(lat, tt, lat.omega, 0).q_a == 0);

    // feasible census and its independence of the chosen short class
    bool feas = feasible_census(tt, st, beta) == 46575;
    SplitMix64 rng2(seed + 2);
    for (int t = 0; t < 5 && feas; ++t) {
      uint32_t b = st.classes[rng2.next() % st.classes.size()];
      feas = feasible_census(tt, st, b) == 46575;
    }
    extra("feasible census is 46575 = 93150/2 for the fixed and 5 random short classes", feas);

    extra("beta itself is never feasible",
          tt.type_of(beta ^ beta) == 0);

    // cache round trip
    auto cache = std::filesystem::temp_directory_path() / "axcount_types.bin";
    save_type_cache(tt, cache.string());
    TypeTable cached = load_type_cache(cache.string());
    bool cache_ok = true;
    for (int k = 0; k < 3; ++k) cache_ok = cache_ok && cached.bm[k] == tt.bm[k];
    extra("type-table cache round trip is bit-identical and re-verified", cache_ok);

    // type preservation and orbit/type coincidence under the reduced action
    bool type_pres = true;
    SplitMix64 rng3(seed + 3);
    for (int t = 0; t < 10000 && type_pres; ++t) {
      uint32_t a = static_cast<uint32_t>(rng3.next()) & 0xFFFFFFu;
      const GF2Matrix& g = co1_gens[rng3.next() % co1_gens.size()];
      type_pres = tt.type_of(g.apply(a)) == tt.type_of(a);
    }
    extra("type is invariant under the reduced generators (10^4 samples)", type_pres);

    // orbit sizes match the census exactly
    bool orbit_sizes_ok = od.sizes[od.orbit_id[0]] == 1;
    uint64_t by_type[5] = {};
    for (size_t i = 0; i < od.reps.size(); ++i) by_type[tt.type_of(od.reps[i])] = od.sizes[i];
    orbit_sizes_ok = orbit_sizes_ok && by_type[2] == tt.counts[0] &&
                     by_type[3] == tt.counts[1] && by_type[4] == tt.counts[2];
    extra("orbit sizes of the reduced action equal the type censuses", orbit_sizes_ok);

    // Schreier replay: map_to_rep carries type-4 points to the type-4 representative
    bool replay = true;
    SplitMix64 rng4(seed + 4);
    uint32_t rep4 = od.reps[od.orbit_id[lat.omega]];
    for (int t = 0; t < 1000 && replay; ++t) {
      uint32_t p = static_cast<uint32_t>(rng4.next()) & 0xFFFFFFu;
      if (tt.type_of(p) != 4) continue;
      GroupWord w = map_to_rep(od, co1, p);
      replay = w.matrix.apply(rep4) == p && w.matrix.inverse().apply(p) == rep4;
    }
    extra("map_to_rep words replay: every sampled type-4 class reaches the representative",
          replay);

    // stabilizer of omega: order |Co1| / 8292375
    auto stab_gens = random_stabilizer_element(od, co1, lat.omega, 16);
    bool stab_fix = true;
    for (const auto& s : stab_gens) stab_fix = stab_fix && s.apply(lat.omega) == lat.omega;
    Int stab_order = 0;
    try {
      ChainOptions opts;
      opts.seed = seed;
      opts.claimed = Int("501397585920");  // |Co1| / 8292375
      stab_order = order_via_chain(ActionGroup(24, stab_gens, seed), opts);
    } catch (const LasVegasMismatch&) {
    }
    extra("random stabilizer of omega generates a group of order |Co1|/8292375",
          stab_fix && stab_order == Int("501397585920") &&
              stab_order * 8292375 == co1_order);

    // anchor justification: 196560 = 2 * 98280 short classes
    extra("axes anchor 196560 equals twice the short class count",
          Int(2) * st.classes.size() == 196560);

    // partition is independent of the generator order
    auto shuffled = co1_gens;
    std::rotate(shuffled.begin(), shuffled.begin() + 2, shuffled.end());
    OrbitData od2 = orbits(ActionGroup(24, shuffled, seed));
    extra("orbit partition invariant under permuting the generators",
          od2.reps == od.reps && od2.sizes == od.sizes);
  }

  std::printf("%s (%d failure%s)\n", g_failures ? "ACCEPTANCE FAILED" : "ACCEPTANCE PASSED",
              g_failures, g_failures == 1 ? "" : "s");
  return g_failures ? 1 : 0;
}
