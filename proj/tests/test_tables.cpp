#include "doctest.h"

#include "axcount/tables.hpp"

using namespace axcount;

namespace {
const Int kCo1("4157776806543360000");  // re-derived by the chain in the acceptance suite
}

TEST_CASE("suborbit totals") {
  auto rep = check_suborbit_totals(load_orbit_table(data_path("table1.txt")),
                                   load_orbit_table(data_path("table3.txt")),
                                   load_fusion_table(data_path("table5.txt")),
                                   load_fusion_table(data_path("table6.txt")));
  for (const auto& f : rep.failures) MESSAGE(f);
  CHECK(rep.ok());
}

TEST_CASE("fusion aggregation matches the orbit tables") {
  auto t1 = load_orbit_table(data_path("table1.txt"));
  auto t5 = load_fusion_table(data_path("table5.txt"));
  auto rep = check_fusion(t5, t1, "axes");
  for (const auto& f : rep.failures) MESSAGE(f);
  CHECK(rep.ok());

  auto t3 = load_orbit_table(data_path("table3.txt"));
  auto t6 = load_fusion_table(data_path("table6.txt"));
  auto rep2 = check_fusion(t6, t3, "feasible");
  for (const auto& f : rep2.failures) MESSAGE(f);
  CHECK(rep2.ok());

  // spot values straight from the published tables
  CHECK(t1[0].label == "2A");
  CHECK(t1[0].n_x0 == 3);
  CHECK(t1[0].n_xyz == 3);
  CHECK(t1[1].label == "2B");
  CHECK(t1[1].n_x0 == 5);
  CHECK(t1[1].n_xyz == 6);
  CHECK(t3[0].label == "2A1");
  CHECK(t3[0].n_x0 == 1);
  CHECK(t3[0].n_xyz == 1);
}

TEST_CASE("per-row suborbit counts follow 6 / |S|") {
  auto t5 = load_fusion_table(data_path("table5.txt"));
  long x0 = 0, xyz = 0;
  for (const auto& r : t5) {
    xyz += 6 / r.s_order;
    x0 += r.s_order == 1 ? 3 : r.s_order == 2 ? 2 : 1;
  }
  CHECK(x0 == 251);
  CHECK(xyz == 405);
}

TEST_CASE("tampering a fusion row is detected") {
  auto t1 = load_orbit_table(data_path("table1.txt"));
  auto t5 = load_fusion_table(data_path("table5.txt"));
  t5[0].s_order = 2;  // row 1 is an |S| = 6 row
  CHECK_FALSE(check_fusion(t5, t1, "axes").ok());

  auto t5b = load_fusion_table(data_path("table5.txt"));
  t5b[10].labels[0].label = "2A";
  CHECK_FALSE(check_fusion(t5b, t1, "axes").ok());
}

TEST_CASE("stabilizer products") {
  auto t1 = load_orbit_table(data_path("table1.txt"));
  auto t3 = load_orbit_table(data_path("table3.txt"));
  REQUIRE(t1.size() == 12);
  REQUIRE(t3.size() == 10);
  Int co2 = kCo1 / 98280;
  auto rep = check_stabilizer_products(t1, (Int(1) << 25) * kCo1, "axes");
  rep.merge(check_stabilizer_products(t3, (Int(1) << 24) * co2, "feasible"));
  for (const auto& f : rep.failures) MESSAGE(f);
  CHECK(rep.ok());
  CHECK(rep.passes.size() == 22);

  // a wrong quotient constant breaks the identity
  auto bad = t1;
  bad[3].quotient_order += 1;
  CHECK_FALSE(check_stabilizer_products(bad, (Int(1) << 25) * kCo1, "axes").ok());
}

TEST_CASE("spot stabilizer identities expanded by hand") {
  // row 2A: 196560 * 2^24 * |Co2| = 2^25 * |Co1|
  CHECK(Int(196560) * (Int(1) << 24) * Int("42305421312000") == (Int(1) << 25) * kCo1);
  // row 2B: 11935123200 * 2^17 * 2^9 |O8+(2)| = 2^25 * |Co1|
  CHECK(Int("11935123200") * (Int(1) << 17) * (Int(174182400) << 9) == (Int(1) << 25) * kCo1);
  // feasible row 2A1: 1 * 2^24 * |Co2| = |H|
  CHECK((Int(1) << 24) * Int("42305421312000") == (Int(1) << 24) * (kCo1 / 98280));
}

TEST_CASE("classical order formulas") {
  auto rep = check_classical_formulas(load_classical_orders(data_path("classical_orders.txt")));
  for (const auto& f : rep.failures) MESSAGE(f);
  CHECK(rep.ok());
}

TEST_CASE("every quotient order divides |Co1|") {
  auto orders = load_classical_orders(data_path("classical_orders.txt"));
  auto rep = check_orders_divide(orders, kCo1);
  for (const auto& f : rep.failures) MESSAGE(f);
  CHECK(rep.ok());
  CHECK(rep.passes.size() == orders.order.size());
}

TEST_CASE("table sizes agree with the recovered eigenvector") {
  auto t1 = load_orbit_table(data_path("table1.txt"));
  auto m2 = load_transition_matrix(data_path("table2.txt"));
  CHECK(check_sizes_match(t1, orbit_sizes(m2, "2A", 196560), "axes").ok());
  auto t3 = load_orbit_table(data_path("table3.txt"));
  auto m4 = load_transition_matrix(data_path("table4.txt"));
  CHECK(check_sizes_match(t3, orbit_sizes(m4, "2A1", 1), "feasible").ok());
}
