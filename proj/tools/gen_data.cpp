// Regenerates the derived data files from first principles: the Golay
// basis in MOG coordinates, a two-element generating set of M24 obtained
// from the extended quadratic-residue construction, the Leech basis, the
// Co0 generator matrices, and the shipped certificate.  The transcribed
// tables (table1..table6, classical_orders) are inputs, not outputs.

#include <cstdio>
#include <fstream>

#include "axcount/bootstrap.hpp"
#include "axcount/certificate.hpp"
#include "axcount/conway.hpp"
#include "axcount/counting.hpp"
#include "axcount/golay.hpp"
#include "axcount/leech.hpp"
#include "axcount/orbit_engine.hpp"

using namespace axcount;

static void write_lines(const std::string& path, const std::vector<std::string>& lines,
                        const std::string& header = "") {
  std::ofstream out(path);
  if (!out) fail("cannot write " + path);
  if (!header.empty()) out << header;
  for (const auto& l : lines) out << l << '\n';
  std::printf("wrote %s (%zu lines)\n", path.c_str(), lines.size());
}

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : data_dir();

  GolayCode code = build_golay();
  write_lines(dir + "/golay_basis.txt", golay_basis_lines(code));

  auto derived = bootstrap::derive_m24_generators(code);
  auto pair = bootstrap::pick_generating_pair(derived);
  {
    ActionGroup g(24, [&] {
      std::vector<GF2Matrix> m;
      for (auto& e : pair) m.push_back(e.matrix());
      return m;
    }());
    ChainOptions opts;
    opts.claimed = BigInt(244823040);
    order_via_chain(g, opts);  // throws unless the set generates all of M24
  }
  std::vector<std::string> perm_lines;
  for (const auto& g : pair) {
    std::string s;
    for (int i = 0; i < 24; ++i) {
      if (i) s += ' ';
      s += std::to_string(g.perm[i]);
    }
    perm_lines.push_back(s);
  }
  write_lines(dir + "/m24_generators.txt", perm_lines);

  Lattice lat = build_lattice(code);
  write_lines(dir + "/leech_basis.txt", leech_basis_lines(lat));

  auto m24 = m24_generators(code, dir + "/m24_generators.txt");
  auto co0 = co0_generators(lat, m24);
  write_lines(dir + "/co0_generators.txt", co0_generator_lines(co0));

  // Certificate: everything below is derived, not transcribed.
  Certificate cert;
  cert.axes = load_transition_matrix(dir + "/table2.txt");
  cert.feasible = load_transition_matrix(dir + "/table4.txt");

  ShortTable st = build_short_table(lat);
  cert.axes_anchor_label = "2A";
  cert.axes_anchor_size = Int(2) * st.classes.size();  // two involutions per short class
  cert.feasible_anchor_label = "2A1";
  cert.feasible_anchor_size = 1;

  OrbitSizeVector axes = orbit_sizes(cert.axes, cert.axes_anchor_label, cert.axes_anchor_size);
  OrbitSizeVector feas =
      orbit_sizes(cert.feasible, cert.feasible_anchor_label, cert.feasible_anchor_size);
  cert.axes_claim_sizes = axes.sizes;
  cert.axes_claim_total = axes.total;
  cert.feasible_claim_sizes = feas.sizes;
  cert.feasible_claim_total = feas.total;

  auto co1_gens = reduced_co1_generators(lat, co0);
  ChainOptions chain;
  chain.preferred_base = {lat.omega};
  Int co1 = order_via_chain(ActionGroup(24, co1_gens), chain);
  if (co1 % Int(st.classes.size()) != 0)
    fail("gen_data: chain order not divisible by the short class count");
  cert.co2 = co1 / Int(st.classes.size());

  cert.monster = monster_order(cert.axes_claim_total, cert.feasible_claim_total, cert.co2);
  cert.baby = baby_monster_order(cert.feasible_claim_total, cert.co2);
  cert.monster_factors = factorize(cert.monster);
  cert.baby_factors = factorize(cert.baby);

  auto rep = verify_certificate(cert, co1);
  for (const auto& c : rep.checks)
    std::printf("  %-24s %s %s\n", c.name.c_str(), c.pass ? "ok" : "FAIL", c.detail.c_str());
  if (!rep.pass()) fail("gen_data: generated certificate does not verify");

  std::ofstream out(dir + "/monster.cert");
  out << serialize_certificate(cert);
  std::printf("wrote %s/monster.cert\n", dir.c_str());
  return 0;
}
