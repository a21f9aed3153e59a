#pragma once

#include <map>
#include <string>
#include <vector>

#include "axcount/common.hpp"
#include "axcount/counting.hpp"

namespace axcount {

// One row of the published orbit tables: suborbit counts, orbit size, and
// the stabilizer order split as (2-group part inside Q) x (quotient).
struct GOrbitRow {
  std::string label;
  int n_x0 = 0;          // suborbits under N_x0 (resp. H cap N_x0)
  int n_xyz = 0;         // suborbits under N_xyz (resp. H cap N_xyz)
  Int size;
  int q_exp = 0;         // |C cap Q_x0| = 2^q_exp
  Int quotient_order;    // |C / (C cap Q_x0)|, pre-resolved integer
  std::string structure; // display only
};

inline std::vector<GOrbitRow> load_orbit_table(const std::string& path) {
  std::vector<GOrbitRow> rows;
  for (const auto& raw : read_lines(path)) {
    auto line = strip_comment(raw);
    if (line.empty()) continue;
    auto t = split_ws(line);
    if (t.size() != 6) fail(path + ": expected 6 fields per row");
    GOrbitRow r;
    r.label = t[0];
    r.n_x0 = std::stoi(t[1]);
    r.n_xyz = std::stoi(t[2]);
    r.size = Int(t[3]);
    r.q_exp = std::stoi(t[4]);
    r.quotient_order = Int(t[5]);
    auto pos = raw.find('#');
    if (pos != std::string::npos) {
      auto s = raw.substr(pos + 1);
      auto a = s.find_first_not_of(" \t");
      if (a != std::string::npos) r.structure = s.substr(a);
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

// A fused orbit row: the order of the induced S <= S3 and the orbit
// labels with multiplicity markers (1 plain, 2 for the doubled label in
// |S| = 2 rows, 3 for the tripled label).
struct FusionEntry {
  std::string label;
  int marker = 1;
};

struct FusionRow {
  int row = 0;
  int s_order = 0;  // 1, 2, 3, or 6
  std::vector<FusionEntry> labels;
};

inline std::vector<FusionRow> load_fusion_table(const std::string& path) {
  std::vector<FusionRow> rows;
  for (const auto& raw : read_lines(path)) {
    auto line = strip_comment(raw);
    if (line.empty()) continue;
    auto t = split_ws(line);
    if (t.size() < 3) fail(path + ": expected 'row s_order labels...'");
    FusionRow r;
    r.row = std::stoi(t[0]);
    r.s_order = std::stoi(t[1]);
    for (size_t i = 2; i < t.size(); ++i) {
      FusionEntry e;
      auto caret = t[i].find('^');
      if (caret == std::string::npos) {
        e.label = t[i];
      } else {
        e.label = t[i].substr(0, caret);
        e.marker = std::stoi(t[i].substr(caret + 1));
      }
      r.labels.push_back(std::move(e));
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

struct ClassicalOrders {
  std::map<std::string, Int> order;

  const Int& of(const std::string& name) const {
    auto it = order.find(name);
    if (it == order.end()) fail("classical orders: unknown group " + name);
    return it->second;
  }
};

inline ClassicalOrders load_classical_orders(const std::string& path) {
  ClassicalOrders c;
  for (const auto& raw : read_lines(path)) {
    auto line = strip_comment(raw);
    if (line.empty()) continue;
    auto t = split_ws(line);
    if (t.size() != 2) fail(path + ": expected 'name order'");
    c.order[t[0]] = Int(t[1]);
  }
  return c;
}

struct CheckReport {
  std::vector<std::string> passes;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }

  void check(bool cond, const std::string& what) {
    (cond ? passes : failures).push_back(what);
  }

  void merge(const CheckReport& other) {
    passes.insert(passes.end(), other.passes.begin(), other.passes.end());
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  }
};

inline CheckReport check_suborbit_totals(const std::vector<GOrbitRow>& t1,
                                         const std::vector<GOrbitRow>& t3,
                                         const std::vector<FusionRow>& t5,
                                         const std::vector<FusionRow>& t6) {
  CheckReport rep;
  auto totals = [](const std::vector<GOrbitRow>& t) {
    std::pair<int, int> s{0, 0};
    for (const auto& r : t) {
      s.first += r.n_x0;
      s.second += r.n_xyz;
    }
    return s;
  };
  auto [a1, b1] = totals(t1);
  auto [a3, b3] = totals(t3);
  rep.check(a1 == 251 && b1 == 405, "axis orbit table suborbit totals (251, 405)");
  rep.check(a3 == 59 && b3 == 87, "feasible orbit table suborbit totals (59, 87)");
  rep.check(t5.size() == 123, "fused axis orbit table has 123 rows");
  rep.check(t6.size() == 32, "fused feasible orbit table has 32 rows");
  return rep;
}

// Fusion rules per row, following how S <= S3 permutes the three cosets:
//   |S| = 1: three labels, each one suborbit containing two smaller ones;
//   |S| = 2: the plain label holds one N_xyz suborbit, the squared two;
//   |S| = 3: one label, one suborbit of two;  |S| = 6: one of one.
inline CheckReport check_fusion(const std::vector<FusionRow>& fusion,
                                const std::vector<GOrbitRow>& table,
                                const std::string& what) {
  CheckReport rep;
  std::map<std::string, std::pair<int, int>> agg;  // label -> (n_x0, n_xyz)
  long total_x0 = 0, total_xyz = 0;
  for (const auto& r : fusion) {
    bool shape_ok = false;
    switch (r.s_order) {
      case 1:
        shape_ok = r.labels.size() == 3;
        for (const auto& e : r.labels) shape_ok = shape_ok && e.marker == 1;
        break;
      case 2:
        shape_ok = r.labels.size() == 2 &&
                   ((r.labels[0].marker == 1 && r.labels[1].marker == 2) ||
                    (r.labels[0].marker == 2 && r.labels[1].marker == 1));
        break;
      case 3:
      case 6:
        shape_ok = r.labels.size() == 1 && r.labels[0].marker == 3;
        break;
      default: break;
    }
    if (!shape_ok) {
      rep.failures.push_back(what + " row " + std::to_string(r.row) + ": malformed fusion entry");
      continue;
    }
    total_xyz += 6 / r.s_order;
    for (const auto& e : r.labels) {
      int nx0 = 1, nxyz = 0;
      if (r.s_order == 1) nxyz = 2;
      else if (r.s_order == 2) nxyz = e.marker == 2 ? 2 : 1;
      else if (r.s_order == 3) nxyz = 2;
      else nxyz = 1;
      agg[e.label].first += nx0;
      agg[e.label].second += nxyz;
      total_x0 += nx0;
    }
  }
  for (const auto& row : table) {
    auto it = agg.find(row.label);
    if (it == agg.end()) {
      rep.failures.push_back(what + ": label " + row.label + " never appears in the fusion table");
      continue;
    }
    rep.check(it->second.first == row.n_x0 && it->second.second == row.n_xyz,
              what + " label " + row.label + " aggregates to (" +
                  std::to_string(it->second.first) + ", " + std::to_string(it->second.second) +
                  ")");
    agg.erase(it);
  }
  rep.check(agg.empty(), what + ": no fusion labels outside the orbit table");
  long want_x0 = 0, want_xyz = 0;
  for (const auto& row : table) {
    want_x0 += row.n_x0;
    want_xyz += row.n_xyz;
  }
  rep.check(total_x0 == want_x0 && total_xyz == want_xyz,
            what + " fusion totals match the orbit table columns");
  return rep;
}

// Orbit-stabilizer identity per row: size * |C cap Q| * quotient = |G|.
inline CheckReport check_stabilizer_products(const std::vector<GOrbitRow>& rows,
                                             const Int& group_order, const std::string& what) {
  CheckReport rep;
  for (const auto& r : rows) {
    Int lhs = r.size * (Int(1) << r.q_exp) * r.quotient_order;
    rep.check(lhs == group_order, what + " row " + r.label + " stabilizer product");
  }
  return rep;
}

// Recomputes the orders with elementary formulas and compares with the
// embedded constants.
inline CheckReport check_classical_formulas(const ClassicalOrders& c) {
  CheckReport rep;
  auto fact = [](int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  rep.check(c.of("A5") == fact(5) / 2, "|A5| = 5!/2");
  rep.check(c.of("A8") == fact(8) / 2, "|A8| = 8!/2");
  rep.check(c.of("A9") == fact(9) / 2, "|A9| = 9!/2");
  rep.check(c.of("S6") == fact(6), "|S6| = 6!");
  // |Sp6(2)| = 2^9 (2^2-1)(2^4-1)(2^6-1)
  rep.check(c.of("S6(2)") == (Int(1) << 9) * 3 * 15 * 63, "|S6(2)| from the symplectic formula");
  // |U4(2)| = 2^6 (2^2-1)(2^3+1)(2^4-1) / gcd(4, 3)
  rep.check(c.of("U4(2)") == (Int(1) << 6) * 3 * 9 * 15, "|U4(2)| from the unitary formula");
  // |O8+(2)| = 2^12 (2^4-1)(2^2-1)(2^4-1)(2^6-1)
  rep.check(c.of("O8+(2)") == (Int(1) << 12) * 15 * 3 * 15 * 63,
            "|O8+(2)| from the orthogonal formula");
  // |L3(4)| = 4^3 (4^2-1)(4^3-1) / gcd(3, 3)
  rep.check(c.of("L3(4)") == Int(64) * 15 * 63 / 3, "|L3(4)| from the linear formula");
  // |U6(2)| = 2^15 (2^2-1)(2^3+1)(2^4-1)(2^5+1)(2^6-1) / gcd(6, 3)
  rep.check(c.of("U6(2)") == (Int(1) << 15) * 3 * 9 * 15 * 33 * 63 / 3,
            "|U6(2)| from the unitary formula");
  return rep;
}

// Every quotient group listed here is a section of Co1 (or Co2), so its
// order must divide |Co1|.
inline CheckReport check_orders_divide(const ClassicalOrders& c, const Int& co1_order) {
  CheckReport rep;
  for (const auto& [name, order] : c.order)
    rep.check(co1_order % order == 0, "|" + name + "| divides |Co1|");
  return rep;
}

// Cross-module agreement between the embedded table sizes and the sizes
// recovered from a transition matrix.
inline CheckReport check_sizes_match(const std::vector<GOrbitRow>& rows,
                                     const OrbitSizeVector& recovered, const std::string& what) {
  CheckReport rep;
  for (const auto& r : rows)
    rep.check(recovered.size_of(r.label) == r.size, what + " size of " + r.label);
  return rep;
}

}  // namespace axcount
