#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "axcount/common.hpp"
#include "axcount/counting.hpp"

namespace axcount {

struct CertParseError : std::runtime_error {
  int line;
  CertParseError(int line_, const std::string& reason)
      : std::runtime_error("certificate line " + std::to_string(line_) + ": " + reason),
        line(line_) {}
};

// Everything needed to re-derive the Monster and Baby Monster orders:
// the two triality transition matrices with anchors, the claimed orbit
// sizes and totals, and the claimed orders with factorizations.
struct Certificate {
  TransitionMatrix axes;      // 12 x 12, column sum 16584750
  TransitionMatrix feasible;  // 10 x 10, column sum 93150
  std::string axes_anchor_label, feasible_anchor_label;
  Int axes_anchor_size, feasible_anchor_size;
  std::vector<Int> axes_claim_sizes, feasible_claim_sizes;  // aligned with labels
  Int axes_claim_total, feasible_claim_total;
  Int co2, monster, baby;
  std::map<int64_t, int> monster_factors, baby_factors;
};

inline constexpr const char* kCertHeader = "AXCOUNT-CERT v1";
inline constexpr int64_t kAxesColsum = 16584750;   // |G_x0 : N_xyz|
inline constexpr int64_t kFeasibleColsum = 93150;  // |H : H cap N_xyz|

namespace detail {

inline Int parse_int(const std::string& tok, int line) {
  try {
    if (tok.empty() || tok.find_first_not_of("0123456789-") != std::string::npos)
      throw std::exception();
    return Int(tok);
  } catch (...) {
    throw CertParseError(line, "not an integer: '" + tok + "'");
  }
}

inline std::map<int64_t, int> parse_factors(const std::vector<std::string>& toks, int line) {
  std::map<int64_t, int> f;
  for (size_t i = 1; i < toks.size(); ++i) {
    auto caret = toks[i].find('^');
    int64_t p;
    int e = 1;
    try {
      p = std::stoll(toks[i].substr(0, caret));
      if (caret != std::string::npos) e = std::stoi(toks[i].substr(caret + 1));
    } catch (...) {
      throw CertParseError(line, "bad factor token '" + toks[i] + "'");
    }
    if (p < 2 || e < 1 || f.count(p)) throw CertParseError(line, "bad factor " + toks[i]);
    f[p] = e;
  }
  if (f.empty()) throw CertParseError(line, "empty factor list");
  return f;
}

}  // namespace detail

// Strict line-oriented parser; '#' starts a comment, unknown keys are
// rejected, and each section must be complete and in order.
inline Certificate parse_certificate(const std::string& text) {
  Certificate cert;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;

  enum class Sec { Header, Axes, Feasible, Orders, Done };
  Sec sec = Sec::Header;
  TransitionMatrix* mat = nullptr;
  std::vector<Int>* claims = nullptr;
  int rows_seen = 0;
  bool have_colsum = false, have_anchor = false, have_total = false;
  std::vector<bool> claim_seen;
  int have_orders = 0;

  auto finish_matrix_section = [&](int line) {
    if (!mat) return;
    if (mat->labels.empty()) throw CertParseError(line, "section without labels");
    if (rows_seen != mat->dim()) throw CertParseError(line, "matrix row count mismatch");
    if (!have_anchor) throw CertParseError(line, "section without anchor");
    if (!have_total) throw CertParseError(line, "section without claim-total");
    for (int i = 0; i < mat->dim(); ++i)
      if (!claim_seen[i])
        throw CertParseError(line, "missing claim-size for " + mat->labels[i]);
  };

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip_comment(raw);
    if (line.empty()) continue;
    auto toks = split_ws(line);
    const std::string& key = toks[0];

    if (sec == Sec::Header) {
      if (line != kCertHeader) throw CertParseError(lineno, "missing header");
      sec = Sec::Axes;
      continue;
    }
    if (sec == Sec::Done) throw CertParseError(lineno, "content after end");

    if (key == "section") {
      if (toks.size() != 2) throw CertParseError(lineno, "bad section line");
      if (toks[1] == "axes") {
        if (sec != Sec::Axes || mat) throw CertParseError(lineno, "unexpected section axes");
        mat = &cert.axes;
        claims = &cert.axes_claim_sizes;
      } else if (toks[1] == "feasible") {
        if (sec != Sec::Axes || !mat) throw CertParseError(lineno, "unexpected section feasible");
        finish_matrix_section(lineno);
        sec = Sec::Feasible;
        mat = &cert.feasible;
        claims = &cert.feasible_claim_sizes;
        rows_seen = 0;
        have_colsum = have_anchor = have_total = false;
        claim_seen.clear();
      } else if (toks[1] == "orders") {
        if (sec != Sec::Feasible) throw CertParseError(lineno, "unexpected section orders");
        finish_matrix_section(lineno);
        sec = Sec::Orders;
        mat = nullptr;
        claims = nullptr;
      } else {
        throw CertParseError(lineno, "unknown section '" + toks[1] + "'");
      }
      continue;
    }

    if (sec == Sec::Axes || sec == Sec::Feasible) {
      if (!mat) throw CertParseError(lineno, "expected 'section axes'");
      if (key == "labels") {
        if (!mat->labels.empty()) throw CertParseError(lineno, "duplicate labels line");
        if (toks.size() < 2) throw CertParseError(lineno, "empty label list");
        mat->labels.assign(toks.begin() + 1, toks.end());
        mat->entries.assign(mat->dim(), {});
        claims->assign(mat->dim(), Int(0));
        claim_seen.assign(mat->dim(), false);
      } else if (key == "colsum") {
        if (toks.size() != 2 || have_colsum) throw CertParseError(lineno, "bad colsum line");
        mat->colsum = detail::parse_int(toks[1], lineno);
        have_colsum = true;
      } else if (key == "row") {
        if (mat->labels.empty() || !have_colsum)
          throw CertParseError(lineno, "row before labels/colsum");
        if (rows_seen >= mat->dim()) throw CertParseError(lineno, "too many rows");
        if (static_cast<int>(toks.size()) != mat->dim() + 2)
          throw CertParseError(lineno, "row length does not match the label list");
        if (toks[1] != mat->labels[rows_seen])
          throw CertParseError(lineno, "rows must appear in label order");
        std::vector<Int> row;
        for (int j = 0; j < mat->dim(); ++j)
          row.push_back(toks[2 + j] == "." ? Int(0) : detail::parse_int(toks[2 + j], lineno));
        mat->entries[rows_seen] = std::move(row);
        ++rows_seen;
      } else if (key == "anchor") {
        if (toks.size() != 3 || have_anchor) throw CertParseError(lineno, "bad anchor line");
        if (mat->index_of(toks[1]) < 0) throw CertParseError(lineno, "anchor label unknown");
        if (sec == Sec::Axes) {
          cert.axes_anchor_label = toks[1];
          cert.axes_anchor_size = detail::parse_int(toks[2], lineno);
        } else {
          cert.feasible_anchor_label = toks[1];
          cert.feasible_anchor_size = detail::parse_int(toks[2], lineno);
        }
        have_anchor = true;
      } else if (key == "claim-size") {
        if (toks.size() != 3) throw CertParseError(lineno, "bad claim-size line");
        int i = mat->index_of(toks[1]);
        if (i < 0) throw CertParseError(lineno, "claim-size label unknown");
        if (claim_seen[i]) throw CertParseError(lineno, "duplicate claim-size " + toks[1]);
        (*claims)[i] = detail::parse_int(toks[2], lineno);
        claim_seen[i] = true;
      } else if (key == "claim-total") {
        if (toks.size() != 2 || have_total) throw CertParseError(lineno, "bad claim-total line");
        (sec == Sec::Axes ? cert.axes_claim_total : cert.feasible_claim_total) =
            detail::parse_int(toks[1], lineno);
        have_total = true;
      } else {
        throw CertParseError(lineno, "unknown key '" + key + "'");
      }
      continue;
    }

    // orders section
    if (key == "co2" && toks.size() == 2) {
      cert.co2 = detail::parse_int(toks[1], lineno);
      have_orders |= 1;
    } else if (key == "monster" && toks.size() == 2) {
      cert.monster = detail::parse_int(toks[1], lineno);
      have_orders |= 2;
    } else if (key == "monster-factors") {
      cert.monster_factors = detail::parse_factors(toks, lineno);
      have_orders |= 4;
    } else if (key == "baby" && toks.size() == 2) {
      cert.baby = detail::parse_int(toks[1], lineno);
      have_orders |= 8;
    } else if (key == "baby-factors") {
      cert.baby_factors = detail::parse_factors(toks, lineno);
      have_orders |= 16;
    } else if (key == "end" && toks.size() == 1) {
      if (have_orders != 31) throw CertParseError(lineno, "orders section incomplete");
      sec = Sec::Done;
    } else {
      throw CertParseError(lineno, "unknown key '" + key + "'");
    }
  }
  if (sec != Sec::Done) throw CertParseError(lineno + 1, "missing end");
  return cert;
}

inline Certificate parse_certificate_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CertParseError(0, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_certificate(ss.str());
}

inline std::string serialize_certificate(const Certificate& cert) {
  std::ostringstream out;
  out << kCertHeader << "\n";
  out << "# Axis-counting certificate: triality transition data and claimed orders.\n";
  out << "# Scope: the linear-algebra-verifiable content only; no group-element words.\n";
  auto section = [&](const char* name, const TransitionMatrix& m, const std::string& anchor_label,
                     const Int& anchor_size, const std::vector<Int>& claims, const Int& total) {
    out << "section " << name << "\n";
    out << "labels";
    for (const auto& l : m.labels) out << ' ' << l;
    out << "\ncolsum " << m.colsum << "\n";
    for (int i = 0; i < m.dim(); ++i) {
      out << "row " << m.labels[i];
      for (int j = 0; j < m.dim(); ++j) {
        if (m.entries[i][j] == 0) out << " .";
        else out << ' ' << m.entries[i][j];
      }
      out << "\n";
    }
    out << "anchor " << anchor_label << ' ' << anchor_size << "\n";
    for (int i = 0; i < m.dim(); ++i)
      out << "claim-size " << m.labels[i] << ' ' << claims[i] << "\n";
    out << "claim-total " << total << "\n";
  };
  section("axes", cert.axes, cert.axes_anchor_label, cert.axes_anchor_size,
          cert.axes_claim_sizes, cert.axes_claim_total);
  section("feasible", cert.feasible, cert.feasible_anchor_label, cert.feasible_anchor_size,
          cert.feasible_claim_sizes, cert.feasible_claim_total);
  out << "section orders\n";
  out << "co2 " << cert.co2 << "\n";
  out << "monster " << cert.monster << "\n";
  auto factors = [&](const char* key, const std::map<int64_t, int>& f) {
    out << key;
    for (const auto& [p, e] : f) {
      out << ' ' << p;
      if (e > 1) out << '^' << e;
    }
    out << "\n";
  };
  factors("monster-factors", cert.monster_factors);
  out << "baby " << cert.baby << "\n";
  factors("baby-factors", cert.baby_factors);
  out << "end\n";
  return out.str();
}

struct VerificationReport {
  struct Check {
    std::string name;
    bool pass;
    std::string detail;
  };
  std::vector<Check> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Re-derives everything the certificate claims.  Failures are report
// entries, never exceptions.
inline VerificationReport verify_certificate(const Certificate& cert,
                                             const std::optional<Int>& co1_order_from_chain = {}) {
  VerificationReport rep;
  auto add = [&](const std::string& name, bool pass, const std::string& detail = "") {
    rep.checks.push_back({name, pass, detail});
  };

  auto check_colsums = [&](const char* name, const TransitionMatrix& m, int64_t expect) {
    try {
      m.check_column_sums();
      if (m.colsum != expect)
        add(std::string(name) + "-column-sums", false,
            "declared column sum " + m.colsum.str() + " != " + std::to_string(expect));
      else
        add(std::string(name) + "-column-sums", true);
    } catch (const std::exception& e) {
      add(std::string(name) + "-column-sums", false, e.what());
    }
  };
  check_colsums("axes", cert.axes, kAxesColsum);
  check_colsums("feasible", cert.feasible, kFeasibleColsum);

  auto check_regular = [&](const char* name, const TransitionMatrix& m) {
    try {
      int k = regularity_index(m);
      add(std::string(name) + "-regular", true, "regularity index " + std::to_string(k));
    } catch (const std::exception& e) {
      add(std::string(name) + "-regular", false, e.what());
    }
  };
  check_regular("axes", cert.axes);
  check_regular("feasible", cert.feasible);

  std::optional<OrbitSizeVector> axes_sizes, feasible_sizes;
  auto recover = [&](const char* name, const TransitionMatrix& m, const std::string& anchor_label,
                     const Int& anchor_size, const std::vector<Int>& claims,
                     const Int& claim_total) -> std::optional<OrbitSizeVector> {
    try {
      OrbitSizeVector v = orbit_sizes(m, anchor_label, anchor_size);
      bool match = true;
      for (int i = 0; i < m.dim(); ++i) match = match && v.sizes[i] == claims[i];
      add(std::string(name) + "-sizes", match,
          match ? "" : "recovered sizes differ from the claimed sizes");
      add(std::string(name) + "-total", v.total == claim_total,
          v.total == claim_total ? "" : "recovered total " + v.total.str());
      return v;
    } catch (const std::exception& e) {
      add(std::string(name) + "-sizes", false, e.what());
      add(std::string(name) + "-total", false, "size recovery failed");
      return std::nullopt;
    }
  };
  axes_sizes = recover("axes", cert.axes, cert.axes_anchor_label, cert.axes_anchor_size,
                       cert.axes_claim_sizes, cert.axes_claim_total);
  feasible_sizes = recover("feasible", cert.feasible, cert.feasible_anchor_label,
                           cert.feasible_anchor_size, cert.feasible_claim_sizes,
                           cert.feasible_claim_total);

  if (co1_order_from_chain) {
    bool ok = *co1_order_from_chain % 98280 == 0 && cert.co2 == *co1_order_from_chain / 98280;
    add("co2-chain-consistency", ok,
        ok ? "" : "co2 claim does not equal the chain order divided by 98280");
  }

  if (axes_sizes && feasible_sizes) {
    Int m = monster_order(axes_sizes->total, feasible_sizes->total, cert.co2);
    add("monster-order", m == cert.monster, m == cert.monster ? "" : "recomputed " + m.str());
    try {
      Int b = baby_monster_order(feasible_sizes->total, cert.co2);
      add("baby-order", b == cert.baby, b == cert.baby ? "" : "recomputed " + b.str());
    } catch (const std::exception& e) {
      add("baby-order", false, e.what());
    }
  } else {
    add("monster-order", false, "orbit sizes unavailable");
    add("baby-order", false, "orbit sizes unavailable");
  }

  auto check_factors = [&](const char* name, const Int& n, const std::map<int64_t, int>& claimed) {
    try {
      add(name, factorize(n) == claimed, "");
    } catch (const std::exception& e) {
      add(name, false, e.what());
    }
  };
  check_factors("monster-factorization", cert.monster, cert.monster_factors);
  check_factors("baby-factorization", cert.baby, cert.baby_factors);

  auto syl = sylow11_check();
  add("sylow11", !syl.integral && syl.numerator == 1814 && syl.denominator == 11,
      syl.numerator.str() + "/" + syl.denominator.str());

  return rep;
}

}  // namespace axcount
