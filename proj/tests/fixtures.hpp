#pragma once

#include "axcount/conway.hpp"
#include "axcount/golay.hpp"
#include "axcount/leech.hpp"

namespace axcount::testing {

inline const GolayCode& code() {
  static GolayCode c = build_golay();
  return c;
}

inline const Lattice& lattice() {
  static Lattice l = build_lattice(code());
  return l;
}

inline const std::vector<M24Element>& m24() {
  static std::vector<M24Element> g = m24_generators(code());
  return g;
}

inline const ShortTable& short_table() {
  static ShortTable st = build_short_table(lattice());
  return st;
}

inline const std::vector<IntegralAutomorphism>& co0() {
  static std::vector<IntegralAutomorphism> g = co0_generators(lattice(), m24());
  return g;
}

// Standard short class: (0, 0, 4, -4, 0...), the class of the fixed 2A
// involution used throughout.
inline uint32_t beta() {
  static uint32_t b = [] {
    int8_t v[24] = {};
    v[2] = 4;
    v[3] = -4;
    return lattice().to_leech2(v);
  }();
  return b;
}

}  // namespace axcount::testing
