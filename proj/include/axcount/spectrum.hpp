#pragma once

#include <cstdint>

#include "axcount/leech.hpp"

namespace axcount {

// Census of the short classes around a fixed short class r: inner products
// of minimal representatives bucketed by absolute value and by the parity
// <omega, s>, plus the count of unordered pairs {s, t} with s + t = r.
struct ShortProfile {
  uint32_t r = 0;
  uint64_t ip1[2] = {0, 0};    // |<r,s>| = 1, indexed [even, odd]
  uint64_t ip0[2] = {0, 0};    // <r,s> = 0
  uint64_t pairs[2] = {0, 0};  // {s,t} with s + t = r in Lambda/2Lambda
};

inline ShortProfile short_vector_profile(const Lattice& lat, const ShortTable& st, uint32_t r) {
  int ri = st.index_of(r);
  if (ri < 0) fail("short_vector_profile: r is not short");
  if (lat.class_bilinear(lat.omega, r) != 0)
    fail("short_vector_profile: <omega, r> must be even");

  const int8_t* xr = st.reps[ri].data();
  ShortProfile p;
  p.r = r;
  uint64_t ip4 = 0;
  for (size_t k = 0; k < st.classes.size(); ++k) {
    uint32_t s = st.classes[k];
    int64_t dot = 0;
    for (int i = 0; i < 24; ++i) dot += int64_t(xr[i]) * st.reps[k][i];
    if (dot % 8) fail("short_vector_profile: inner product not divisible by 8");
    int64_t ip = dot / 8;
    if (ip < 0) ip = -ip;
    int par = lat.class_bilinear(lat.omega, s);
    bool partner_short = st.index_of(s ^ r) >= 0;
    if (s == r) {
      if (ip != 4) fail("short_vector_profile: |<r,r>| != 4");
      ++ip4;
      continue;
    }
    switch (ip) {
      case 0: ++p.ip0[par]; break;
      case 1: ++p.ip1[par]; break;
      case 2: ++p.pairs[par]; break;  // counted once per class; halved below
      default: fail("short_vector_profile: impossible inner product");
    }
    // scalar product +-2 exactly when r+s is again short
    if ((ip == 2) != partner_short)
      fail("short_vector_profile: rst-pair structure violated");
  }
  if (ip4 != 1) fail("short_vector_profile: |ip| = 4 off the diagonal");
  if (p.pairs[0] % 2 || p.pairs[1] % 2) fail("short_vector_profile: odd pair total");
  p.pairs[0] /= 2;
  p.pairs[1] /= 2;
  if (1 + 2 * (p.pairs[0] + p.pairs[1]) + p.ip1[0] + p.ip1[1] + p.ip0[0] + p.ip0[1] !=
      st.classes.size())
    fail("short_vector_profile: bucket totals do not cover the short classes");
  return p;
}

// Eigenspace dimensions of the adjoint of an axis on the 196884-dimensional
// algebra, for the eigenvalues 16, 0, 4, 1/2.
struct AdSpectrum {
  uint64_t dim16 = 0, dim0 = 0, dim4 = 0, dim_half = 0;
  uint64_t total() const { return dim16 + dim0 + dim4 + dim_half; }
};

// Assembles the dimensions from the profile: the 300_x block contributes
// the fixed dimensions 1, 1 + 276 and 23; parity-odd short classes sit in
// one of three isomorphic constituents and are counted three times.
inline AdSpectrum eigenspace_dims(const ShortProfile& p) {
  if (1 + 2 * (p.pairs[0] + p.pairs[1]) + p.ip1[0] + p.ip1[1] + p.ip0[0] + p.ip0[1] !=
      kExpectedTypeCounts[0])
    fail("eigenspace_dims: profile buckets do not cover the short classes");
  AdSpectrum d;
  d.dim16 = 1;
  d.dim0 = (1 + 276 + p.pairs[0] + p.ip0[0]) + 3 * (p.pairs[1] + p.ip0[1]);
  d.dim4 = (23 + p.pairs[0]) + 3 * p.pairs[1];
  d.dim_half = p.ip1[0] + 3 * p.ip1[1];
  return d;
}

}  // namespace axcount
