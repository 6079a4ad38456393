#pragma once

// Structure-constant file format for Lie rings.
//
//   line 1: q d n          (characteristic, field degree, dimension)
//   line 2: m_0 ... m_d    (modulus coefficients, ascending, monic)
//   then one line "i j k value" per nonzero structure constant, 0-based,
//   sorted lexicographically by (i, j, k).
//
// The modulus must be the canonical one for GF(q^d) (first monic
// irreducible by ascending coefficient encoding); writing then reading,
// or reading then writing, reproduces the bytes exactly.

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "finalg/group_io.hpp"
#include "finalg/lie.hpp"

namespace finalg {

inline LieRing read_lie_ring(std::istream& in) {
  long long q = 0;
  int d = 0, n = 0;
  if (!(in >> q >> d >> n)) throw format_error("missing header");
  if (n < 0) throw format_error("negative dimension");
  CoefficientField F = make_field(q, d);
  for (int i = 0; i <= d; ++i) {
    int m = 0;
    if (!(in >> m)) throw format_error("missing modulus coefficient");
    if (m != F.modulus[i]) throw format_error("modulus is not canonical");
  }
  LieRing L = make_lie_ring(std::move(F), n);
  int prev_i = -1, prev_j = -1, prev_k = -1;
  int i = 0, j = 0, k = 0, v = 0;
  while (in >> i) {
    if (!(in >> j >> k >> v)) throw format_error("truncated structure constant");
    if (i < 0 || i >= n || j < 0 || j >= n || k < 0 || k >= n)
      throw format_error("structure constant index out of range");
    if (v <= 0 || v >= L.field.size)
      throw format_error("structure constant value out of range");
    if (std::tie(i, j, k) <= std::tie(prev_i, prev_j, prev_k))
      throw format_error("structure constants out of order");
    prev_i = i; prev_j = j; prev_k = k;
    L.sc(i, j, k) = v;
  }
  if (!in.eof()) throw format_error("trailing garbage");
  validate_lie_ring(L);
  return L;
}

inline LieRing read_lie_ring(const std::string& text) {
  std::istringstream in(text);
  return read_lie_ring(in);
}

inline void write_lie_ring(std::ostream& out, const LieRing& L) {
  out << L.field.q << ' ' << L.field.d << ' ' << L.dim << '\n';
  for (int i = 0; i <= L.field.d; ++i)
    out << L.field.modulus[i] << (i == L.field.d ? '\n' : ' ');
  for (int i = 0; i < L.dim; ++i)
    for (int j = 0; j < L.dim; ++j)
      for (int k = 0; k < L.dim; ++k)
        if (L.sc(i, j, k))
          out << i << ' ' << j << ' ' << k << ' ' << L.sc(i, j, k) << '\n';
}

inline std::string write_lie_ring(const LieRing& L) {
  std::ostringstream out;
  write_lie_ring(out, L);
  return out.str();
}

}  // namespace finalg
