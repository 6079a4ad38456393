#pragma once

// Finite-dimensional Lie rings over a CoefficientField, given by structure
// constants on a fixed basis, plus the associated graded Lie ring of the
// lower central series of a finite q-group.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "finalg/field.hpp"
#include "finalg/linalg.hpp"
#include "finalg/structure.hpp"

namespace finalg {

struct lie_error : field_error {
  using field_error::field_error;
};

struct antisymmetry_fail : lie_error {
  int i, j;
  antisymmetry_fail(int i_, int j_)
      : lie_error("bracket is not antisymmetric on basis pair (" +
                  std::to_string(i_) + ", " + std::to_string(j_) + ")"),
        i(i_), j(j_) {}
};

struct jacobi_fail : lie_error {
  int i, j, k;
  jacobi_fail(int i_, int j_, int k_)
      : lie_error("Jacobi identity fails on basis triple (" +
                  std::to_string(i_) + ", " + std::to_string(j_) + ", " +
                  std::to_string(k_) + ")"),
        i(i_), j(j_), k(k_) {}
};

struct not_a_subalgebra : lie_error {
  not_a_subalgebra() : lie_error("subspace is not closed under the bracket") {}
};

struct mixed_exponent_layer : lie_error {
  int layer;
  explicit mixed_exponent_layer(int layer_)
      : lie_error("central-series layer " + std::to_string(layer_) +
                  " is not elementary abelian"),
        layer(layer_) {}
};

struct LieRing {
  CoefficientField field;
  int dim = 0;
  std::string name;
  std::vector<std::string> labels;
  std::vector<int> c;       // structure constants, [e_i, e_j] = sum_k c(i,j,k) e_k
  std::vector<int> weight;  // grading weight per basis vector; empty if none

  int sc(int i, int j, int k) const {
    return c[(static_cast<size_t>(i) * dim + j) * dim + k];
  }
  int& sc(int i, int j, int k) {
    return c[(static_cast<size_t>(i) * dim + j) * dim + k];
  }
  std::vector<int> bracket_basis(int i, int j) const {
    std::vector<int> v(dim);
    for (int k = 0; k < dim; ++k) v[k] = sc(i, j, k);
    return v;
  }
};

inline LieRing make_lie_ring(CoefficientField F, int dim,
                             std::string name = "") {
  LieRing L;
  L.field = std::move(F);
  L.dim = dim;
  L.name = std::move(name);
  L.labels.reserve(dim);
  for (int i = 0; i < dim; ++i) L.labels.push_back("e" + std::to_string(i));
  L.c.assign(static_cast<size_t>(dim) * dim * dim, 0);
  return L;
}

/// Sets one term of [e_i, e_j] and the antisymmetric counterpart.
inline void add_bracket_term(LieRing& L, int i, int j, int k, int value) {
  L.sc(i, j, k) = value;
  L.sc(j, i, k) = L.field.neg(value);
}

inline std::vector<int> bracket_vec(const LieRing& L, const std::vector<int>& x,
                                    const std::vector<int>& y) {
  std::vector<int> out(L.dim, 0);
  for (int i = 0; i < L.dim; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < L.dim; ++j) {
      if (y[j] == 0) continue;
      int f = L.field.mul(x[i], y[j]);
      for (int k = 0; k < L.dim; ++k) {
        int s = L.sc(i, j, k);
        if (s) out[k] = L.field.add(out[k], L.field.mul(f, s));
      }
    }
  }
  return out;
}

inline void validate_lie_ring(const LieRing& L) {
  for (int i = 0; i < L.dim; ++i)
    for (int k = 0; k < L.dim; ++k)
      if (L.sc(i, i, k)) throw antisymmetry_fail(i, i);
  for (int i = 0; i < L.dim; ++i)
    for (int j = i + 1; j < L.dim; ++j)
      for (int k = 0; k < L.dim; ++k)
        if (L.sc(i, j, k) != L.field.neg(L.sc(j, i, k)))
          throw antisymmetry_fail(i, j);
  std::vector<int> ei(L.dim, 0), ej(L.dim, 0), ek(L.dim, 0);
  for (int i = 0; i < L.dim; ++i)
    for (int j = i + 1; j < L.dim; ++j)
      for (int k = j + 1; k < L.dim; ++k) {
        std::fill(ei.begin(), ei.end(), 0); ei[i] = 1;
        std::fill(ej.begin(), ej.end(), 0); ej[j] = 1;
        std::fill(ek.begin(), ek.end(), 0); ek[k] = 1;
        std::vector<int> s1 = bracket_vec(L, L.bracket_basis(i, j), ek);
        std::vector<int> s2 = bracket_vec(L, L.bracket_basis(j, k), ei);
        std::vector<int> s3 = bracket_vec(L, L.bracket_basis(k, i), ej);
        for (int m = 0; m < L.dim; ++m)
          if (L.field.add(L.field.add(s1[m], s2[m]), s3[m]))
            throw jacobi_fail(i, j, k);
      }
}

/// Span of all brackets [u, w] with u a row of U, w a row of W.
inline Mat span_bracket(const LieRing& L, const Mat& U, const Mat& W) {
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < U.rows; ++i)
    for (int j = 0; j < W.rows; ++j)
      rows.push_back(bracket_vec(L, U.row(i), W.row(j)));
  return subspace_span(L.field, rows, L.dim);
}

inline Mat full_space(const LieRing& L) { return Mat::identity(L.dim); }

/// Terms of the lower central series, ending at the first repeated term.
inline std::vector<Mat> lie_lower_central_series(const LieRing& L) {
  std::vector<Mat> series{full_space(L)};
  for (;;) {
    Mat next = span_bracket(L, series.back(), series.front());
    if (next == series.back()) break;
    series.push_back(next);
    if (next.rows == 0) break;
  }
  return series;
}

inline std::optional<int> lie_class(const LieRing& L) {
  std::vector<Mat> s = lie_lower_central_series(L);
  if (s.back().rows != 0) return std::nullopt;
  return static_cast<int>(s.size()) - 1;
}

inline std::vector<Mat> lie_derived_series(const LieRing& L) {
  std::vector<Mat> series{full_space(L)};
  for (;;) {
    Mat next = span_bracket(L, series.back(), series.back());
    if (next == series.back()) break;
    series.push_back(next);
    if (next.rows == 0) break;
  }
  return series;
}

inline std::optional<int> lie_derived_length(const LieRing& L) {
  std::vector<Mat> s = lie_derived_series(L);
  if (s.back().rows != 0) return std::nullopt;
  return static_cast<int>(s.size()) - 1;
}

inline bool is_lie_abelian(const LieRing& L) {
  for (int s : L.c)
    if (s) return false;
  return true;
}

/// Nilpotency class of a bracket-closed subspace, as a Lie ring in its own
/// right. Throws not_a_subalgebra if the subspace is not closed.
inline std::optional<int> lie_restricted_class(const LieRing& L, const Mat& U0) {
  Mat U = rref(L.field, U0);
  for (int i = 0; i < U.rows; ++i)
    for (int j = 0; j < U.rows; ++j)
      if (!subspace_contains(L.field, U, bracket_vec(L, U.row(i), U.row(j))))
        throw not_a_subalgebra();
  std::vector<Mat> series{U};
  for (;;) {
    if (series.back().rows == 0) return static_cast<int>(series.size()) - 1;
    Mat next = span_bracket(L, series.back(), U);
    if (next == series.back()) return std::nullopt;
    series.push_back(next);
  }
}

/// Common fixed space of a family of matrices acting on column vectors,
/// returned as a row basis. An empty family fixes everything.
inline Mat fixed_space(const CoefficientField& F, int dim,
                       const std::vector<Mat>& mats) {
  Mat stacked(0, dim);
  Mat I = Mat::identity(dim);
  for (const Mat& M : mats) stacked = stack_rows(stacked, mat_sub(F, M, I));
  return kernel(F, stacked);
}

inline bool is_lie_automorphism(const LieRing& L, const Mat& M) {
  if (M.rows != L.dim || M.cols != L.dim) return false;
  if (!inverse(L.field, M)) return false;
  for (int i = 0; i < L.dim; ++i)
    for (int j = i + 1; j < L.dim; ++j) {
      std::vector<int> mi(L.dim), mj(L.dim);
      for (int r = 0; r < L.dim; ++r) { mi[r] = M.at(r, i); mj[r] = M.at(r, j); }
      if (bracket_vec(L, mi, mj) != mat_vec(L.field, M, L.bracket_basis(i, j)))
        return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Associated graded Lie ring of the lower central series.
//
// For a finite q-group G with lower central series G = g_1 > g_2 > ... the
// layer g_i/g_{i+1} must be elementary abelian; the Lie ring is the direct
// sum of the layers over GF(q) with the bracket induced by the group
// commutator. Basis vectors are cosets of greedily chosen generators, taken
// in increasing element order, so the construction is deterministic.
// ---------------------------------------------------------------------------

namespace detail {

struct GradedLayer {
  SubgroupGroup part;                          // g_i as a standalone group
  std::vector<int> parent_pos;                 // parent index -> part index
  Quotient quot;                               // part / g_{i+1}
  std::vector<int> reps;                       // parent indices of generators
  std::vector<std::vector<int>> coset_coords;  // coset id -> digit vector

  std::vector<int> coords_of(int parent_elem) const {
    return coset_coords[quot.proj.img[parent_pos[parent_elem]]];
  }
};

}  // namespace detail

struct AssociatedLieRing {
  LieRing ring;
  long long q = 0;
  int group_class = 0;
  std::vector<Subgroup> gamma;  // lower central series of the source group
  std::vector<detail::GradedLayer> layers;
  std::vector<int> weight_offset;  // ring index of first basis vector per layer
};

inline AssociatedLieRing associated_lie_ring(const FiniteGroup& G) {
  std::vector<Subgroup> series = lower_central_series(G);
  if (series.back().order() != 1)
    throw not_nilpotent("associated Lie ring of " + G.name);
  if (G.n == 1) throw invalid_spec("associated Lie ring of the trivial group");
  long long q = factorize(G.n)[0].first;

  AssociatedLieRing A;
  A.q = q;
  A.group_class = static_cast<int>(series.size()) - 1;
  A.gamma = std::move(series);

  int dim = 0;
  for (int k = 0; k < A.group_class; ++k) {
    detail::GradedLayer layer{subgroup_as_group(A.gamma[k]),
                              std::vector<int>(G.n, -1),
                              Quotient{},
                              {},
                              {}};
    for (size_t s = 0; s < layer.part.to_parent.size(); ++s)
      layer.parent_pos[layer.part.to_parent[s]] = static_cast<int>(s);
    std::vector<int> next_inside;
    for (int e : A.gamma[k + 1].elems) next_inside.push_back(layer.parent_pos[e]);
    layer.quot = quotient_group(layer.part.group,
                                make_subgroup(layer.part.group, next_inside));
    const FiniteGroup& Q = layer.quot.group;
    if (exponent(Q) != q || !is_abelian(Q)) throw mixed_exponent_layer(k + 1);

    std::vector<int> gen_cosets;
    Subgroup have = trivial_subgroup(Q);
    for (int s = 1; s < layer.part.group.n && have.order() < Q.n; ++s) {
      int c = layer.quot.proj.img[s];
      if (have.contains(c)) continue;
      gen_cosets.push_back(c);
      layer.reps.push_back(layer.part.to_parent[s]);
      have = subgroup_generated(Q, gen_cosets);
    }
    int d = static_cast<int>(layer.reps.size());

    layer.coset_coords.assign(Q.n, {});
    std::vector<bool> seen(Q.n, false);
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= q;
    for (long long t = 0; t < count; ++t) {
      std::vector<int> digits(d);
      long long x = t;
      int elt = 0;
      for (int m = 0; m < d; ++m) {
        digits[m] = static_cast<int>(x % q);
        x /= q;
        elt = Q.op(elt, Q.pow(gen_cosets[m], digits[m]));
      }
      if (seen[elt])
        throw std::logic_error("layer coordinates are not bijective");
      seen[elt] = true;
      layer.coset_coords[elt] = std::move(digits);
    }

    A.weight_offset.push_back(dim);
    dim += d;
    A.layers.push_back(std::move(layer));
  }

  A.ring = make_lie_ring(make_field(q, 1), dim,
                         G.name.empty() ? "" : "L(" + G.name + ")");
  A.ring.labels.clear();
  A.ring.weight.assign(dim, 0);
  for (int k = 0; k < A.group_class; ++k)
    for (size_t a = 0; a < A.layers[k].reps.size(); ++a) {
      A.ring.labels.push_back("g" + std::to_string(k + 1) + "_" +
                              std::to_string(a + 1));
      A.ring.weight[A.weight_offset[k] + a] = k + 1;
    }

  for (int k1 = 0; k1 < A.group_class; ++k1)
    for (int k2 = 0; k2 < A.group_class; ++k2)
      for (size_t a = 0; a < A.layers[k1].reps.size(); ++a)
        for (size_t b = 0; b < A.layers[k2].reps.size(); ++b) {
          int w = G.comm(A.layers[k1].reps[a], A.layers[k2].reps[b]);
          int i = A.weight_offset[k1] + static_cast<int>(a);
          int j = A.weight_offset[k2] + static_cast<int>(b);
          int k3 = k1 + k2 + 2;  // weight of the bracket
          if (k3 > A.group_class) {
            if (w != 0)
              throw std::logic_error("commutator escapes the central series");
            continue;
          }
          if (!A.gamma[k3 - 1].contains(w))
            throw std::logic_error("commutator escapes the central series");
          std::vector<int> coords = A.layers[k3 - 1].coords_of(w);
          for (size_t m = 0; m < coords.size(); ++m)
            A.ring.sc(i, j, A.weight_offset[k3 - 1] + static_cast<int>(m)) =
                coords[m];
        }

  validate_lie_ring(A.ring);
  return A;
}

/// Matrix of the map a group automorphism induces on the associated graded
/// Lie ring. The permutation must fix each central-series term setwise.
inline Mat induced_lie_automorphism(const AssociatedLieRing& A,
                                    const std::vector<int>& perm) {
  Mat M(A.ring.dim, A.ring.dim);
  for (size_t k = 0; k < A.layers.size(); ++k)
    for (size_t a = 0; a < A.layers[k].reps.size(); ++a) {
      int y = perm[A.layers[k].reps[a]];
      if (!A.gamma[k].contains(y))
        throw group_error("map does not preserve the lower central series");
      std::vector<int> coords = A.layers[k].coords_of(y);
      for (size_t m = 0; m < coords.size(); ++m)
        M.at(A.weight_offset[k] + static_cast<int>(m),
             A.weight_offset[k] + static_cast<int>(a)) = coords[m];
    }
  if (!is_lie_automorphism(A.ring, M))
    throw group_error("induced map is not a Lie ring automorphism");
  return M;
}

// ---------------------------------------------------------------------------
// Scalar extension. For a Lie ring over GF(q) and a prime p coprime to q,
// the constants are reused verbatim over GF(q^d) with d the order of q
// mod p, the smallest extension containing a primitive p-th root of unity.
// Prime-subfield elements keep their indices, so copying is exact.
// ---------------------------------------------------------------------------

struct ExtendedScalars {
  LieRing ring;
  int omega = 0;  // primitive p-th root of unity
};

inline ExtendedScalars extend_scalars(const LieRing& L, long long p) {
  if (L.field.d != 1)
    throw invalid_spec("scalar extension starts from a prime field");
  if (!is_prime(p)) throw invalid_spec("extension order must be prime");
  if (p == L.field.q)
    throw invalid_spec("extension order equals the field characteristic");
  long long d = multiplicative_order(L.field.q % p, p);
  ExtendedScalars out;
  out.ring = L;
  out.ring.field = make_field(L.field.q, static_cast<int>(d));
  if (!L.name.empty()) out.ring.name = L.name + " (extended)";
  out.omega = root_of_unity(out.ring.field, p);
  return out;
}

}  // namespace finalg
