#pragma once

// Independent reference computations for the test suite.  Everything here
// works from first principles (multiplication tables, structure constants,
// raw permutations) and deliberately avoids the library's series, span, and
// search routines, so a bug cannot hide by agreeing with itself.

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <vector>

#include "finalg/field.hpp"
#include "finalg/group.hpp"
#include "finalg/lie.hpp"

namespace oracle {

// Nilpotency class via the ascending central series, built element by
// element: Z_{i+1}/Z_i = Z(G/Z_i), i.e. g lands in Z_{i+1} exactly when
// every commutator [g,x] already lies in Z_i.
inline std::optional<int> nilpotency_class(const finalg::FiniteGroup& G) {
  std::vector<char> in(G.n, 0);
  in[0] = 1;
  int members = 1;
  int cls = 0;
  while (members < G.n) {
    bool grew = false;
    std::vector<char> next = in;
    for (int g = 0; g < G.n; ++g) {
      if (in[g]) continue;
      bool central = true;
      for (int x = 0; x < G.n && central; ++x) central = in[G.comm(g, x)];
      if (central) {
        next[g] = 1;
        ++members;
        grew = true;
      }
    }
    if (!grew) return std::nullopt;
    in = std::move(next);
    ++cls;
  }
  return cls;
}

// Exponent as an lcm of element orders, each order found by repeated
// multiplication.
inline long long exponent(const finalg::FiniteGroup& G) {
  long long e = 1;
  for (int x = 1; x < G.n; ++x) {
    long long ord = 1;
    int y = x;
    while (y != 0) {
      y = G.op(y, x);
      ++ord;
    }
    e = std::lcm(e, ord);
  }
  return e;
}

// The alternating group on five points, assembled from raw permutations.
// Order 60, simple, the smallest non-solvable group.
inline finalg::FiniteGroup alternating5() {
  std::vector<std::array<int, 5>> elems;
  std::array<int, 5> p{0, 1, 2, 3, 4};
  do {
    int inversions = 0;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j)
        if (p[i] > p[j]) ++inversions;
    if (inversions % 2 == 0) elems.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  // Identity must sit at index 0; the lexicographic scan already puts it there.
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  auto index_of = [&](const std::array<int, 5>& q) {
    return static_cast<int>(
        std::lower_bound(elems.begin(), elems.end(), q) - elems.begin());
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::array<int, 5> comp;
      for (int t = 0; t < 5; ++t) comp[t] = elems[j][elems[i][t]];
      rows[i][j] = index_of(comp);
    }
  return finalg::validate_group(rows, "A5");
}

// Row echelon rank over the given field, written out by hand so the Lie
// oracles do not route through the library's linear algebra.
inline int rank_of(const finalg::CoefficientField& F,
                   std::vector<std::vector<int>> rows) {
  const int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    int pivot = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][c] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[r], rows[pivot]);
    const int s = F.inv(rows[r][c]);
    for (int j = 0; j < cols; ++j) rows[r][j] = F.mul(s, rows[r][j]);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const int t = rows[i][c];
      for (int j = 0; j < cols; ++j)
        rows[i][j] = F.sub(rows[i][j], F.mul(t, rows[r][j]));
    }
    ++r;
  }
  return r;
}

// Bracket of coordinate vectors, expanded directly from the structure
// constants.
inline std::vector<int> bracket(const finalg::LieRing& L,
                                const std::vector<int>& x,
                                const std::vector<int>& y) {
  std::vector<int> out(L.dim, 0);
  for (int i = 0; i < L.dim; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < L.dim; ++j) {
      if (y[j] == 0) continue;
      const int s = L.field.mul(x[i], y[j]);
      for (int k = 0; k < L.dim; ++k)
        out[k] = L.field.add(out[k], L.field.mul(s, L.sc(i, j, k)));
    }
  }
  return out;
}

// Nilpotency class of a Lie ring by saturating gamma_{k+1} = [gamma_k, L]:
// spans are carried as explicit generating lists and compared by rank.
inline std::optional<int> lie_class(const finalg::LieRing& L) {
  std::vector<std::vector<int>> gamma;
  for (int i = 0; i < L.dim; ++i) {
    std::vector<int> e(L.dim, 0);
    e[i] = 1;
    gamma.push_back(e);
  }
  int cls = 0;
  int prev_rank = rank_of(L.field, gamma);
  while (prev_rank > 0) {
    if (cls > L.dim) return std::nullopt;
    std::vector<std::vector<int>> next;
    for (const auto& x : gamma)
      for (int j = 0; j < L.dim; ++j) {
        std::vector<int> e(L.dim, 0);
        e[j] = 1;
        next.push_back(bracket(L, x, e));
      }
    const int r = rank_of(L.field, next);
    if (r == prev_rank) return std::nullopt;
    gamma = std::move(next);
    prev_rank = r;
    ++cls;
  }
  return cls;
}

// Automorphism count by testing every permutation of the element set.
// Only sane for orders up to about seven.
inline int automorphism_count(const finalg::FiniteGroup& G) {
  std::vector<int> p(G.n);
  std::iota(p.begin(), p.end(), 0);
  int count = 0;
  do {
    if (p[0] != 0) continue;
    bool hom = true;
    for (int i = 0; i < G.n && hom; ++i)
      for (int j = 0; j < G.n && hom; ++j) hom = p[G.op(i, j)] == G.op(p[i], p[j]);
    if (hom) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

}  // namespace oracle
