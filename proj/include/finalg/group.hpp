#pragma once

// Finite groups as validated Cayley tables.
//
// Conventions used throughout the library:
//   * elements are indices 0..n-1, the identity is always index 0
//     (validate_group relabels if needed);
//   * x^g = g^-1 x g, [x,y] = x^-1 y^-1 x y;
//   * every search iterates element indices in increasing order, so all
//     results are deterministic;
//   * subgroups are sorted index vectors tied to a parent group.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "finalg/arith.hpp"

namespace finalg {

inline constexpr int kGroupOrderCap = 4096;

struct group_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct too_large : group_error {
  long long value, cap;
  too_large(long long v, long long c)
      : group_error("size " + std::to_string(v) + " exceeds cap " + std::to_string(c)),
        value(v), cap(c) {}
};

struct not_associative : group_error {
  int a, b, c;
  not_associative(int a_, int b_, int c_)
      : group_error("not associative at (" + std::to_string(a_) + "," +
                    std::to_string(b_) + "," + std::to_string(c_) + ")"),
        a(a_), b(b_), c(c_) {}
};

struct no_identity : group_error {
  no_identity() : group_error("table has no two-sided identity") {}
};

struct no_inverse : group_error {
  int elem;
  explicit no_inverse(int e)
      : group_error("element " + std::to_string(e) + " has no inverse"), elem(e) {}
};

struct not_normal : group_error {
  int conjugator, element;
  not_normal(int g, int h)
      : group_error("subgroup not normal: " + std::to_string(h) + "^" +
                    std::to_string(g) + " escapes"),
        conjugator(g), element(h) {}
};

struct not_a_subgroup : group_error {
  using group_error::group_error;
};

struct not_a_q_group : group_error {
  using group_error::group_error;
};

struct invalid_spec : group_error {
  using group_error::group_error;
};

struct FiniteGroup {
  int n = 1;
  std::vector<int> table{0};  // flat n*n, table[i*n+j] = i*j
  std::vector<int> inv{0};
  std::string name;

  int op(int i, int j) const { return table[static_cast<size_t>(i) * n + j]; }
  int conj(int g, int x) const { return op(op(inv[g], x), g); }
  int comm(int x, int y) const { return op(op(inv[x], inv[y]), op(x, y)); }

  int pow(int x, long long e) const {
    if (e < 0) return pow(inv[x], -e);
    int r = 0;
    while (e > 0) {
      if (e & 1) r = op(r, x);
      x = op(x, x);
      e >>= 1;
    }
    return r;
  }
};

struct Subgroup {
  const FiniteGroup* parent = nullptr;
  std::vector<int> elems;  // sorted, contains 0

  int order() const { return static_cast<int>(elems.size()); }
  bool contains(int x) const {
    return std::binary_search(elems.begin(), elems.end(), x);
  }
  long long index() const { return parent->n / order(); }
};

// ---------------------------------------------------------------------------
// Validation

namespace detail {

// Closure of seed under the (possibly non-associative) table product.
inline std::vector<int> magma_closure(const std::vector<int>& table, int n,
                                      const std::vector<int>& seed) {
  std::vector<char> in(n, 0);
  std::vector<int> q;
  auto add = [&](int x) {
    if (!in[x]) { in[x] = 1; q.push_back(x); }
  };
  for (int s : seed) add(s);
  for (size_t i = 0; i < q.size(); ++i)
    for (size_t j = 0; j <= i; ++j) {
      add(table[static_cast<size_t>(q[i]) * n + q[j]]);
      add(table[static_cast<size_t>(q[j]) * n + q[i]]);
    }
  return q;
}

}  // namespace detail

/// Checks group axioms on a raw table, relabels so the identity is index 0,
/// and returns the validated group.  Associativity uses Light's test over a
/// greedily chosen generating set, so large tables stay affordable.
inline FiniteGroup validate_group(const std::vector<std::vector<int>>& rows,
                                  std::string name = "",
                                  int cap = kGroupOrderCap) {
  const int n = static_cast<int>(rows.size());
  if (n < 1) throw invalid_spec("empty table");
  if (n > cap) throw too_large(n, cap);
  std::vector<int> t(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw invalid_spec("table is not square at row " + std::to_string(i));
    for (int j = 0; j < n; ++j) {
      int v = rows[i][j];
      if (v < 0 || v >= n)
        throw invalid_spec("entry out of range at (" + std::to_string(i) + "," +
                           std::to_string(j) + ")");
      t[static_cast<size_t>(i) * n + j] = v;
    }
  }

  int e = -1;
  for (int i = 0; i < n && e < 0; ++i) {
    bool ok = true;
    for (int j = 0; j < n && ok; ++j)
      ok = t[static_cast<size_t>(i) * n + j] == j &&
           t[static_cast<size_t>(j) * n + i] == j;
    if (ok) e = i;
  }
  if (e < 0) throw no_identity();

  if (e != 0) {
    // Swap labels 0 and e.
    auto s = [&](int x) { return x == 0 ? e : x == e ? 0 : x; };
    std::vector<int> t2(t.size());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        t2[static_cast<size_t>(s(i)) * n + s(j)] =
            s(t[static_cast<size_t>(i) * n + j]);
    t = std::move(t2);
  }

  // Light's associativity test: with S generating the table's magma closure,
  // x(ay) = (xa)y for all a in S and all x, y implies full associativity.
  {
    std::vector<int> gens;
    std::vector<int> closed = detail::magma_closure(t, n, {0});
    std::vector<char> in(n, 0);
    for (int x : closed) in[x] = 1;
    for (int x = 0; x < n; ++x) {
      if (in[x]) continue;
      gens.push_back(x);
      std::vector<int> seed = gens;
      seed.push_back(0);
      closed = detail::magma_closure(t, n, seed);
      std::fill(in.begin(), in.end(), 0);
      for (int y : closed) in[y] = 1;
    }
    auto at = [&](int i, int j) { return t[static_cast<size_t>(i) * n + j]; };
    for (int a : gens)
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (at(x, at(a, y)) != at(at(x, a), y)) throw not_associative(x, a, y);
  }

  std::vector<int> inv(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (t[static_cast<size_t>(i) * n + j] == 0 &&
          t[static_cast<size_t>(j) * n + i] == 0) {
        inv[i] = j;
        break;
      }
    if (inv[i] < 0) throw no_inverse(i);
  }

  FiniteGroup G;
  G.n = n;
  G.table = std::move(t);
  G.inv = std::move(inv);
  G.name = std::move(name);
  return G;
}

// ---------------------------------------------------------------------------
// Subgroups

inline Subgroup subgroup_generated(const FiniteGroup& G, const std::vector<int>& gens) {
  std::vector<char> in(G.n, 0);
  std::vector<int> q;
  auto add = [&](int x) {
    if (!in[x]) { in[x] = 1; q.push_back(x); }
  };
  add(0);
  for (int g : gens) {
    if (g < 0 || g >= G.n) throw invalid_spec("generator out of range");
    add(g);
  }
  for (size_t i = 0; i < q.size(); ++i)
    for (size_t j = 0; j <= i; ++j) {
      add(G.op(q[i], q[j]));
      add(G.op(q[j], q[i]));
    }
  std::sort(q.begin(), q.end());
  return Subgroup{&G, std::move(q)};
}

/// Wraps an element list as a Subgroup after checking closure.
inline Subgroup make_subgroup(const FiniteGroup& G, std::vector<int> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (elems.empty() || elems[0] != 0)
    throw not_a_subgroup("subgroup must contain the identity");
  std::vector<char> in(G.n, 0);
  for (int x : elems) {
    if (x < 0 || x >= G.n) throw not_a_subgroup("element out of range");
    in[x] = 1;
  }
  for (int x : elems)
    for (int y : elems)
      if (!in[G.op(x, y)])
        throw not_a_subgroup("set not closed under product");
  return Subgroup{&G, std::move(elems)};
}

inline Subgroup trivial_subgroup(const FiniteGroup& G) { return Subgroup{&G, {0}}; }

inline Subgroup full_subgroup(const FiniteGroup& G) {
  std::vector<int> all(G.n);
  std::iota(all.begin(), all.end(), 0);
  return Subgroup{&G, std::move(all)};
}

inline std::optional<std::pair<int, int>> normality_witness(const FiniteGroup& G,
                                                            const Subgroup& S) {
  for (int g = 0; g < G.n; ++g)
    for (int h : S.elems)
      if (!S.contains(G.conj(g, h))) return std::make_pair(g, h);
  return std::nullopt;
}

inline bool is_normal(const FiniteGroup& G, const Subgroup& S) {
  return !normality_witness(G, S).has_value();
}

inline Subgroup normal_closure(const FiniteGroup& G, const std::vector<int>& gens) {
  std::vector<char> in(G.n, 0);
  std::vector<int> q;
  auto add = [&](int x) {
    if (!in[x]) { in[x] = 1; q.push_back(x); }
  };
  add(0);
  for (int g : gens) add(g);
  for (size_t i = 0; i < q.size(); ++i) {
    for (size_t j = 0; j <= i; ++j) {
      add(G.op(q[i], q[j]));
      add(G.op(q[j], q[i]));
    }
    for (int g = 0; g < G.n; ++g) add(G.conj(g, q[i]));
  }
  std::sort(q.begin(), q.end());
  return Subgroup{&G, std::move(q)};
}

inline Subgroup intersect(const Subgroup& A, const Subgroup& B) {
  std::vector<int> out;
  std::set_intersection(A.elems.begin(), A.elems.end(), B.elems.begin(),
                        B.elems.end(), std::back_inserter(out));
  return Subgroup{A.parent, std::move(out)};
}

/// Elementwise set product AB = {ab}; the result need not be a subgroup.
inline std::vector<int> product_set(const FiniteGroup& G, const std::vector<int>& A,
                                    const std::vector<int>& B) {
  std::vector<char> in(G.n, 0);
  for (int a : A)
    for (int b : B) in[G.op(a, b)] = 1;
  std::vector<int> out;
  for (int x = 0; x < G.n; ++x)
    if (in[x]) out.push_back(x);
  return out;
}

inline Subgroup center(const FiniteGroup& G) {
  std::vector<int> z;
  for (int x = 0; x < G.n; ++x) {
    bool central = true;
    for (int g = 0; g < G.n && central; ++g) central = G.op(x, g) == G.op(g, x);
    if (central) z.push_back(x);
  }
  return Subgroup{&G, std::move(z)};
}

inline Subgroup centralizer(const FiniteGroup& G, const std::vector<int>& set) {
  std::vector<int> c;
  for (int x = 0; x < G.n; ++x) {
    bool ok = true;
    for (int s : set)
      if (G.op(x, s) != G.op(s, x)) { ok = false; break; }
    if (ok) c.push_back(x);
  }
  return Subgroup{&G, std::move(c)};
}

inline std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& G) {
  std::vector<char> seen(G.n, 0);
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < G.n; ++x) {
    if (seen[x]) continue;
    std::vector<char> in(G.n, 0);
    std::vector<int> cls;
    for (int g = 0; g < G.n; ++g) {
      int y = G.conj(g, x);
      if (!in[y]) { in[y] = 1; cls.push_back(y); seen[y] = 1; }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

// ---------------------------------------------------------------------------
// Element invariants

inline int element_order(const FiniteGroup& G, int x) {
  int y = x, k = 1;
  while (y != 0) { y = G.op(y, x); ++k; }
  return k;
}

inline long long exponent_of(const FiniteGroup& G, const std::vector<int>& elems) {
  long long e = 1;
  for (int x : elems) e = std::lcm(e, static_cast<long long>(element_order(G, x)));
  return e;
}

inline long long exponent(const FiniteGroup& G) {
  long long e = 1;
  for (int x = 0; x < G.n; ++x)
    e = std::lcm(e, static_cast<long long>(element_order(G, x)));
  return e;
}

inline bool is_abelian_set(const FiniteGroup& G, const std::vector<int>& elems) {
  for (int x : elems)
    for (int y : elems)
      if (G.op(x, y) != G.op(y, x)) return false;
  return true;
}

inline bool is_abelian(const FiniteGroup& G) {
  return is_abelian_set(G, full_subgroup(G).elems);
}

inline bool is_elementary_abelian_set(const FiniteGroup& G,
                                      const std::vector<int>& elems, long long p) {
  if (!is_power_of(static_cast<long long>(elems.size()), p)) return false;
  if (!is_abelian_set(G, elems)) return false;
  for (int x : elems)
    if (x != 0 && element_order(G, x) != p) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Quotients and homomorphisms

struct GroupHom {
  int src_order = 1, dst_order = 1;
  std::vector<int> img;  // img[x] = image of x
};

inline void verify_hom(const FiniteGroup& src, const FiniteGroup& dst,
                       const GroupHom& h) {
  if (h.src_order != src.n || h.dst_order != dst.n ||
      static_cast<int>(h.img.size()) != src.n)
    throw invalid_spec("homomorphism shape mismatch");
  for (int x = 0; x < src.n; ++x)
    for (int y = 0; y < src.n; ++y)
      if (h.img[src.op(x, y)] != dst.op(h.img[x], h.img[y]))
        throw invalid_spec("map is not a homomorphism at (" + std::to_string(x) +
                           "," + std::to_string(y) + ")");
}

struct Quotient {
  FiniteGroup group;
  GroupHom proj;           // canonical projection
  std::vector<int> reps;   // reps[c] = minimal representative of coset c
};

/// Quotient by a normal subgroup; cosets are ordered by minimal element, so
/// the identity coset is index 0.
inline Quotient quotient_group(const FiniteGroup& G, const Subgroup& N) {
  if (auto w = normality_witness(G, N)) throw not_normal(w->first, w->second);
  std::vector<int> cosid(G.n, -1);
  std::vector<int> reps;
  for (int g = 0; g < G.n; ++g) {
    if (cosid[g] >= 0) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(g);
    for (int x : N.elems) cosid[G.op(g, x)] = c;
  }
  const int m = static_cast<int>(reps.size());
  std::vector<std::vector<int>> rows(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) rows[a][b] = cosid[G.op(reps[a], reps[b])];
  Quotient q;
  q.group = validate_group(rows, G.name.empty() ? "" : G.name + "/N");
  q.proj = GroupHom{G.n, m, cosid};
  q.reps = std::move(reps);
  return q;
}

// ---------------------------------------------------------------------------
// Commutator machinery and series

/// Subgroup generated by all commutators [a,b], a in A, b in B.
inline Subgroup commutator_subgroup(const FiniteGroup& G, const std::vector<int>& A,
                                    const std::vector<int>& B) {
  std::vector<int> gens;
  std::vector<char> seen(G.n, 0);
  for (int a : A)
    for (int b : B) {
      int c = G.comm(a, b);
      if (!seen[c]) { seen[c] = 1; gens.push_back(c); }
    }
  return subgroup_generated(G, gens);
}

/// Lower central series G = g1 >= g2 >= ...; the list ends at the first
/// stable term, so the terminal term is trivial exactly when G is nilpotent.
inline std::vector<Subgroup> lower_central_series(const FiniteGroup& G) {
  std::vector<Subgroup> series{full_subgroup(G)};
  const std::vector<int> all = series.front().elems;
  for (;;) {
    Subgroup next = commutator_subgroup(G, series.back().elems, all);
    if (next.elems == series.back().elems) break;
    series.push_back(std::move(next));
    if (series.back().order() == 1) break;
  }
  return series;
}

inline std::optional<int> nilpotency_class(const FiniteGroup& G) {
  auto s = lower_central_series(G);
  if (s.back().order() != 1) return std::nullopt;
  return static_cast<int>(s.size()) - 1;
}

inline bool is_nilpotent(const FiniteGroup& G) { return nilpotency_class(G).has_value(); }

/// Stable term of the lower central series (trivial iff G is nilpotent).
inline Subgroup gamma_infinity(const FiniteGroup& G) {
  return lower_central_series(G).back();
}

inline Subgroup derived_subgroup(const FiniteGroup& G) {
  auto all = full_subgroup(G).elems;
  return commutator_subgroup(G, all, all);
}

inline std::vector<Subgroup> derived_series(const FiniteGroup& G) {
  std::vector<Subgroup> series{full_subgroup(G)};
  for (;;) {
    Subgroup next = commutator_subgroup(G, series.back().elems, series.back().elems);
    if (next.elems == series.back().elems) break;
    series.push_back(std::move(next));
    if (series.back().order() == 1) break;
  }
  return series;
}

inline bool is_solvable(const FiniteGroup& G) {
  return derived_series(G).back().order() == 1;
}

// ---------------------------------------------------------------------------
// Subgroup reindexing

struct SubgroupGroup {
  FiniteGroup group;
  std::vector<int> to_parent;  // to_parent[i] = parent index of element i
};

/// The subgroup as a standalone group; element i is the i-th smallest parent
/// index, so the identity stays at 0.
inline SubgroupGroup subgroup_as_group(const Subgroup& S, std::string name = "") {
  const FiniteGroup& G = *S.parent;
  const int m = S.order();
  std::vector<int> back(G.n, -1);
  for (int i = 0; i < m; ++i) back[S.elems[i]] = i;
  std::vector<std::vector<int>> rows(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int v = back[G.op(S.elems[i], S.elems[j])];
      if (v < 0) throw not_a_subgroup("element set not closed");
      rows[i][j] = v;
    }
  SubgroupGroup out;
  out.group = validate_group(rows, std::move(name));
  out.to_parent = S.elems;
  return out;
}

// ---------------------------------------------------------------------------
// Sylow subgroups and the Fitting subgroup

/// A Sylow p-subgroup, grown greedily: while |H| < p^k some p-element x with
/// <H, x> still a p-group exists (x can be taken in the normalizer of H
/// inside a Sylow overgroup), so the scan always progresses.
inline Subgroup sylow_subgroup(const FiniteGroup& G, long long p) {
  if (!is_prime(p)) throw invalid_spec("sylow_subgroup: p must be prime");
  const long long target = p_part(G.n, p);
  Subgroup H = trivial_subgroup(G);
  while (H.order() < target) {
    bool grew = false;
    for (int x = 0; x < G.n && !grew; ++x) {
      if (H.contains(x)) continue;
      if (!is_power_of(element_order(G, x), p)) continue;
      std::vector<int> gens = H.elems;
      gens.push_back(x);
      Subgroup K = subgroup_generated(G, gens);
      if (is_power_of(K.order(), p)) {
        H = std::move(K);
        grew = true;
      }
    }
    if (!grew) throw group_error("sylow growth stalled");  // unreachable
  }
  return H;
}

/// O_p(G): the intersection of all conjugates of one Sylow p-subgroup.
inline Subgroup p_core(const FiniteGroup& G, long long p) {
  Subgroup P = sylow_subgroup(G, p);
  std::vector<int> core = P.elems;
  for (int g = 0; g < G.n && core.size() > 1; ++g) {
    std::vector<int> conj;
    conj.reserve(P.elems.size());
    for (int x : P.elems) conj.push_back(G.conj(g, x));
    std::sort(conj.begin(), conj.end());
    std::vector<int> meet;
    std::set_intersection(core.begin(), core.end(), conj.begin(), conj.end(),
                          std::back_inserter(meet));
    core = std::move(meet);
  }
  return Subgroup{&G, std::move(core)};
}

inline constexpr int kFittingCap = 512;

/// Fitting subgroup (level 1) or its second term F2 with F2/F1 = F(G/F1)
/// (level 2), computed via p-cores.
inline Subgroup fitting_subgroup(const FiniteGroup& G, int level = 1,
                                 int cap = kFittingCap) {
  if (G.n > cap) throw too_large(G.n, cap);
  if (level < 1 || level > 2) throw invalid_spec("fitting level must be 1 or 2");
  std::vector<int> gens;
  for (auto [p, e] : factorize(G.n)) {
    auto core = p_core(G, p);
    gens.insert(gens.end(), core.elems.begin(), core.elems.end());
  }
  Subgroup F = subgroup_generated(G, gens);
  {
    auto FG = subgroup_as_group(F);
    if (!is_nilpotent(FG.group))
      throw group_error("fitting subgroup failed nilpotency check");
  }
  if (level == 1) return F;
  Quotient q = quotient_group(G, F);
  Subgroup F2q = fitting_subgroup(q.group, 1, cap);
  std::vector<int> pre;
  for (int g = 0; g < G.n; ++g)
    if (F2q.contains(q.proj.img[g])) pre.push_back(g);
  return Subgroup{&G, std::move(pre)};
}

}  // namespace finalg
