#pragma once

// q-group and Frobenius structure theory: agemo/omega, metacyclicity,
// the regularity identity, exponent-q cube search, supersolvability,
// Frobenius validation, rank-2 normal subgroups, automorphism groups and
// characteristic-subgroup analysis.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "finalg/action.hpp"
#include "finalg/check.hpp"
#include "finalg/group.hpp"

namespace finalg {

struct not_nilpotent : group_error {
  using group_error::group_error;
};

struct not_complement : group_error {
  using group_error::group_error;
};

struct fixed_point_witness : group_error {
  int h, f;
  fixed_point_witness(int h_, int f_)
      : group_error("complement element " + std::to_string(h_) +
                    " centralizes kernel element " + std::to_string(f_)),
        h(h_), f(f_) {}
};

inline void require_q_group(const FiniteGroup& G, long long q) {
  if (!is_prime(q)) throw invalid_spec("q must be prime");
  if (!is_power_of(G.n, q))
    throw not_a_q_group("|G| = " + std::to_string(G.n) + " is not a power of " +
                        std::to_string(q));
}

// ---------------------------------------------------------------------------
// Power subgroups

/// G^q = <x^q : x in G>.
inline Subgroup agemo(const FiniteGroup& G, long long q) {
  if (!is_prime(q)) throw invalid_spec("agemo: q must be prime");
  std::vector<int> gens;
  std::vector<char> seen(G.n, 0);
  for (int x = 0; x < G.n; ++x) {
    int y = G.pow(x, q);
    if (!seen[y]) { seen[y] = 1; gens.push_back(y); }
  }
  return subgroup_generated(G, gens);
}

/// Omega_1(G) = <x : x^q = 1> for a q-group G.
inline Subgroup omega1(const FiniteGroup& G, long long q) {
  require_q_group(G, q);
  std::vector<int> gens;
  for (int x = 0; x < G.n; ++x)
    if (G.pow(x, q) == 0) gens.push_back(x);
  return subgroup_generated(G, gens);
}

// ---------------------------------------------------------------------------
// Metacyclicity

struct MetacyclicWitness {
  bool metacyclic = false;
  std::vector<int> normal_part;  // cyclic normal subgroup N
  int normal_gen = -1;           // generator of N
  int quotient_gen = -1;         // element whose coset generates G/N
};

/// Definitional test: G is metacyclic iff some cyclic normal N has cyclic
/// G/N.  Scans generators in increasing index, so the witness is the first
/// one.  For q-groups with odd q the answer is cross-checked against the
/// index test [G : G^q] <= q^2; disagreement would falsify a theorem, so it
/// raises logic_error rather than reporting.
inline MetacyclicWitness is_metacyclic(const FiniteGroup& G) {
  MetacyclicWitness w;
  std::set<std::vector<int>> tried;
  for (int x = 0; x < G.n && !w.metacyclic; ++x) {
    Subgroup N = subgroup_generated(G, {x});
    if (!tried.insert(N.elems).second) continue;
    if (!is_normal(G, N)) continue;
    Quotient q = quotient_group(G, N);
    for (int c = 0; c < q.group.n; ++c)
      if (element_order(q.group, c) == q.group.n) {
        w.metacyclic = true;
        w.normal_part = N.elems;
        w.normal_gen = x;
        w.quotient_gen = q.reps[c];
        break;
      }
  }
  auto fac = factorize(G.n);
  if (fac.size() == 1 && fac[0].first % 2 == 1) {
    long long q = fac[0].first;
    bool index_small = G.n / agemo(G, q).order() <= q * q;
    if (index_small != w.metacyclic)
      throw std::logic_error("metacyclic index test disagrees on " + G.name);
  }
  return w;
}

/// |G/G^q| = |Omega_1(G)| for q-groups of order at most q^q.
inline CheckSet check_regularity_identity(const FiniteGroup& G, long long q) {
  require_q_group(G, q);
  int k = G.n == 1 ? 0 : factorize(G.n)[0].second;
  if (k > q) throw too_large(k, q);
  long long power_index = G.n / agemo(G, q).order();
  long long omega_order = omega1(G, q).order();
  CheckSet out;
  auto& c = out.add("power-subgroup index equals omega-1 order",
                    power_index == omega_order ? Status::pass : Status::fail);
  c.observed = {{"q", q}, {"group_order", G.n}, {"power_index", power_index},
                {"omega1_order", omega_order}};
  return out;
}

// ---------------------------------------------------------------------------
// Exponent-q cube search

/// First subgroup of order q^3 and exponent q, scanning generating sets of
/// at most three order-q elements in lexicographic order.  Exhaustive: such
/// a subgroup needs at most three generators and all its nonidentity
/// elements have order q.
inline std::optional<Subgroup> find_exponent_q_cube(const FiniteGroup& A, long long q) {
  require_q_group(A, q);
  const long long cube = q * q * q;
  std::vector<int> ordq;
  for (int x = 1; x < A.n; ++x)
    if (element_order(A, x) == q) ordq.push_back(x);
  for (size_t i = 0; i < ordq.size(); ++i) {
    Subgroup Sx = subgroup_generated(A, {ordq[i]});
    for (size_t j = i + 1; j < ordq.size(); ++j) {
      if (Sx.contains(ordq[j])) continue;
      Subgroup Sxy = subgroup_generated(A, {ordq[i], ordq[j]});
      if (Sxy.order() > cube) continue;
      if (exponent_of(A, Sxy.elems) != q) continue;
      if (Sxy.order() == cube) return Sxy;
      for (size_t k = j + 1; k < ordq.size(); ++k) {
        if (Sxy.contains(ordq[k])) continue;
        Subgroup S = subgroup_generated(A, {ordq[i], ordq[j], ordq[k]});
        if (S.order() == cube && exponent_of(A, S.elems) == q) return S;
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Frobenius structure

struct FrobeniusStructure {
  const FiniteGroup* whole = nullptr;
  Subgroup kernel;      // F: normal, complemented
  Subgroup complement;  // H: acts on F without nontrivial fixed points
};

/// Validates the Frobenius condition C_kernel(h) = 1 for every nonidentity
/// h in the complement, plus normality and the complement factorization.
inline FrobeniusStructure check_frobenius(const FiniteGroup& whole,
                                          Subgroup kernel, Subgroup complement) {
  if (kernel.parent != &whole || complement.parent != &whole)
    throw invalid_spec("check_frobenius: subgroups of a different group");
  if (auto w = normality_witness(whole, kernel))
    throw not_normal(w->first, w->second);
  if (intersect(kernel, complement).order() != 1 ||
      static_cast<long long>(kernel.order()) * complement.order() != whole.n)
    throw not_complement("kernel and complement do not factor the group");
  for (int h : complement.elems) {
    if (h == 0) continue;
    for (int f : kernel.elems)
      if (f != 0 && whole.conj(h, f) == f) throw fixed_point_witness(h, f);
  }
  FrobeniusStructure fs;
  fs.whole = &whole;
  fs.kernel = std::move(kernel);
  fs.complement = std::move(complement);
  return fs;
}

// ---------------------------------------------------------------------------
// Supersolvability

struct ChiefSeries {
  bool supersolvable = false;
  std::vector<std::vector<int>> series;  // increasing, each term normal in G
  std::vector<long long> factor_orders;  // one prime per step
};

/// Finds a chief series with prime-order factors by repeatedly splitting off
/// the first prime-order normal subgroup.  Greedy is safe: quotients of
/// supersolvable groups are supersolvable, and a nontrivial supersolvable
/// group always has a prime-order normal subgroup.
inline ChiefSeries is_supersolvable(const FiniteGroup& G, int cap = kGroupOrderCap) {
  if (G.n > cap) throw too_large(G.n, cap);
  ChiefSeries out;
  out.series.push_back({0});
  if (G.n == 1) {
    out.supersolvable = true;
    return out;
  }
  for (int x = 1; x < G.n; ++x) {
    if (!is_prime(element_order(G, x))) continue;
    Subgroup N = subgroup_generated(G, {x});
    if (!is_normal(G, N)) continue;
    Quotient q = quotient_group(G, N);
    ChiefSeries rest = is_supersolvable(q.group, cap);
    if (!rest.supersolvable) return out;
    out.supersolvable = true;
    out.factor_orders.push_back(N.order());
    out.series.push_back(N.elems);
    for (size_t i = 1; i < rest.series.size(); ++i) {
      std::vector<int> pre;
      std::vector<char> in(q.group.n, 0);
      for (int c : rest.series[i]) in[c] = 1;
      for (int g = 0; g < G.n; ++g)
        if (in[q.proj.img[g]]) pre.push_back(g);
      out.series.push_back(std::move(pre));
    }
    out.factor_orders.insert(out.factor_orders.end(), rest.factor_orders.begin(),
                             rest.factor_orders.end());
    return out;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rank-2 normal subgroups

/// First elementary abelian subgroup of order p^2 normal in F, scanning
/// primes in increasing order and generator pairs lexicographically.
inline std::optional<Subgroup> find_normal_rank2(const FiniteGroup& F) {
  if (!is_nilpotent(F)) throw not_nilpotent("rank-2 search needs a nilpotent group");
  for (auto [p, e] : factorize(F.n)) {
    std::vector<int> ordp;
    for (int x = 1; x < F.n; ++x)
      if (element_order(F, x) == p) ordp.push_back(x);
    for (size_t i = 0; i < ordp.size(); ++i) {
      Subgroup Sx = subgroup_generated(F, {ordp[i]});
      for (size_t j = i + 1; j < ordp.size(); ++j) {
        int x = ordp[i], y = ordp[j];
        if (Sx.contains(y)) continue;
        if (F.op(x, y) != F.op(y, x)) continue;
        Subgroup S = subgroup_generated(F, {x, y});
        if (!is_elementary_abelian_set(F, S.elems, p))
          throw group_error("rank-2 candidate failed elementary abelian check");
        if (is_normal(F, S)) return S;
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Automorphism groups

inline constexpr int kAutomorphismCap = 256;

/// Complete automorphism group by backtracking over images of a greedy
/// generating sequence.  Candidate images are pruned by element order and
/// centralizer size; partial maps are closed under products with full
/// consistency checking, so emitted maps are automorphisms by construction.
inline std::vector<Automorphism> automorphism_group(const FiniteGroup& G) {
  if (G.n > kAutomorphismCap) throw too_large(G.n, kAutomorphismCap);
  std::vector<int> gens;
  {
    Subgroup H = trivial_subgroup(G);
    for (int x = 1; x < G.n; ++x)
      if (!H.contains(x)) {
        gens.push_back(x);
        H = subgroup_generated(G, gens);
      }
  }
  std::vector<int> ord(G.n), cent(G.n);
  for (int x = 0; x < G.n; ++x) {
    ord[x] = element_order(G, x);
    cent[x] = centralizer(G, {x}).order();
  }

  std::vector<Automorphism> out;
  std::vector<int> img(G.n, -1);
  std::vector<char> used(G.n, 0);
  std::vector<int> domain{0};
  img[0] = 0;
  used[0] = 1;

  // Defines img[x] = y, recording x so the assignment can be undone; fails
  // on conflict or broken injectivity.
  auto define = [&](int x, int y, std::vector<int>& added) {
    if (img[x] >= 0) return img[x] == y;
    if (used[y]) return false;
    img[x] = y;
    used[y] = 1;
    domain.push_back(x);
    added.push_back(x);
    return true;
  };
  auto undo = [&](const std::vector<int>& added) {
    for (int x : added) {
      used[img[x]] = 0;
      img[x] = -1;
    }
    domain.resize(domain.size() - added.size());
  };

  // Extends the map by one generator image and closes under products; every
  // pair with a new member is multiplied both ways, so multiplicativity
  // holds on the whole domain whenever fill succeeds.
  auto fill = [&](int g, int t, std::vector<int>& added) {
    size_t base = domain.size();
    if (!define(g, t, added)) return false;
    for (size_t i = base; i < domain.size(); ++i)
      for (size_t j = 0; j <= i; ++j) {
        int a = domain[i], b = domain[j];
        if (!define(G.op(a, b), G.op(img[a], img[b]), added)) return false;
        if (!define(G.op(b, a), G.op(img[b], img[a]), added)) return false;
      }
    return true;
  };

  auto recurse = [&](auto&& self, size_t level) -> void {
    if (level == gens.size()) {
      out.push_back(Automorphism{img});
      return;
    }
    int g = gens[level];
    for (int t = 0; t < G.n; ++t) {
      if (used[t] || ord[t] != ord[g] || cent[t] != cent[g]) continue;
      std::vector<int> added;
      if (fill(g, t, added)) self(self, level + 1);
      undo(added);
    }
  };
  recurse(recurse, 0);
  return out;
}

// ---------------------------------------------------------------------------
// Characteristic subgroups

/// All subgroups invariant under every automorphism, as joins of the
/// subgroups generated by single automorphism orbits.
inline std::vector<Subgroup> characteristic_subgroups(
    const FiniteGroup& G, const std::vector<Automorphism>& auts) {
  auto orbit_atom = [&](int x) {
    std::vector<char> seen(G.n, 0);
    std::vector<int> orb;
    for (const auto& a : auts) {
      int y = a.perm[x];
      if (!seen[y]) { seen[y] = 1; orb.push_back(y); }
    }
    return subgroup_generated(G, orb).elems;
  };
  std::set<std::vector<int>> atoms;
  for (int x = 1; x < G.n; ++x) atoms.insert(orbit_atom(x));
  std::set<std::vector<int>> known;
  known.insert({0});
  std::vector<std::vector<int>> work{{0}};
  for (size_t i = 0; i < work.size(); ++i)
    for (const auto& a : atoms) {
      std::vector<int> gens = work[i];
      gens.insert(gens.end(), a.begin(), a.end());
      std::vector<int> join = subgroup_generated(G, gens).elems;
      if (known.insert(join).second) work.push_back(std::move(join));
    }
  std::vector<Subgroup> out;
  for (const auto& e : known) out.push_back(Subgroup{&G, e});
  return out;
}

/// Hypothesis: no characteristic abelian subgroup of Q is noncyclic.  When
/// it holds, verifies the structural conclusion: Z(Q) is cyclic and
/// Q = Z(Q) * E with E = Omega_1(Q) extraspecial of exponent q (degenerate
/// E for cyclic Q).
inline CheckSet check_no_noncyclic_char_abelian(const FiniteGroup& Q, long long q) {
  require_q_group(Q, q);
  if (q == 2) throw invalid_spec("characteristic-abelian analysis needs odd q");
  if (Q.n > kAutomorphismCap) throw too_large(Q.n, kAutomorphismCap);
  CheckSet out;
  auto auts = automorphism_group(Q);
  auto chars = characteristic_subgroups(Q, auts);

  bool hyp = true;
  std::string wit;
  for (const auto& S : chars)
    if (is_abelian_set(Q, S.elems) && exponent_of(Q, S.elems) < S.order()) {
      hyp = false;
      wit = "characteristic abelian noncyclic subgroup of order " +
            std::to_string(S.order());
      break;
    }
  {
    auto& c = out.add("no characteristic abelian subgroup is noncyclic",
                      hyp ? Status::pass : Status::fail, true);
    c.witness = wit;
    c.observed = {{"automorphisms", auts.size()},
                  {"characteristic_subgroups", chars.size()}};
  }
  if (!hyp) {
    out.add("central-product decomposition", Status::skip);
    return out;
  }

  Subgroup Z = center(Q);
  out.add("center is cyclic",
          exponent_of(Q, Z.elems) == Z.order() ? Status::pass : Status::fail);
  if (is_abelian(Q)) {
    // Hypothesis forces cyclic Q; the decomposition degenerates to Z(Q) = Q.
    auto& c = out.add("central-product decomposition",
                      exponent(Q) == Q.n ? Status::pass : Status::fail);
    c.observed = {{"degenerate", true}};
    return out;
  }
  Subgroup E = omega1(Q, q);
  bool extra = exponent_of(Q, E.elems) == q;
  {
    auto EG = subgroup_as_group(E);
    Subgroup ZE = center(EG.group);
    Subgroup DE = derived_subgroup(EG.group);
    extra = extra && ZE.order() == q && ZE.elems == DE.elems;
  }
  bool covers = static_cast<int>(product_set(Q, Z.elems, E.elems).size()) == Q.n;
  auto& c = out.add("central-product decomposition",
                    extra && covers ? Status::pass : Status::fail);
  c.observed = {{"omega1_order", E.order()}, {"extraspecial_exponent_q", extra},
                {"center_times_omega1_covers", covers}};
  return out;
}

// ---------------------------------------------------------------------------
// Choosing Z

/// The minimal order-p subgroup of the kernel normal in the whole group
/// (minimal by sorted element set; distinct order-p subgroups meet trivially,
/// so the first hit in an increasing generator scan is minimal).
inline std::optional<Subgroup> choose_Z(const FrobeniusStructure& fs, long long p) {
  if (!is_prime(p) || fs.kernel.order() % p != 0)
    throw invalid_spec("choose_Z: p must be a prime dividing the kernel order");
  const FiniteGroup& G = *fs.whole;
  for (int x : fs.kernel.elems) {
    if (x == 0 || element_order(G, x) != p) continue;
    Subgroup S = subgroup_generated(G, {x});
    if (is_normal(G, S)) return S;
  }
  return std::nullopt;
}

}  // namespace finalg
