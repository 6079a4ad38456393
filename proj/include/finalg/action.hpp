#pragma once

// Group actions by automorphisms and the coprime fixed-point facts.
//
// An ActionSetup is a verified homomorphism rep: A -> Aut(G) stored as one
// permutation of G per element of A, with rep[a*b] = rep[a] after rep[b].

#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "finalg/catalog.hpp"
#include "finalg/check.hpp"
#include "finalg/group.hpp"

namespace finalg {

struct not_coprime : group_error {
  long long actor_order, target_order;
  not_coprime(long long a, long long g)
      : group_error("orders " + std::to_string(a) + " and " + std::to_string(g) +
                    " are not coprime"),
        actor_order(a), target_order(g) {}
};

struct Automorphism {
  std::vector<int> perm;
};

inline Automorphism make_automorphism(const FiniteGroup& G, std::vector<int> perm) {
  if (static_cast<int>(perm.size()) != G.n)
    throw invalid_spec("automorphism: permutation length mismatch");
  std::vector<char> hit(G.n, 0);
  for (int v : perm) {
    if (v < 0 || v >= G.n || hit[v])
      throw invalid_spec("automorphism: not a permutation");
    hit[v] = 1;
  }
  for (int x = 0; x < G.n; ++x)
    for (int y = 0; y < G.n; ++y)
      if (perm[G.op(x, y)] != G.op(perm[x], perm[y]))
        throw action_not_automorphic(-1, x, y);
  return Automorphism{std::move(perm)};
}

struct ActionSetup {
  FiniteGroup actor;
  FiniteGroup target;
  std::vector<std::vector<int>> rep;  // rep[a] = permutation of target
  bool coprime = false;

  int apply(int a, int x) const { return rep[a][x]; }
};

inline ActionSetup make_action_setup(FiniteGroup actor, FiniteGroup target,
                                     std::vector<std::vector<int>> rep) {
  if (static_cast<int>(rep.size()) != actor.n)
    throw invalid_spec("action: one permutation per actor element required");
  for (int a = 0; a < actor.n; ++a) make_automorphism(target, rep[a]);
  for (int a = 0; a < actor.n; ++a)
    for (int b = 0; b < actor.n; ++b) {
      int ab = actor.op(a, b);
      for (int x = 0; x < target.n; ++x)
        if (rep[ab][x] != rep[a][rep[b][x]])
          throw invalid_spec("action: not a homomorphism at (" + std::to_string(a) +
                             "," + std::to_string(b) + ")");
    }
  ActionSetup s;
  s.coprime = std::gcd(static_cast<long long>(actor.n),
                       static_cast<long long>(target.n)) == 1;
  s.actor = std::move(actor);
  s.target = std::move(target);
  s.rep = std::move(rep);
  return s;
}

/// Extends generator images to a full verified action.  Walks products of
/// already-covered actor elements; inconsistent images or incomplete
/// coverage raise invalid_spec.
inline ActionSetup action_from_generator_images(
    const FiniteGroup& actor, const FiniteGroup& target,
    const std::vector<std::pair<int, std::vector<int>>>& gen_images) {
  std::vector<std::vector<int>> rep(actor.n);
  std::vector<char> known(actor.n, 0);
  std::vector<int> id(target.n);
  std::iota(id.begin(), id.end(), 0);
  std::vector<int> work{0};
  rep[0] = id;
  known[0] = 1;
  for (auto& [g, perm] : gen_images) {
    if (g < 0 || g >= actor.n) throw invalid_spec("action: generator out of range");
    if (static_cast<int>(perm.size()) != target.n)
      throw invalid_spec("action: generator image length mismatch");
    if (known[g] && rep[g] != perm)
      throw invalid_spec("action: conflicting generator images");
    if (!known[g]) { rep[g] = perm; known[g] = 1; work.push_back(g); }
  }
  for (size_t i = 0; i < work.size(); ++i)
    for (size_t j = 0; j < work.size(); ++j) {
      int a = work[i], b = work[j], ab = actor.op(a, b);
      std::vector<int> comp(target.n);
      for (int x = 0; x < target.n; ++x) comp[x] = rep[a][rep[b][x]];
      if (known[ab]) {
        if (rep[ab] != comp)
          throw invalid_spec("action: generator images are inconsistent at (" +
                             std::to_string(a) + "," + std::to_string(b) + ")");
      } else {
        rep[ab] = std::move(comp);
        known[ab] = 1;
        work.push_back(ab);
      }
    }
  for (int a = 0; a < actor.n; ++a)
    if (!known[a])
      throw invalid_spec("action: generators do not cover the actor group");
  return make_action_setup(actor, target, std::move(rep));
}

// ---------------------------------------------------------------------------
// Fixed points and commutators with the action

/// C_G(S) for a subset S of actor elements.
inline Subgroup fixed_points(const ActionSetup& s, const std::vector<int>& actor_elems) {
  std::vector<int> fixed;
  for (int x = 0; x < s.target.n; ++x) {
    bool ok = true;
    for (int a : actor_elems)
      if (s.rep[a][x] != x) { ok = false; break; }
    if (ok) fixed.push_back(x);
  }
  return Subgroup{&s.target, std::move(fixed)};
}

inline Subgroup fixed_points_all(const ActionSetup& s) {
  std::vector<int> all(s.actor.n);
  std::iota(all.begin(), all.end(), 0);
  return fixed_points(s, all);
}

inline bool is_invariant_set(const ActionSetup& s, const std::vector<int>& elems) {
  std::vector<char> in(s.target.n, 0);
  for (int x : elems) in[x] = 1;
  for (int a = 0; a < s.actor.n; ++a)
    for (int x : elems)
      if (!in[s.rep[a][x]]) return false;
  return true;
}

/// [H, A] = <h^-1 * a(h)> for an A-invariant subgroup H; the result is
/// again A-invariant and normal in G (both verified).
inline Subgroup commutator_with_action_on(const ActionSetup& s,
                                          const std::vector<int>& elems) {
  const FiniteGroup& G = s.target;
  std::vector<char> seen(G.n, 0);
  std::vector<int> gens;
  for (int h : elems)
    for (int a = 0; a < s.actor.n; ++a) {
      int c = G.op(G.inv[h], s.rep[a][h]);
      if (!seen[c]) { seen[c] = 1; gens.push_back(c); }
    }
  Subgroup K = subgroup_generated(G, gens);
  if (!is_invariant_set(s, K.elems))
    throw group_error("[H,A] failed invariance check");
  return K;
}

inline Subgroup commutator_with_action(const ActionSetup& s) {
  Subgroup K = commutator_with_action_on(s, full_subgroup(s.target).elems);
  if (auto w = normality_witness(s.target, K))
    throw not_normal(w->first, w->second);
  return K;
}

// ---------------------------------------------------------------------------
// Invariant normal subgroups

/// All A-invariant normal subgroups of the target, as joins of the closures
/// of single elements under product, conjugation and the action.  The count
/// is guarded by `limit`.
inline std::vector<Subgroup> invariant_normal_subgroups(const ActionSetup& s,
                                                        size_t limit = 20000) {
  const FiniteGroup& G = s.target;
  auto atom = [&](const std::vector<int>& seed) {
    std::vector<char> in(G.n, 0);
    std::vector<int> q;
    auto add = [&](int x) {
      if (!in[x]) { in[x] = 1; q.push_back(x); }
    };
    add(0);
    for (int x : seed) add(x);
    for (size_t i = 0; i < q.size(); ++i) {
      for (size_t j = 0; j <= i; ++j) {
        add(G.op(q[i], q[j]));
        add(G.op(q[j], q[i]));
      }
      for (int g = 0; g < G.n; ++g) add(G.conj(g, q[i]));
      for (int a = 0; a < s.actor.n; ++a) add(s.rep[a][q[i]]);
    }
    std::sort(q.begin(), q.end());
    return q;
  };

  std::set<std::vector<int>> atoms;
  for (int x = 1; x < G.n; ++x) atoms.insert(atom({x}));
  std::set<std::vector<int>> known;
  known.insert({0});
  std::vector<std::vector<int>> work{{0}};
  for (size_t i = 0; i < work.size(); ++i)
    for (const auto& a : atoms) {
      std::vector<int> seed = work[i];
      seed.insert(seed.end(), a.begin(), a.end());
      std::vector<int> join = atom(seed);
      if (known.insert(join).second) {
        if (known.size() > limit) throw too_large(known.size(), limit);
        work.push_back(std::move(join));
      }
    }
  std::vector<Subgroup> out;
  for (const auto& e : known) out.push_back(Subgroup{&G, e});
  return out;
}

// ---------------------------------------------------------------------------
// Coprime fixed-point facts

inline constexpr int kCoprimeFactsCap = 512;

/// The five coprime-action facts, each as one named check:
///   (i)   G = C_G(A) [G,A]
///   (ii)  [G,A,A] = [G,A]
///   (iii) an A-invariant Sylow p-subgroup exists for every p | |G|
///   (iv)  centralizers pass to quotients by invariant normal subgroups
///   (v)   G = prod_{a in A^#} C_G(a) for nilpotent G and noncyclic abelian A
/// (v) reports skip when its extra hypotheses do not apply.
inline CheckSet verify_coprime_facts(const ActionSetup& s, int cap = kCoprimeFactsCap) {
  if (!s.coprime) throw not_coprime(s.actor.n, s.target.n);
  if (s.target.n > cap) throw too_large(s.target.n, cap);
  const FiniteGroup& G = s.target;
  CheckSet out;

  Subgroup C = fixed_points_all(s);
  Subgroup K = commutator_with_action(s);
  {
    auto prod = product_set(G, C.elems, K.elems);
    auto& c = out.add("fixed-points times action-commutator covers G",
                      static_cast<int>(prod.size()) == G.n ? Status::pass : Status::fail);
    c.observed = {{"fixed_order", C.order()}, {"commutator_order", K.order()},
                  {"product_size", prod.size()}};
  }
  {
    Subgroup K2 = commutator_with_action_on(s, K.elems);
    auto& c = out.add("action-commutator is idempotent",
                      K2.elems == K.elems ? Status::pass : Status::fail);
    c.observed = {{"first_order", K.order()}, {"second_order", K2.order()}};
  }
  {
    bool all_ok = true;
    nlohmann::json per_prime = nlohmann::json::object();
    std::string wit;
    for (auto [p, e] : factorize(G.n)) {
      Subgroup P = sylow_subgroup(G, p);
      std::set<std::vector<int>> conjs;
      for (int g = 0; g < G.n; ++g) {
        std::vector<int> c;
        c.reserve(P.elems.size());
        for (int x : P.elems) c.push_back(G.conj(g, x));
        std::sort(c.begin(), c.end());
        conjs.insert(std::move(c));
      }
      bool found = false;
      for (const auto& c : conjs)
        if (is_invariant_set(s, c)) { found = true; break; }
      per_prime[std::to_string(p)] = {{"sylow_order", P.order()},
                                      {"conjugates", conjs.size()},
                                      {"invariant_found", found}};
      if (!found) { all_ok = false; wit = "p=" + std::to_string(p); }
    }
    auto& c = out.add("invariant Sylow subgroup exists for every prime",
                      all_ok ? Status::pass : Status::fail);
    c.witness = wit;
    c.observed = per_prime;
  }
  {
    auto normals = invariant_normal_subgroups(s);
    bool all_ok = true;
    std::string wit;
    for (const auto& N : normals) {
      Quotient q = quotient_group(G, N);
      const int m = q.group.n;
      // Induced action on the quotient (well defined: N is invariant).
      std::vector<std::vector<int>> qrep(s.actor.n, std::vector<int>(m));
      for (int a = 0; a < s.actor.n; ++a)
        for (int c = 0; c < m; ++c) qrep[a][c] = q.proj.img[s.rep[a][q.reps[c]]];
      std::vector<int> qfixed;
      for (int c = 0; c < m; ++c) {
        bool ok = true;
        for (int a = 0; a < s.actor.n && ok; ++a) ok = qrep[a][c] == c;
        if (ok) qfixed.push_back(c);
      }
      std::vector<int> img;
      for (int x : C.elems) img.push_back(q.proj.img[x]);
      std::sort(img.begin(), img.end());
      img.erase(std::unique(img.begin(), img.end()), img.end());
      if (img != qfixed) {
        all_ok = false;
        wit = "normal subgroup of order " + std::to_string(N.order());
        break;
      }
    }
    auto& c = out.add("centralizer passes to quotients", all_ok ? Status::pass : Status::fail);
    c.witness = wit;
    c.observed = {{"invariant_normal_count", normals.size()}};
  }
  {
    bool applies = is_nilpotent(G) && is_abelian(s.actor) &&
                   exponent(s.actor) < s.actor.n;  // noncyclic abelian
    if (!applies) {
      auto& c = out.add("covering by cyclic-part centralizers", Status::skip);
      c.witness = "needs nilpotent target and noncyclic abelian actor";
    } else {
      std::vector<int> S{0};
      nlohmann::json steps = nlohmann::json::array();
      for (int a = 1; a < s.actor.n; ++a) {
        Subgroup Ca = fixed_points(s, {a});
        S = product_set(G, S, Ca.elems);
        steps.push_back({{"actor", a}, {"centralizer_order", Ca.order()},
                         {"running_product", S.size()}});
      }
      auto& c = out.add("covering by cyclic-part centralizers",
                        static_cast<int>(S.size()) == G.n ? Status::pass : Status::fail);
      c.observed = steps;
    }
  }
  return out;
}

}  // namespace finalg
