#pragma once

// Scenario harness: JSON configs in, check reports out.
//
// A scenario is one titled verification instance (a lemma on a concrete
// group, a theorem pipeline on a concrete action).  run_scenario dispatches
// on config["kind"]; run_config handles batches; builtin_config bundles
// curated instances per kind so `verify <id>` needs no input files.  The
// config grammar is documented in the README.

#include <chrono>
#include <fstream>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "finalg/action.hpp"
#include "finalg/catalog.hpp"
#include "finalg/graded.hpp"
#include "finalg/group_io.hpp"
#include "finalg/lie.hpp"
#include "finalg/lie_io.hpp"
#include "finalg/report.hpp"
#include "finalg/structure.hpp"

namespace finalg {

/// Bad or missing configuration values; the CLI maps this to its usage exit
/// code, distinct from a failed check.
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Config parsing

inline FiniteGroup group_from_json(const nlohmann::json& j) {
  if (j.is_string()) return construct_group(j.get<std::string>());
  if (j.is_object() && j.contains("file")) {
    std::string path = j.at("file").get<std::string>();
    std::ifstream in(path);
    if (!in) throw config_error("cannot open group file " + path);
    return read_cayley(in);
  }
  throw config_error("group: expected a spec string or {\"file\": path}");
}

/// Parses a standalone action string ("inversion", "scalar(k)",
/// "matrix([[..],..])", "perm([..])") into a permutation of the target.
inline std::vector<int> parse_action_perm(const FiniteGroup& target,
                                          const std::string& spec) {
  detail::SpecParser p(spec);
  std::vector<int> perm = p.action_perm(target);
  p.ws();
  if (p.i != spec.size()) throw config_error("action: trailing characters in '" + spec + "'");
  return perm;
}

/// Builds a verified action from the image fields of `j` with the actor
/// already constructed.  Accepts one of:
///   "images":     full table, one permutation per actor element
///   "generators": [{"element": e, "action": "<string>"} | {"element": e, "perm": [..]}]
///   "action":     one string, the image of generator 1 of a cyclic actor
inline ActionSetup action_setup_with_actor(FiniteGroup actor,
                                           const nlohmann::json& j) {
  FiniteGroup target;
  if (j.contains("target_file")) {
    std::string path = j.at("target_file").get<std::string>();
    std::ifstream in(path);
    if (!in) throw config_error("cannot open group file " + path);
    target = read_cayley(in);
  } else if (j.contains("target")) {
    target = group_from_json(j.at("target"));
  } else {
    throw config_error("action: a target group is required");
  }

  if (j.contains("images"))
    return make_action_setup(std::move(actor), std::move(target),
                             j.at("images").get<std::vector<std::vector<int>>>());

  std::vector<std::pair<int, std::vector<int>>> gens;
  if (j.contains("generators")) {
    for (const nlohmann::json& g : j.at("generators")) {
      int e = g.at("element").get<int>();
      if (g.contains("perm"))
        gens.emplace_back(e, g.at("perm").get<std::vector<int>>());
      else if (g.contains("action"))
        gens.emplace_back(e, parse_action_perm(target, g.at("action").get<std::string>()));
      else
        throw config_error("generator entry needs an \"action\" or a \"perm\"");
    }
  } else if (j.contains("action")) {
    gens.emplace_back(1, parse_action_perm(target, j.at("action").get<std::string>()));
  } else {
    throw config_error("action: provide \"images\", \"generators\", or \"action\"");
  }
  return action_from_generator_images(actor, target, gens);
}

inline ActionSetup action_setup_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw config_error("action: expected an object");
  FiniteGroup actor;
  if (j.contains("actor_file")) {
    std::string path = j.at("actor_file").get<std::string>();
    std::ifstream in(path);
    if (!in) throw config_error("cannot open group file " + path);
    actor = read_cayley(in);
  } else if (j.contains("actor")) {
    actor = group_from_json(j.at("actor"));
  } else {
    throw config_error("action: an actor group is required");
  }
  return action_setup_with_actor(std::move(actor), j);
}

/// File-based serialization of a verified action; the inverse of the
/// {"actor_file", "target_file", "images"} config form.
inline nlohmann::json action_setup_to_json(const ActionSetup& s,
                                           const std::string& actor_file,
                                           const std::string& target_file) {
  return nlohmann::json{{"actor_file", actor_file},
                        {"target_file", target_file},
                        {"images", s.rep}};
}

struct FrobeniusSpec {
  FiniteGroup whole;
  std::vector<int> kernel_elems;
  std::vector<int> complement_elems;
};

/// Two forms:
///   {"kernel": "<spec>", "complement": "<spec>", "action": "<string>"}
///     builds semidirect(kernel, complement, action); the action string acts
///     through generator 1 of a cyclic complement
///   {"group": <group>, "kernel": [ints], "complement": [ints]}
inline FrobeniusSpec frobenius_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw config_error("frobenius: expected an object");
  FrobeniusSpec out;
  if (j.contains("kernel") && j.at("kernel").is_string()) {
    std::string k = j.at("kernel").get<std::string>();
    std::string h = j.at("complement").get<std::string>();
    std::string a = j.at("action").get<std::string>();
    out.whole = construct_group("semidirect(" + k + "," + h + "," + a + ")");
    int m = construct_group(h).n;
    for (int f = 0; f < out.whole.n / m; ++f) out.kernel_elems.push_back(f * m);
    for (int c = 0; c < m; ++c) out.complement_elems.push_back(c);
    return out;
  }
  if (!j.contains("group"))
    throw config_error("frobenius: explicit form needs \"group\" plus element lists");
  out.whole = group_from_json(j.at("group"));
  out.kernel_elems = j.at("kernel").get<std::vector<int>>();
  out.complement_elems = j.at("complement").get<std::vector<int>>();
  return out;
}

/// Three forms:
///   {"file": "<path>"}                   structure-constant file
///   {"assoc_of": <group>}                associated Lie ring of a group
///   {"q": q, "d": d, "dim": n, "name": s, "brackets": [[i,j,k,v], ...]}
///     inline ring; each bracket entry sets [e_i, e_j] += v e_k together
///     with its antisymmetric counterpart
inline LieRing lie_ring_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw config_error("lie: expected an object");
  if (j.contains("file")) {
    std::string path = j.at("file").get<std::string>();
    std::ifstream in(path);
    if (!in) throw config_error("cannot open Lie ring file " + path);
    return read_lie_ring(in);
  }
  if (j.contains("assoc_of"))
    return associated_lie_ring(group_from_json(j.at("assoc_of"))).ring;
  long long q = j.at("q").get<long long>();
  int d = j.value("d", 1);
  int dim = j.at("dim").get<int>();
  LieRing L = make_lie_ring(make_field(q, d), dim, j.value("name", ""));
  for (const nlohmann::json& t : j.value("brackets", nlohmann::json::array())) {
    if (!t.is_array() || t.size() != 4)
      throw config_error("lie: each bracket entry is [i, j, k, value]");
    int i = t[0].get<int>(), jj = t[1].get<int>(), k = t[2].get<int>();
    long long v = t[3].get<long long>();
    if (i < 0 || i >= dim || jj < 0 || jj >= dim || k < 0 || k >= dim)
      throw config_error("lie: bracket index out of range");
    if (v < 0 || v >= L.field.size)
      throw config_error("lie: bracket value out of range");
    add_bracket_term(L, i, jj, k, static_cast<int>(v));
  }
  validate_lie_ring(L);
  return L;
}

inline Mat mat_from_json(const nlohmann::json& j, int dim,
                         const CoefficientField& F) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw config_error("matrix: expected " + std::to_string(dim) + " rows");
  Mat M(dim, dim);
  for (int r = 0; r < dim; ++r) {
    const nlohmann::json& row = j[static_cast<size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw config_error("matrix: row " + std::to_string(r) + " has the wrong length");
    for (int c = 0; c < dim; ++c) {
      long long v = row[static_cast<size_t>(c)].get<long long>();
      if (v < 0 || v >= F.size)
        throw config_error("matrix: entry is not a field element index");
      M.at(r, c) = static_cast<int>(v);
    }
  }
  return M;
}

/// Grading serialization: field spec, root of unity, and the echelon row
/// basis of every component, indexed by residue.
inline nlohmann::json grading_to_json(const Grading& g) {
  const CoefficientField& F = g.ring.field;
  nlohmann::json components = nlohmann::json::array();
  for (const Mat& m : g.components) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < m.rows; ++r) rows.push_back(m.row(r));
    components.push_back(std::move(rows));
  }
  return nlohmann::json{
      {"field", {{"q", F.q}, {"d", F.d}, {"modulus", F.modulus}}},
      {"p", g.p},
      {"omega", g.omega},
      {"components", std::move(components)}};
}

namespace detail {

inline long long sole_prime(const FiniteGroup& G) {
  auto fac = factorize(G.n);
  if (fac.size() != 1)
    throw config_error("group of order " + std::to_string(G.n) +
                       " is not a q-group");
  return fac[0].first;
}

// ---------------------------------------------------------------------------
// Scenario runners. Each fills r.checks and a default title.

inline void run_coprime_facts(const nlohmann::json& config, int cap,
                              ScenarioReport& r) {
  ActionSetup s = action_setup_from_json(config.at("action"));
  if (r.title.empty()) r.title = s.actor.name + " acting on " + s.target.name;
  r.checks = verify_coprime_facts(s, cap > 0 ? cap : kCoprimeFactsCap);
}

inline void run_lemma_metacyclic(const nlohmann::json& config, ScenarioReport& r) {
  FiniteGroup G = group_from_json(config.at("group"));
  if (r.title.empty()) r.title = G.name;
  CheckSet out;

  std::optional<MetacyclicWitness> w;
  std::string disagreement;
  try {
    w = is_metacyclic(G);
  } catch (const std::logic_error& e) {
    disagreement = e.what();
  }
  if (!w) {
    out.add("metacyclicity is decided", Status::skip);
    out.add("definitional and index tests agree", Status::fail).witness = disagreement;
    out.add("metacyclic witness re-verified", Status::skip);
    r.checks = std::move(out);
    return;
  }

  {
    CheckResult& c = out.add("metacyclicity is decided", Status::pass);
    c.observed = {{"metacyclic", w->metacyclic}, {"order", G.n}};
  }
  {
    auto fac = factorize(G.n);
    if (fac.size() == 1 && fac[0].first % 2 == 1) {
      long long q = fac[0].first;
      long long index = G.n / agemo(G, q).order();
      CheckResult& c = out.add("definitional and index tests agree",
                               (index <= q * q) == w->metacyclic ? Status::pass
                                                                 : Status::fail);
      c.observed = {{"power_index", index}, {"bound", q * q}};
    } else {
      out.add("definitional and index tests agree", Status::skip).witness =
          "index test needs an odd prime power order";
    }
  }
  if (!w->metacyclic) {
    out.add("metacyclic witness re-verified", Status::skip).witness =
        "group is not metacyclic";
    r.checks = std::move(out);
    return;
  }
  Subgroup N = subgroup_generated(G, {w->normal_gen});
  bool ok = N.elems == w->normal_part && is_normal(G, N) &&
            element_order(G, w->normal_gen) == N.order();
  Quotient q = quotient_group(G, N);
  ok = ok && element_order(q.group, q.proj.img[w->quotient_gen]) == q.group.n;
  CheckResult& c = out.add("metacyclic witness re-verified",
                           ok ? Status::pass : Status::fail);
  c.observed = {{"normal_order", N.order()}, {"quotient_order", q.group.n}};
  r.checks = std::move(out);
}

inline void run_lemma_regularity(const nlohmann::json& config, ScenarioReport& r) {
  FiniteGroup G = group_from_json(config.at("group"));
  if (r.title.empty()) r.title = G.name;
  r.checks = check_regularity_identity(G, sole_prime(G));
}

inline void run_lemma_q_cube(const nlohmann::json& config, ScenarioReport& r) {
  FiniteGroup G = group_from_json(config.at("group"));
  if (r.title.empty()) r.title = G.name;
  long long q = sole_prime(G);
  CheckSet out;

  {
    CheckResult& h = out.add("modulus prime exceeds three",
                             q > 3 ? Status::pass : Status::fail, true);
    h.observed = {{"q", q}};
  }
  if (out.hypothesis_failed()) {
    out.add("search succeeds exactly on non-metacyclic groups", Status::skip);
    out.add("witness has order q^3 and exponent q", Status::skip);
    r.checks = std::move(out);
    return;
  }

  MetacyclicWitness w = is_metacyclic(G);
  std::optional<Subgroup> S = find_exponent_q_cube(G, q);
  {
    CheckResult& c = out.add("search succeeds exactly on non-metacyclic groups",
                             S.has_value() == !w.metacyclic ? Status::pass
                                                            : Status::fail);
    c.observed = {{"metacyclic", w.metacyclic}, {"found", S.has_value()}};
    if (c.status == Status::fail)
      c.witness = w.metacyclic ? "metacyclic group contains an exponent-q cube"
                               : "non-metacyclic group yields no exponent-q cube";
  }
  if (!S) {
    out.add("witness has order q^3 and exponent q", Status::skip).witness =
        "no subgroup found";
  } else {
    bool ok = S->order() == q * q * q && exponent_of(G, S->elems) == q;
    CheckResult& c = out.add("witness has order q^3 and exponent q",
                             ok ? Status::pass : Status::fail);
    c.observed = {{"order", S->order()}, {"exponent", exponent_of(G, S->elems)}};
  }
  r.checks = std::move(out);
}

inline void run_lemma_submet(const nlohmann::json& config, ScenarioReport& r) {
  FrobeniusSpec fx = frobenius_from_json(config.at("frobenius"));
  const FiniteGroup& W = fx.whole;
  if (r.title.empty()) r.title = W.name;
  CheckSet out;

  std::optional<FrobeniusStructure> fs;
  try {
    fs = check_frobenius(W, make_subgroup(W, fx.kernel_elems),
                         make_subgroup(W, fx.complement_elems));
    out.add("whole group is a Frobenius group", Status::pass, true);
  } catch (const fixed_point_witness& e) {
    out.add("whole group is a Frobenius group", Status::fail, true).witness =
        e.what();
  }
  out.add("whole group is non-metacyclic",
          !is_metacyclic(W).metacyclic ? Status::pass : Status::fail, true);

  const char* conclusion = "kernel contains a normal rank-two elementary abelian subgroup";
  if (out.hypothesis_failed()) {
    out.add(conclusion, Status::skip);
    r.checks = std::move(out);
    return;
  }

  SubgroupGroup F = subgroup_as_group(fs->kernel);
  std::optional<Subgroup> E = find_normal_rank2(F.group);
  if (!E) {
    out.add(conclusion, Status::fail).witness =
        "no normal rank-two subgroup in the kernel";
  } else {
    long long p = factorize(E->order())[0].first;
    bool ok = E->order() == p * p && is_normal(F.group, *E) &&
              is_elementary_abelian_set(F.group, E->elems, p);
    CheckResult& c = out.add(conclusion, ok ? Status::pass : Status::fail);
    c.observed = {{"kernel_order", F.group.n}, {"p", p},
                  {"subgroup_order", E->order()}};
  }
  r.checks = std::move(out);
}

inline void run_frobenius_generation(const nlohmann::json& config,
                                     ScenarioReport& r) {
  FrobeniusSpec fx = frobenius_from_json(config.at("frobenius"));
  ActionSetup s = action_setup_with_actor(std::move(fx.whole), config);
  if (r.title.empty()) r.title = s.actor.name + " on " + s.target.name;
  FrobeniusStructure fs =
      check_frobenius(s.actor, make_subgroup(s.actor, fx.kernel_elems),
                      make_subgroup(s.actor, fx.complement_elems));
  r.checks = frobenius_generation_check(s, fs);
}

inline void run_grading_criterion(const nlohmann::json& config,
                                  ScenarioReport& r) {
  LieRing L = lie_ring_from_json(config.at("lie"));
  int omega = -1;
  if (config.contains("extend")) {
    ExtendedScalars ext = extend_scalars(L, config.at("extend").get<long long>());
    L = std::move(ext.ring);
    omega = ext.omega;
  }
  long long p = config.at("p").get<long long>();
  Mat phi = mat_from_json(config.at("phi"), L.dim, L.field);
  if (r.title.empty())
    r.title = L.name.empty() ? "dim " + std::to_string(L.dim) + " over GF(" +
                                   std::to_string(L.field.size) + ")"
                             : L.name;

  Grading g = eigenspace_grading(L, phi, p);
  CheckSet out;
  {
    CheckResult& c = out.add("eigenspace grading constructed", Status::pass);
    std::vector<int> dims;
    for (const Mat& m : g.components) dims.push_back(m.rows);
    c.observed = {{"p", p},
                  {"omega", g.omega},
                  {"field", {{"q", L.field.q}, {"d", L.field.d}}},
                  {"component_dims", dims}};
    if (omega >= 0 && omega != g.omega)
      throw std::logic_error("extension and grading disagree on the root of unity");
  }
  out.append(criterion_report(g));
  r.checks = std::move(out);
}

inline void run_decomposition_L0(const nlohmann::json& config, ScenarioReport& r) {
  LieRing L = lie_ring_from_json(config.at("lie"));
  if (config.contains("extend"))
    L = extend_scalars(L, config.at("extend").get<long long>()).ring;
  long long p = config.at("p").get<long long>();
  FrobeniusSpec fx = frobenius_from_json(config.at("frobenius"));
  std::vector<std::pair<int, Mat>> gen_images;
  for (const nlohmann::json& m : config.at("matrices"))
    gen_images.emplace_back(m.at("element").get<int>(),
                            mat_from_json(m.at("matrix"), L.dim, L.field));
  FrobeniusLieAction fa = make_frobenius_lie_action(
      L, p, fx.whole, fx.kernel_elems, fx.complement_elems, gen_images,
      config.at("z_gen").get<int>(), config.at("h_gen").get<int>());
  if (r.title.empty())
    r.title = (L.name.empty() ? "dim " + std::to_string(L.dim) : L.name) +
              " under " + fx.whole.name;

  CheckSet out = verify_L0_decomposition(fa);
  if (config.contains("d"))
    out.append(verify_CF_vanishing(fa, config.at("d").get<int>()));
  std::optional<int> dl = lie_derived_length(fa.grading.ring);
  if (dl && *dl <= 2)
    out.append(metabelian_residue_coverage(fa));
  else
    out.add("components recover from complement-orbit spans", Status::skip)
        .witness = "ring is not metabelian";
  r.checks = std::move(out);
}

inline void run_theorem_main1(const nlohmann::json& config, ScenarioReport& r) {
  ActionSetup s = action_setup_from_json(config.at("action"));
  const FiniteGroup& A = s.actor;
  const FiniteGroup& G = s.target;
  if (r.title.empty()) r.title = A.name + " acting on " + G.name;
  CheckSet out;

  auto fac = factorize(A.n);
  bool qgroup = fac.size() == 1;
  long long q = qgroup ? fac[0].first : 0;
  {
    CheckResult& h = out.add("acting group is a q-group for a prime q exceeding three",
                             qgroup && q > 3 ? Status::pass : Status::fail, true);
    h.observed = {{"actor_order", A.n}};
    if (qgroup) h.observed["q"] = q;
  }
  out.add("acting group is non-metacyclic",
          !is_metacyclic(A).metacyclic ? Status::pass : Status::fail, true);
  out.add("action is coprime", s.coprime ? Status::pass : Status::fail, true);

  int c = 0;
  {
    bool all_nilpotent = true;
    std::string witness;
    for (int a = 1; a < A.n; ++a) {
      Subgroup Ca = fixed_points(s, {a});
      std::optional<int> cls = nilpotency_class(subgroup_as_group(Ca).group);
      if (!cls) {
        all_nilpotent = false;
        witness = "actor element " + std::to_string(a);
        break;
      }
      c = std::max(c, *cls);
    }
    CheckResult& h = out.add("fixed-point subgroups are nilpotent",
                             all_nilpotent ? Status::pass : Status::fail, true);
    h.witness = witness;
    h.observed = {{"max_class", c}};
  }

  const char* conclusion = "target group is nilpotent";
  if (out.hypothesis_failed()) {
    out.add(conclusion, Status::skip);
    r.checks = std::move(out);
    return;
  }
  std::optional<int> cls = nilpotency_class(G);
  CheckResult& cc = out.add(conclusion, cls ? Status::pass : Status::fail);
  if (cls) {
    cc.observed = {{"class", *cls},
                   {"gamma_infinity_order", gamma_infinity(G).order()},
                   {"second_fitting_index",
                    G.n / fitting_subgroup(G, 2, kGroupOrderCap).order()}};
  } else {
    cc.witness = "lower central series stabilizes at order " +
                 std::to_string(gamma_infinity(G).order());
  }
  r.checks = std::move(out);
}

inline void run_theorem_main2(const nlohmann::json& config, ScenarioReport& r) {
  FrobeniusSpec fx = frobenius_from_json(config.at("frobenius"));
  ActionSetup s = action_setup_with_actor(std::move(fx.whole), config);
  const FiniteGroup& FH = s.actor;
  const FiniteGroup& G = s.target;
  if (r.title.empty()) r.title = FH.name + " acting on " + G.name;

  {
    bool trivial = true;
    for (int a = 0; a < FH.n && trivial; ++a)
      for (int x = 0; x < G.n; ++x)
        if (s.rep[a][x] != x) { trivial = false; break; }
    if (trivial)
      throw config_error("every group element acts trivially; the pipeline has nothing to grade by");
  }

  Subgroup kernel = make_subgroup(FH, fx.kernel_elems);
  Subgroup complement = make_subgroup(FH, fx.complement_elems);
  CheckSet out;

  // Hypotheses.
  std::optional<FrobeniusStructure> fs;
  try {
    fs = check_frobenius(FH, kernel, complement);
    out.add("whole group is a Frobenius group", Status::pass, true);
  } catch (const fixed_point_witness& e) {
    out.add("whole group is a Frobenius group", Status::fail, true).witness =
        e.what();
  }
  {
    ChiefSeries cs = is_supersolvable(FH);
    CheckResult& h = out.add("whole group is supersolvable",
                             cs.supersolvable ? Status::pass : Status::fail, true);
    if (cs.supersolvable) h.observed = {{"chief_factors", cs.factor_orders}};
  }
  out.add("whole group is non-metacyclic",
          !is_metacyclic(FH).metacyclic ? Status::pass : Status::fail, true);
  out.add("action is coprime", s.coprime ? Status::pass : Status::fail, true);

  int c = 0;
  {
    bool ok = true;
    std::string witness;
    std::optional<int> ch =
        nilpotency_class(subgroup_as_group(fixed_points(s, complement.elems)).group);
    if (!ch) { ok = false; witness = "the complement"; }
    else c = *ch;
    for (int x : kernel.elems) {
      if (x == 0 || !ok) continue;
      std::optional<int> cx =
          nilpotency_class(subgroup_as_group(fixed_points(s, {x})).group);
      if (!cx) { ok = false; witness = "kernel element " + std::to_string(x); }
      else c = std::max(c, *cx);
    }
    CheckResult& h = out.add(
        "fixed-point subgroups of the complement and kernel elements are nilpotent",
        ok ? Status::pass : Status::fail, true);
    h.witness = witness;
    h.observed = {{"max_class", c}};
  }

  // Conclusions, staged; an early failure skips the rest.
  const std::vector<std::string> stages = {
      "target group is nilpotent",
      "kernel contains a normal rank-two elementary abelian subgroup",
      "associated Lie ring has the same nilpotency class",
      "group action induces Lie ring automorphisms",
      "Lie fixed subrings respect the class bound",
      "a normal grading subgroup exists inside the kernel",
      "complement is cyclic",
      "scalars extend to a field with a root of unity",
      "kernel generator grades the ring and the complement rotates it",
      "criterion analysis",
      "zero-component decomposition",
      "kernel centralizer analysis",
      "metabelian coverage",
  };
  size_t done = 0;
  auto skip_rest = [&](const std::string& why) {
    for (size_t i = done; i < stages.size(); ++i)
      out.add(stages[i], Status::skip).witness = why;
    r.checks = std::move(out);
  };
  if (out.hypothesis_failed()) return skip_rest("a hypothesis failed");

  // Nilpotency of the target.
  std::optional<int> gcls = nilpotency_class(G);
  {
    CheckResult& cc =
        out.add(stages[done], gcls ? Status::pass : Status::fail);
    if (gcls) cc.observed = {{"class", *gcls}};
    else cc.witness = "lower central series stabilizes at order " +
                      std::to_string(gamma_infinity(G).order());
    ++done;
  }
  if (!gcls) return skip_rest("target is not nilpotent");

  // Reduction inside the kernel.
  long long p = 0;
  bool kernel_is_rank2 = false;
  {
    SubgroupGroup F = subgroup_as_group(fs->kernel);
    std::optional<Subgroup> E = find_normal_rank2(F.group);
    if (!E) {
      out.add(stages[done], Status::fail).witness =
          "no normal rank-two subgroup in the kernel";
      ++done;
      return skip_rest("kernel reduction failed");
    }
    p = factorize(E->order())[0].first;
    kernel_is_rank2 = E->order() == F.group.n;
    CheckResult& cc = out.add(stages[done], Status::pass);
    cc.observed = {{"p", p}, {"covers_kernel", kernel_is_rank2}};
    ++done;
  }

  // Associated Lie ring.
  AssociatedLieRing A = associated_lie_ring(G);
  {
    std::optional<int> lcls = lie_class(A.ring);
    CheckResult& cc = out.add(
        stages[done], lcls && *lcls == *gcls ? Status::pass : Status::fail);
    cc.observed = {{"group_class", *gcls}, {"dim", A.ring.dim}};
    if (lcls) cc.observed["lie_class"] = *lcls;
    ++done;
  }

  // Induced matrices.
  std::vector<Mat> mats;
  for (int g = 0; g < FH.n; ++g)
    mats.push_back(induced_lie_automorphism(A, s.rep[g]));
  {
    CheckResult& cc = out.add(stages[done], Status::pass);
    cc.observed = {{"dim", A.ring.dim}};
    ++done;
  }

  // Fixed subrings on the Lie side.
  {
    std::vector<Mat> comp_mats;
    for (int e : complement.elems) comp_mats.push_back(mats[e]);
    int lie_c = 0;
    bool ok = true;
    std::optional<int> ch = lie_restricted_class(
        A.ring, fixed_space(A.ring.field, A.ring.dim, comp_mats));
    if (!ch || *ch > c) ok = false;
    else lie_c = *ch;
    for (int x : kernel.elems) {
      if (x == 0 || !ok) continue;
      std::optional<int> cx = lie_restricted_class(
          A.ring, fixed_space(A.ring.field, A.ring.dim, {mats[x]}));
      if (!cx || *cx > c) ok = false;
      else lie_c = std::max(lie_c, *cx);
    }
    CheckResult& cc = out.add(stages[done], ok ? Status::pass : Status::fail);
    cc.observed = {{"bound", c}, {"max_lie_class", lie_c}};
    ++done;
  }

  // Grading subgroup.
  int z_gen = -1;
  {
    std::optional<Subgroup> Z = choose_Z(*fs, p);
    if (!Z) {
      out.add(stages[done], Status::fail).witness =
          "no order-p subgroup of the kernel is normal in the whole group";
      ++done;
      return skip_rest("no grading subgroup");
    }
    z_gen = Z->elems[1];
    CheckResult& cc = out.add(stages[done], Status::pass);
    cc.observed = {{"z_gen", z_gen}, {"p", p}};
    ++done;
  }

  // Cyclic complement.
  int h_gen = -1;
  for (int h : complement.elems)
    if (element_order(FH, h) == complement.order()) { h_gen = h; break; }
  {
    CheckResult& cc =
        out.add(stages[done], h_gen >= 0 ? Status::pass : Status::fail);
    if (h_gen >= 0) cc.observed = {{"h_gen", h_gen}, {"order", complement.order()}};
    else cc.witness = "no complement element generates it";
    ++done;
  }
  if (h_gen < 0) return skip_rest("complement is not cyclic");

  // Scalar extension.
  ExtendedScalars ext = extend_scalars(A.ring, p);
  {
    CheckResult& cc = out.add(stages[done], Status::pass);
    cc.observed = {{"q", ext.ring.field.q}, {"d", ext.ring.field.d},
                   {"omega", ext.omega}};
    ++done;
  }

  // Graded Frobenius action (matrix entries are prime-subfield indices, so
  // they carry over to the extension verbatim).
  std::optional<FrobeniusLieAction> fa;
  try {
    fa = make_frobenius_lie_action(ext.ring, p, FH, kernel.elems,
                                   complement.elems, mats, z_gen, h_gen);
    CheckResult& cc = out.add(stages[done], Status::pass);
    std::vector<int> dims;
    for (const Mat& m : fa->grading.components) dims.push_back(m.rows);
    cc.observed = {{"r", fa->r}, {"component_dims", dims}};
    ++done;
  } catch (const lie_error& e) {
    out.add(stages[done], Status::fail).witness = e.what();
    ++done;
    return skip_rest("graded action construction failed");
  }

  out.append(criterion_report(fa->grading));
  ++done;
  out.append(verify_L0_decomposition(*fa));
  ++done;
  if (kernel_is_rank2)
    out.append(verify_CF_vanishing(*fa, std::max(c, 1)));
  else
    out.add(stages[done], Status::skip).witness =
        "kernel is not elementary abelian of rank two";
  ++done;
  std::optional<int> dl = lie_derived_length(ext.ring);
  if (dl && *dl <= 2)
    out.append(metabelian_residue_coverage(*fa));
  else
    out.add(stages[done], Status::skip).witness = "ring is not metabelian";
  r.checks = std::move(out);
}

inline void run_order16_search(ScenarioReport& r) {
  if (r.title.empty()) r.title = "order sixteen family";
  std::vector<FiniteGroup> family;
  for (const char* spec : {
           "cyclic(16)",
           "product(cyclic(8),cyclic(2))",
           "product(cyclic(4),cyclic(4))",
           "product(cyclic(4),elem(2,2))",
           "elem(2,4)",
           "dihedral(8)",
           "semidirect(cyclic(8),cyclic(2),scalar(3))",
           "semidirect(cyclic(8),cyclic(2),scalar(5))",
           "semidirect(cyclic(8),cyclic(2),inversion)",
           "semidirect(cyclic(4),cyclic(4),scalar(3))",
           "semidirect(elem(2,2),cyclic(4),perm([0,2,1,3]))",
           "product(quaternion(8),cyclic(2))",
       })
    family.push_back(construct_group(spec));
  {
    // Central product Q8 o C4: quotient of Q8 x C4 by the diagonal order-2
    // subgroup <(a^2, 2)>.
    FiniteGroup P = construct_group("product(quaternion(8),cyclic(4))");
    Quotient q = quotient_group(P, subgroup_generated(P, {2 * 4 + 2}));
    FiniteGroup pauli = std::move(q.group);
    pauli.name = "centralproduct(quaternion(8),cyclic(4))";
    family.push_back(std::move(pauli));
  }

  nlohmann::json table = nlohmann::json::array();
  std::vector<std::string> candidates;
  for (const FiniteGroup& G : family) {
    bool metacyclic = is_metacyclic(G).metacyclic;
    bool cube = find_exponent_q_cube(G, 2).has_value();
    bool odd_fpf = false;
    for (const Automorphism& a : automorphism_group(G)) {
      int order = 1;
      std::vector<char> seen(G.n, 0);
      bool fpf = true;
      for (int x = 0; x < G.n; ++x) {
        if (x > 0 && a.perm[x] == x) fpf = false;
        if (seen[x]) continue;
        int len = 0, y = x;
        do { seen[y] = 1; y = a.perm[y]; ++len; } while (y != x);
        order = static_cast<int>(std::lcm(order, len));
      }
      if (fpf && order > 1 && order % 2 == 1) { odd_fpf = true; break; }
    }
    bool candidate = !metacyclic && !cube && odd_fpf;
    table.push_back({{"group", G.name},
                     {"metacyclic", metacyclic},
                     {"exponent_two_cube", cube},
                     {"odd_order_fpf_automorphism", odd_fpf},
                     {"candidate", candidate}});
    if (candidate) candidates.push_back(G.name);
  }

  CheckSet out;
  {
    CheckResult& c = out.add("family scan completed", Status::pass);
    c.observed = {{"groups", table}};
  }
  {
    CheckResult& c = out.add("candidates reported", Status::pass);
    c.observed = {{"candidates", candidates}};
    if (candidates.empty())
      c.witness = "no family member passes all three filters";
  }
  r.checks = std::move(out);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Dispatch

inline ScenarioReport run_scenario(const nlohmann::json& config, int cap = 0) {
  if (!config.is_object() || !config.contains("kind"))
    throw config_error("scenario config needs a \"kind\"");
  std::string kind = config.at("kind").get<std::string>();
  ScenarioReport r;
  r.kind = kind;
  r.config = config;
  r.title = config.value("title", "");

  auto t0 = std::chrono::steady_clock::now();
  if (kind == "coprime_facts") detail::run_coprime_facts(config, cap, r);
  else if (kind == "lemma_metacyclic") detail::run_lemma_metacyclic(config, r);
  else if (kind == "lemma_regularity") detail::run_lemma_regularity(config, r);
  else if (kind == "lemma_q_cube") detail::run_lemma_q_cube(config, r);
  else if (kind == "lemma_submet") detail::run_lemma_submet(config, r);
  else if (kind == "frobenius_generation") detail::run_frobenius_generation(config, r);
  else if (kind == "grading_criterion") detail::run_grading_criterion(config, r);
  else if (kind == "decomposition_L0") detail::run_decomposition_L0(config, r);
  else if (kind == "theorem_main1_hypotheses") detail::run_theorem_main1(config, r);
  else if (kind == "theorem_main2_pipeline") detail::run_theorem_main2(config, r);
  else if (kind == "order16_search") detail::run_order16_search(r);
  else throw config_error("unknown scenario kind '" + kind + "'");
  r.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

/// Accepts a single scenario object, an array of them, or
/// {"scenarios": [...]}. Reports come back in config order.
inline std::vector<ScenarioReport> run_config(const nlohmann::json& root,
                                              int cap = 0) {
  std::vector<ScenarioReport> out;
  if (root.is_array()) {
    for (const nlohmann::json& c : root) out.push_back(run_scenario(c, cap));
  } else if (root.is_object() && root.contains("scenarios")) {
    for (const nlohmann::json& c : root.at("scenarios"))
      out.push_back(run_scenario(c, cap));
  } else {
    out.push_back(run_scenario(root, cap));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Builtin suites: curated instances per kind, every hypothesis satisfied, so
// a healthy library reports all pass (plus documented skips).

inline std::vector<std::string> builtin_ids() {
  return {"coprime_facts",       "lemma_metacyclic",
          "lemma_regularity",    "lemma_q_cube",
          "lemma_submet",        "frobenius_generation",
          "grading_criterion",   "decomposition_L0",
          "theorem_main1_hypotheses", "theorem_main2_pipeline",
          "order16_search"};
}

namespace detail {

inline nlohmann::json metabelian_five_dim() {
  return {{"q", 11}, {"dim", 5}, {"name", "metabelian witness"},
          {"brackets", {{1, 3, 0, 1}, {0, 1, 2, 1}, {0, 3, 4, 1}}}};
}

inline nlohmann::json inversion_frobenius_25() {
  return {{"kernel", "elem(5,2)"}, {"complement", "cyclic(2)"},
          {"action", "inversion"}};
}

inline std::vector<int> quaternion_rotation() {
  // a -> b -> ab -> a on Q8 (index a^i b^j = i + 4j); fixes the center.
  return {0, 4, 2, 6, 5, 1, 7, 3};
}

}  // namespace detail

inline nlohmann::json builtin_config(const std::string& id) {
  using nlohmann::json;
  json scenarios = json::array();
  auto act = [](const char* actor, const char* target, const char* action) {
    return json{{"kind", "coprime_facts"},
                {"action", {{"actor", actor}, {"target", target}, {"action", action}}}};
  };

  if (id == "coprime_facts") {
    scenarios.push_back(act("cyclic(2)", "cyclic(5)", "inversion"));
    scenarios.push_back(act("cyclic(2)", "cyclic(7)", "inversion"));
    scenarios.push_back(act("cyclic(2)", "cyclic(9)", "inversion"));
    scenarios.push_back(act("cyclic(2)", "cyclic(15)", "inversion"));
    scenarios.push_back(act("cyclic(2)", "elem(5,2)", "inversion"));
    scenarios.push_back(act("cyclic(2)", "elem(7,2)", "inversion"));
    scenarios.push_back(act("cyclic(2)", "elem(3,2)", "matrix([[0,1],[1,0]])"));
    scenarios.push_back(act("cyclic(2)", "elem(5,2)", "matrix([[0,1],[1,0]])"));
    scenarios.push_back(act("cyclic(3)", "cyclic(7)", "scalar(2)"));
    scenarios.push_back(act("cyclic(3)", "elem(7,2)", "matrix([[0,6],[1,6]])"));
    scenarios.push_back(act("cyclic(3)", "cyclic(5)", "scalar(1)"));
    scenarios.push_back(act("cyclic(4)", "cyclic(5)", "scalar(2)"));
    scenarios.push_back(act("cyclic(4)", "elem(5,2)", "scalar(2)"));
    scenarios.push_back(act("cyclic(4)", "elem(5,2)", "matrix([[2,0],[0,3]])"));
    scenarios.push_back(act("cyclic(4)", "extraspecial(5)",
                            "matrix([[2,0,0],[0,2,0],[0,0,4]])"));
    scenarios.push_back(act("cyclic(6)", "elem(7,2)", "scalar(3)"));
    scenarios.push_back(act("cyclic(5)", "elem(11,2)", "scalar(3)"));
    {
      std::vector<int> rot = detail::quaternion_rotation();
      scenarios.push_back(
          {{"kind", "coprime_facts"},
           {"action", {{"actor", "cyclic(3)"}, {"target", "quaternion(8)"},
                       {"generators", {{{"element", 1}, {"perm", rot}}}}}}});
      std::vector<int> lifted(40);
      for (int g = 0; g < 8; ++g)
        for (int h = 0; h < 5; ++h) lifted[g * 5 + h] = rot[g] * 5 + h;
      scenarios.push_back(
          {{"kind", "coprime_facts"},
           {"action", {{"actor", "cyclic(3)"},
                       {"target", "product(quaternion(8),cyclic(5))"},
                       {"generators", {{{"element", 1}, {"perm", lifted}}}}}}});
    }
    auto two_gen = [](const char* actor, const char* target, int hi,
                      const char* act_hi, int lo, const char* act_lo) {
      return json{{"kind", "coprime_facts"},
                  {"action",
                   {{"actor", actor},
                    {"target", target},
                    {"generators",
                     {{{"element", hi}, {"action", act_hi}},
                      {{"element", lo}, {"action", act_lo}}}}}}};
    };
    scenarios.push_back(two_gen("elem(2,2)", "elem(5,2)", 2,
                                "matrix([[4,0],[0,1]])", 1,
                                "matrix([[1,0],[0,4]])"));
    scenarios.push_back(two_gen("elem(2,2)", "elem(3,2)", 2,
                                "matrix([[2,0],[0,1]])", 1,
                                "matrix([[1,0],[0,2]])"));
    scenarios.push_back(two_gen("elem(2,2)", "elem(7,2)", 2,
                                "matrix([[6,0],[0,1]])", 1,
                                "matrix([[1,0],[0,6]])"));
    scenarios.push_back(two_gen("elem(5,2)", "elem(11,2)", 5,
                                "matrix([[3,0],[0,1]])", 1,
                                "matrix([[1,0],[0,3]])"));
    scenarios.push_back(two_gen("dihedral(3)", "elem(7,2)", 1,
                                "matrix([[0,6],[1,6]])", 3,
                                "matrix([[0,1],[1,0]])"));
    return json{{"scenarios", scenarios}};
  }

  static const char* five_groups[] = {
      "cyclic(5)",
      "cyclic(25)",
      "cyclic(125)",
      "cyclic(625)",
      "elem(5,2)",
      "elem(5,3)",
      "elem(5,4)",
      "product(cyclic(25),cyclic(5))",
      "product(cyclic(125),cyclic(5))",
      "product(cyclic(25),cyclic(25))",
      "product(cyclic(25),elem(5,2))",
      "extraspecial(5)",
      "product(extraspecial(5),cyclic(5))",
      "semidirect(cyclic(25),cyclic(5),scalar(6))",
  };
  if (id == "lemma_metacyclic" || id == "lemma_regularity" || id == "lemma_q_cube") {
    for (const char* g : five_groups)
      scenarios.push_back({{"kind", id}, {"group", g}});
    return json{{"scenarios", scenarios}};
  }

  if (id == "lemma_submet") {
    scenarios.push_back({{"kind", id},
                         {"frobenius", {{"kernel", "elem(3,2)"},
                                        {"complement", "cyclic(2)"},
                                        {"action", "inversion"}}}});
    scenarios.push_back({{"kind", id},
                         {"frobenius", {{"kernel", "elem(5,2)"},
                                        {"complement", "cyclic(4)"},
                                        {"action", "scalar(2)"}}}});
    scenarios.push_back(
        {{"kind", id},
         {"frobenius", {{"kernel", "elem(5,2)"},
                        {"complement", "cyclic(3)"},
                        {"action", "matrix([[0,4],[1,4]])"}}}});
    scenarios.push_back(
        {{"kind", id},
         {"frobenius", {{"kernel", "extraspecial(7)"},
                        {"complement", "cyclic(3)"},
                        {"action", "matrix([[2,0,0],[0,2,0],[0,0,4]])"}}}});
    return json{{"scenarios", scenarios}};
  }

  if (id == "frobenius_generation") {
    scenarios.push_back(
        {{"kind", id},
         {"frobenius", {{"kernel", "cyclic(3)"}, {"complement", "cyclic(2)"},
                        {"action", "inversion"}}},
         {"target", "elem(7,2)"},
         {"generators",
          {{{"element", 2}, {"action", "matrix([[0,6],[1,6]])"}},
           {{"element", 1}, {"action", "matrix([[0,1],[1,0]])"}}}}});
    return json{{"scenarios", scenarios}};
  }

  if (id == "grading_criterion") {
    auto inst = [](json lie, json phi, long long p) {
      return json{{"kind", "grading_criterion"}, {"lie", std::move(lie)},
                  {"phi", std::move(phi)}, {"p", p}};
    };
    scenarios.push_back(inst({{"q", 11}, {"dim", 2}, {"name", "abelian pair"}},
                             {{3, 0}, {0, 9}}, 5));
    scenarios.push_back(inst({{"q", 11}, {"dim", 2}, {"name", "abelian pair"}},
                             {{3, 0}, {0, 4}}, 5));
    scenarios.push_back(inst({{"q", 11}, {"dim", 3}, {"name", "heisenberg"},
                              {"brackets", {{0, 1, 2, 1}}}},
                             {{3, 0, 0}, {0, 9, 0}, {0, 0, 5}}, 5));
    scenarios.push_back(inst(detail::metabelian_five_dim(),
                             {{1, 0, 0, 0, 0},
                              {0, 3, 0, 0, 0},
                              {0, 0, 3, 0, 0},
                              {0, 0, 0, 4, 0},
                              {0, 0, 0, 0, 4}},
                             5));
    scenarios.push_back(inst({{"q", 11}, {"dim", 2}, {"name", "affine line"},
                              {"brackets", {{1, 0, 1, 1}}}},
                             {{1, 0}, {0, 3}}, 5));
    scenarios.push_back(inst({{"q", 11}, {"dim", 3}, {"name", "heisenberg"},
                              {"brackets", {{0, 1, 2, 1}}}},
                             {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 5));
    auto ext_inst = [](json lie, json phi) {
      return json{{"kind", "grading_criterion"}, {"lie", std::move(lie)},
                  {"extend", 5}, {"phi", std::move(phi)}, {"p", 5}};
    };
    scenarios.push_back(ext_inst({{"q", 2}, {"dim", 4}, {"name", "fourth roots"}},
                                 {{0, 0, 0, 1},
                                  {1, 0, 0, 1},
                                  {0, 1, 0, 1},
                                  {0, 0, 1, 1}}));
    scenarios.push_back(
        ext_inst({{"q", 2}, {"dim", 5}, {"name", "trace form heisenberg"},
                  {"brackets",
                   {{0, 3, 4, 1}, {1, 2, 4, 1}, {1, 3, 4, 1}, {2, 3, 4, 1}}}},
                 {{0, 1, 0, 0, 0},
                  {0, 1, 1, 0, 0},
                  {0, 0, 1, 1, 0},
                  {1, 0, 0, 1, 0},
                  {0, 0, 0, 0, 1}}));
    scenarios.push_back(ext_inst({{"q", 2}, {"dim", 4}, {"name", "cube multiplier"}},
                                 {{0, 1, 0, 0},
                                  {0, 1, 1, 0},
                                  {0, 0, 1, 1},
                                  {1, 0, 0, 1}}));
    scenarios.push_back(ext_inst({{"q", 2}, {"dim", 2}, {"name", "extended pair"}},
                                 {{1, 0}, {0, 1}}));
    return json{{"scenarios", scenarios}};
  }

  if (id == "decomposition_L0") {
    scenarios.push_back(
        {{"kind", id},
         {"lie", detail::metabelian_five_dim()},
         {"p", 5},
         {"frobenius", detail::inversion_frobenius_25()},
         {"z_gen", 10},
         {"h_gen", 1},
         {"d", 3},
         {"matrices",
          {{{"element", 10},
            {"matrix",
             {{1, 0, 0, 0, 0},
              {0, 3, 0, 0, 0},
              {0, 0, 3, 0, 0},
              {0, 0, 0, 4, 0},
              {0, 0, 0, 0, 4}}}},
           {{"element", 2},
            {"matrix",
             {{1, 0, 0, 0, 0},
              {0, 1, 0, 0, 0},
              {0, 0, 1, 0, 0},
              {0, 0, 0, 1, 0},
              {0, 0, 0, 0, 1}}}},
           {{"element", 1},
            {"matrix",
             {{10, 0, 0, 0, 0},
              {0, 0, 0, 1, 0},
              {0, 0, 0, 0, 10},
              {0, 1, 0, 0, 0},
              {0, 0, 10, 0, 0}}}}}}});
    scenarios.push_back(
        {{"kind", id},
         {"lie", {{"q", 11}, {"dim", 2}, {"name", "abelian pair"}}},
         {"p", 5},
         {"frobenius", detail::inversion_frobenius_25()},
         {"z_gen", 10},
         {"h_gen", 1},
         {"d", 1},
         {"matrices",
          {{{"element", 10}, {"matrix", {{3, 0}, {0, 4}}}},
           {{"element", 2}, {"matrix", {{4, 0}, {0, 3}}}},
           {{"element", 1}, {"matrix", {{0, 1}, {1, 0}}}}}}});
    return json{{"scenarios", scenarios}};
  }

  if (id == "theorem_main1_hypotheses") {
    scenarios.push_back(
        {{"kind", id},
         {"action",
          {{"actor", "elem(5,3)"},
           {"target", "extraspecial(11)"},
           {"generators",
            {{{"element", 25}, {"action", "matrix([[3,0,0],[0,1,0],[0,0,3]])"}},
             {{"element", 5}, {"action", "matrix([[1,0,0],[0,3,0],[0,0,3]])"}},
             {{"element", 1}, {"action", "scalar(1)"}}}}}}});
    scenarios.push_back(
        {{"kind", id},
         {"action",
          {{"actor", "elem(5,3)"},
           {"target", "elem(11,3)"},
           {"generators",
            {{{"element", 25}, {"action", "matrix([[3,0,0],[0,1,0],[0,0,1]])"}},
             {{"element", 5}, {"action", "matrix([[1,0,0],[0,3,0],[0,0,1]])"}},
             {{"element", 1}, {"action", "matrix([[1,0,0],[0,1,0],[0,0,3]])"}}}}}}});
    return json{{"scenarios", scenarios}};
  }

  if (id == "theorem_main2_pipeline") {
    scenarios.push_back(
        {{"kind", id},
         {"frobenius", {{"kernel", "elem(3,2)"}, {"complement", "cyclic(2)"},
                        {"action", "inversion"}}},
         {"target", "elem(7,2)"},
         {"generators",
          {{{"element", 6}, {"action", "matrix([[0,6],[1,6]])"}},
           {{"element", 2}, {"action", "scalar(1)"}},
           {{"element", 1}, {"action", "matrix([[0,1],[1,0]])"}}}}});
    return json{{"scenarios", scenarios}};
  }

  if (id == "order16_search") {
    scenarios.push_back({{"kind", id}});
    return json{{"scenarios", scenarios}};
  }

  throw config_error("unknown builtin id '" + id + "'");
}

inline std::vector<ScenarioReport> run_builtin(const std::string& id, int cap = 0) {
  if (id == "all") {
    std::vector<ScenarioReport> out;
    for (const std::string& one : builtin_ids())
      for (ScenarioReport& r : run_builtin(one, cap)) out.push_back(std::move(r));
    return out;
  }
  return run_config(builtin_config(id), cap);
}

}  // namespace finalg
