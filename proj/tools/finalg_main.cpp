// finalg: exact verification of finite-group actions, associated Lie rings,
// and graded nilpotency criteria, from catalog specs, Cayley-table files, and
// JSON scenario configs.
//
// Exit codes: 0 all checks pass, 1 any check fails, 2 abstentions only,
// 3 usage or configuration error.

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "finalg/group_io.hpp"
#include "finalg/lie_io.hpp"
#include "finalg/report.hpp"
#include "finalg/scenario.hpp"

namespace {

using finalg::CheckResult;
using finalg::CheckSet;
using finalg::config_error;
using finalg::ScenarioReport;
using finalg::Status;

struct Emit {
  std::string format = "text";
  std::string out_path;
  bool timings = false;

  int operator()(const std::vector<ScenarioReport>& reports) const {
    std::string payload = format == "json"
                              ? finalg::batch_to_json(reports, timings).dump(2) + "\n"
                              : finalg::batch_to_text(reports);
    if (out_path.empty()) {
      std::cout << payload;
    } else {
      std::ofstream f(out_path);
      if (!f) throw config_error("cannot write " + out_path);
      f << payload;
    }
    return finalg::exit_code_for(reports);
  }
};

finalg::FiniteGroup load_group(const std::string& file, const std::string& spec) {
  if (file.empty() == spec.empty())
    throw config_error("provide exactly one of --file and --spec");
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw config_error("cannot open group file " + file);
    return finalg::read_cayley(in);
  }
  return finalg::construct_group(spec);
}

nlohmann::json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw config_error(what + ": " + e.what());
  }
}

ScenarioReport run_validate(const std::string& file, const std::string& spec) {
  ScenarioReport r;
  r.kind = "validate";
  r.title = file.empty() ? spec : file;
  CheckSet out;
  try {
    finalg::FiniteGroup G = load_group(file, spec);
    CheckResult& c = out.add("table is a valid group", Status::pass);
    c.observed = {{"name", G.name}, {"order", G.n}};
  } catch (const config_error&) {
    throw;
  } catch (const std::exception& e) {
    out.add("table is a valid group", Status::fail).witness = e.what();
  }
  r.checks = std::move(out);
  return r;
}

ScenarioReport run_analyze(const std::string& file, const std::string& spec,
                           const std::string& cayley_out) {
  finalg::FiniteGroup G = load_group(file, spec);
  if (!cayley_out.empty()) {
    std::ofstream f(cayley_out);
    if (!f) throw config_error("cannot write " + cayley_out);
    finalg::write_cayley(f, G);
  }

  ScenarioReport r;
  r.kind = "analyze-group";
  r.title = G.name.empty() ? "order " + std::to_string(G.n) : G.name;
  CheckSet out;
  {
    CheckResult& c = out.add("group validates", Status::pass);
    c.observed = {{"name", G.name},
                  {"order", G.n},
                  {"abelian", finalg::is_abelian(G)},
                  {"exponent", finalg::exponent(G)},
                  {"center_order", finalg::center(G).order()}};
  }
  {
    CheckResult& c = out.add("series computed", Status::pass);
    std::optional<int> cls = finalg::nilpotency_class(G);
    std::vector<finalg::Subgroup> ds = finalg::derived_series(G);
    bool solvable = ds.back().order() == 1;
    c.observed = {{"gamma_infinity_order", finalg::gamma_infinity(G).order()},
                  {"solvable", solvable}};
    c.observed["nilpotency_class"] =
        cls ? nlohmann::json(*cls) : nlohmann::json();
    c.observed["derived_length"] =
        solvable ? nlohmann::json(ds.size() - 1) : nlohmann::json();
  }
  try {
    finalg::MetacyclicWitness w = finalg::is_metacyclic(G);
    CheckResult& c = out.add("metacyclicity is decided", Status::pass);
    c.observed = {{"metacyclic", w.metacyclic}};
    if (w.metacyclic) c.observed["normal_cyclic_order"] =
        finalg::element_order(G, w.normal_gen);
  } catch (const std::logic_error& e) {
    out.add("metacyclicity is decided", Status::fail).witness = e.what();
  }
  {
    finalg::ChiefSeries cs = finalg::is_supersolvable(G);
    CheckResult& c = out.add("supersolvability is decided", Status::pass);
    c.observed = {{"supersolvable", cs.supersolvable}};
    if (cs.supersolvable) c.observed["chief_factors"] = cs.factor_orders;
  }
  {
    CheckResult& c = out.add("Sylow subgroups computed", Status::pass);
    for (auto [p, e] : finalg::factorize(G.n))
      c.observed[std::to_string(p)] = finalg::sylow_subgroup(G, p).order();
  }
  r.checks = std::move(out);
  return r;
}

ScenarioReport run_check_frobenius(const std::string& config_path,
                                   const std::string& kernel,
                                   const std::string& complement,
                                   const std::string& action) {
  finalg::FrobeniusSpec fx;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw config_error("cannot open config file " + config_path);
    nlohmann::json j = parse_json_text(
        std::string(std::istreambuf_iterator<char>(in), {}), config_path);
    fx = finalg::frobenius_from_json(j.contains("frobenius") ? j.at("frobenius") : j);
  } else if (!kernel.empty() && !complement.empty() && !action.empty()) {
    fx = finalg::frobenius_from_json(nlohmann::json{
        {"kernel", kernel}, {"complement", complement}, {"action", action}});
  } else {
    throw config_error("provide --config, or --kernel with --complement and --action");
  }

  ScenarioReport r;
  r.kind = "check-frobenius";
  r.title = fx.whole.name;
  CheckSet out;
  try {
    finalg::check_frobenius(fx.whole, finalg::make_subgroup(fx.whole, fx.kernel_elems),
                            finalg::make_subgroup(fx.whole, fx.complement_elems));
    CheckResult& c = out.add("whole group is a Frobenius group", Status::pass);
    c.observed = {{"order", fx.whole.n},
                  {"kernel_order", fx.kernel_elems.size()},
                  {"complement_order", fx.complement_elems.size()}};
  } catch (const finalg::fixed_point_witness& e) {
    out.add("whole group is a Frobenius group", Status::fail).witness = e.what();
  }
  {
    finalg::ChiefSeries cs = finalg::is_supersolvable(fx.whole);
    CheckResult& c = out.add("supersolvability is decided", Status::pass);
    c.observed = {{"supersolvable", cs.supersolvable}};
    if (cs.supersolvable) c.observed["chief_factors"] = cs.factor_orders;
  }
  r.checks = std::move(out);
  return r;
}

ScenarioReport run_assoc_lie(const std::string& file, const std::string& spec,
                             const std::string& ring_out) {
  finalg::FiniteGroup G = load_group(file, spec);
  ScenarioReport r;
  r.kind = "assoc-lie";
  r.title = G.name.empty() ? "order " + std::to_string(G.n) : G.name;
  CheckSet out;
  try {
    finalg::AssociatedLieRing A = finalg::associated_lie_ring(G);
    if (!ring_out.empty()) {
      std::ofstream f(ring_out);
      if (!f) throw config_error("cannot write " + ring_out);
      finalg::write_lie_ring(f, A.ring);
    }
    std::vector<int> layer_dims;
    for (const auto& layer : A.layers)
      layer_dims.push_back(static_cast<int>(layer.reps.size()));
    std::optional<int> lcls = finalg::lie_class(A.ring);
    CheckResult& c = out.add("associated Lie ring constructed", Status::pass);
    c.observed = {{"q", A.q},
                  {"dim", A.ring.dim},
                  {"group_class", A.group_class},
                  {"layer_dims", layer_dims}};
    if (lcls) c.observed["lie_class"] = *lcls;
  } catch (const config_error&) {
    throw;
  } catch (const std::exception& e) {
    out.add("associated Lie ring constructed", Status::fail).witness = e.what();
  }
  r.checks = std::move(out);
  return r;
}

ScenarioReport run_grade(const std::string& lie_path, long long p,
                         const std::string& phi_text, long long extend) {
  std::ifstream in(lie_path);
  if (!in) throw config_error("cannot open Lie ring file " + lie_path);
  finalg::LieRing L = finalg::read_lie_ring(in);
  int omega_expected = -1;
  if (extend > 0) {
    finalg::ExtendedScalars ext = finalg::extend_scalars(L, extend);
    L = std::move(ext.ring);
    omega_expected = ext.omega;
  }
  finalg::Mat phi = finalg::mat_from_json(
      parse_json_text(phi_text, "--phi"), L.dim, L.field);

  ScenarioReport r;
  r.kind = "grade";
  r.title = L.name.empty() ? lie_path : L.name;
  CheckSet out;
  finalg::Grading g = finalg::eigenspace_grading(L, phi, p);
  if (omega_expected >= 0 && omega_expected != g.omega)
    throw std::logic_error("extension and grading disagree on the root of unity");
  {
    CheckResult& c = out.add("eigenspace grading constructed", Status::pass);
    c.observed = finalg::grading_to_json(g);
  }
  out.append(finalg::criterion_report(g));
  r.checks = std::move(out);
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "finalg: exact checks for coprime actions on finite groups, associated\n"
      "Lie rings, and graded nilpotency criteria"};
  app.require_subcommand(1);
  app.fallthrough();

  Emit emit;
  int cap = 0;
  app.add_option("--format", emit.format, "report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--out", emit.out_path, "write the report to a file");
  app.add_option("--cap", cap, "override the default search cap");
  app.add_flag("--timings", emit.timings, "include wall times in JSON reports");

  std::function<std::vector<ScenarioReport>()> run;

  std::string file, spec, cayley_out, ring_out;
  std::string fr_config, fr_kernel, fr_complement, fr_action;
  std::string lie_path, phi_text, verify_id, run_path;
  long long grade_p = 0, grade_extend = 0;

  CLI::App* validate = app.add_subcommand("validate", "check a Cayley table or catalog spec");
  validate->add_option("--file", file, "Cayley-table file");
  validate->add_option("--spec", spec, "catalog spec, e.g. semidirect(cyclic(7),cyclic(3),scalar(2))");
  validate->callback([&] { run = [&] { return std::vector{run_validate(file, spec)}; }; });

  CLI::App* analyze = app.add_subcommand("analyze-group", "structural profile of one group");
  analyze->add_option("--file", file, "Cayley-table file");
  analyze->add_option("--spec", spec, "catalog spec");
  analyze->add_option("--cayley", cayley_out, "also export the Cayley table to this file");
  analyze->callback([&] { run = [&] { return std::vector{run_analyze(file, spec, cayley_out)}; }; });

  CLI::App* frob = app.add_subcommand("check-frobenius", "validate a kernel-complement factorization");
  frob->add_option("--config", fr_config, "JSON file with a frobenius object");
  frob->add_option("--kernel", fr_kernel, "kernel catalog spec");
  frob->add_option("--complement", fr_complement, "complement catalog spec");
  frob->add_option("--action", fr_action, "complement generator action on the kernel");
  frob->callback([&] {
    run = [&] {
      return std::vector{
          run_check_frobenius(fr_config, fr_kernel, fr_complement, fr_action)};
    };
  });

  CLI::App* assoc = app.add_subcommand("assoc-lie", "associated graded Lie ring of a nilpotent group");
  assoc->add_option("--file", file, "Cayley-table file");
  assoc->add_option("--spec", spec, "catalog spec");
  assoc->add_option("--ring", ring_out, "write the structure-constant file here");
  assoc->callback([&] { run = [&] { return std::vector{run_assoc_lie(file, spec, ring_out)}; }; });

  CLI::App* grade = app.add_subcommand("grade", "eigenspace grading of a Lie ring by an order-p map");
  grade->add_option("--lie", lie_path, "structure-constant file")->required();
  grade->add_option("--p", grade_p, "prime order of the grading map")->required();
  grade->add_option("--phi", phi_text, "matrix of the map, as JSON rows")->required();
  grade->add_option("--extend", grade_extend, "extend scalars to adjoin a p-th root of unity first");
  grade->callback([&] {
    run = [&] { return std::vector{run_grade(lie_path, grade_p, phi_text, grade_extend)}; };
  });

  CLI::App* verify = app.add_subcommand("verify", "run a builtin verification suite");
  verify->add_option("id", verify_id, "suite id, or 'all'")->required();
  verify->callback([&] {
    run = [&] {
      for (const std::string& known : finalg::builtin_ids())
        if (verify_id == known || verify_id == "all")
          return finalg::run_builtin(verify_id, cap);
      std::string ids = "all";
      for (const std::string& known : finalg::builtin_ids()) ids += ", " + known;
      throw config_error("unknown suite '" + verify_id + "' (expected one of: " + ids + ")");
    };
  });

  CLI::App* runcfg = app.add_subcommand("run", "run scenarios from a JSON config");
  runcfg->add_option("config", run_path, "scenario config file")->required();
  runcfg->callback([&] {
    run = [&] {
      std::ifstream in(run_path);
      if (!in) throw config_error("cannot open config file " + run_path);
      nlohmann::json root = parse_json_text(
          std::string(std::istreambuf_iterator<char>(in), {}), run_path);
      return finalg::run_config(root, cap);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  try {
    return emit(run());
  } catch (const config_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
