#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

#include "finalg/group_io.hpp"
#include "finalg/lie_io.hpp"
#include "finalg/report.hpp"
#include "finalg/scenario.hpp"

using namespace finalg;
using nlohmann::json;

namespace {

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / "finalg_harness_test";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_group_file(const FiniteGroup& G, const std::string& base) {
  auto path = scratch_dir() / base;
  std::ofstream out(path);
  write_cayley(out, G);
  return path.string();
}

}  // namespace

TEST_CASE("scenario dispatch rejects unknown kinds") {
  CHECK_THROWS_AS(run_scenario(json{{"kind", "no_such_kind"}}), config_error);
  CHECK_THROWS_AS(run_scenario(json{{"group", "cyclic(5)"}}), config_error);
  CHECK_THROWS_AS(run_scenario(json::array()), config_error);
}

TEST_CASE("groups parse from spec strings and files") {
  FiniteGroup G = group_from_json(json("dihedral(4)"));
  CHECK(G.n == 8);

  std::string path = write_group_file(construct_group("cyclic(6)"), "c6.cayley");
  FiniteGroup H = group_from_json(json{{"file", path}});
  CHECK(H.n == 6);
  CHECK(H.name == "cyclic(6)");

  CHECK_THROWS_AS(group_from_json(json{{"file", path + ".missing"}}),
                  config_error);
  CHECK_THROWS_AS(group_from_json(json(7)), config_error);
}

TEST_CASE("standalone action strings parse against a target") {
  FiniteGroup C5 = construct_group("cyclic(5)");
  CHECK(parse_action_perm(C5, "inversion") == std::vector<int>{0, 4, 3, 2, 1});
  CHECK(parse_action_perm(C5, "scalar(2)") == std::vector<int>{0, 2, 4, 1, 3});
  CHECK_THROWS_AS(parse_action_perm(C5, "inversion garbage"), config_error);
}

TEST_CASE("action setups parse from every config form") {
  json base = {{"actor", "cyclic(2)"}, {"target", "cyclic(5)"}};

  SECTION("one action string for a cyclic actor") {
    base["action"] = "inversion";
    ActionSetup s = action_setup_from_json(base);
    CHECK(s.apply(1, 2) == 3);
  }
  SECTION("generator list with an explicit permutation") {
    base["generators"] = {{{"element", 1}, {"perm", {0, 4, 3, 2, 1}}}};
    ActionSetup s = action_setup_from_json(base);
    CHECK(s.apply(1, 1) == 4);
  }
  SECTION("full image table") {
    base["images"] = {{0, 1, 2, 3, 4}, {0, 4, 3, 2, 1}};
    ActionSetup s = action_setup_from_json(base);
    CHECK(s.rep[1][1] == 4);
  }
  SECTION("missing pieces") {
    CHECK_THROWS_AS(action_setup_from_json(base), config_error);
    CHECK_THROWS_AS(action_setup_from_json(json{{"target", "cyclic(5)"}}),
                    config_error);
    CHECK_THROWS_AS(action_setup_from_json(json{{"actor", "cyclic(2)"}}),
                    config_error);
    CHECK_THROWS_AS(action_setup_from_json(json("inversion")), config_error);
  }
}

TEST_CASE("action setups round-trip through files") {
  ActionSetup s = action_setup_from_json(json{{"actor", "cyclic(4)"},
                                              {"target", "elem(5,2)"},
                                              {"action", "scalar(2)"}});
  std::string af = write_group_file(s.actor, "actor.cayley");
  std::string tf = write_group_file(s.target, "target.cayley");
  json j = action_setup_to_json(s, af, tf);
  ActionSetup back = action_setup_from_json(j);
  CHECK(back.rep == s.rep);
  CHECK(back.actor.table == s.actor.table);
  CHECK(back.target.table == s.target.table);
}

TEST_CASE("lie rings parse from every config form") {
  SECTION("inline brackets") {
    LieRing L = lie_ring_from_json(json{
        {"q", 11}, {"dim", 3}, {"name", "heisenberg"},
        {"brackets", {{0, 1, 2, 1}}}});
    CHECK(L.dim == 3);
    CHECK(L.sc(0, 1, 2) == 1);
    CHECK(L.sc(1, 0, 2) == 10);
  }
  SECTION("associated ring of a group") {
    LieRing L = lie_ring_from_json(json{{"assoc_of", "extraspecial(5)"}});
    CHECK(L.dim == 3);
    CHECK(L.field.q == 5);
  }
  SECTION("structure-constant file") {
    LieRing L = associated_lie_ring(construct_group("extraspecial(5)")).ring;
    auto path = scratch_dir() / "es5.lie";
    {
      std::ofstream out(path);
      write_lie_ring(out, L);
    }
    LieRing back = lie_ring_from_json(json{{"file", path.string()}});
    CHECK(back.c == L.c);
  }
  SECTION("malformed inline entries") {
    json base = {{"q", 5}, {"dim", 2}};
    base["brackets"] = {{0, 1, 2, 1}};
    CHECK_THROWS_AS(lie_ring_from_json(base), config_error);
    base["brackets"] = {{0, 1, 1, 7}};
    CHECK_THROWS_AS(lie_ring_from_json(base), config_error);
    base["brackets"] = {{0, 1, 1}};
    CHECK_THROWS_AS(lie_ring_from_json(base), config_error);
    CHECK_THROWS_AS(lie_ring_from_json(json("heisenberg")), config_error);
  }
}

TEST_CASE("frobenius specs parse in both forms") {
  SECTION("semidirect shorthand") {
    FrobeniusSpec fx = frobenius_from_json(json{{"kernel", "cyclic(3)"},
                                                {"complement", "cyclic(2)"},
                                                {"action", "inversion"}});
    CHECK(fx.whole.n == 6);
    CHECK(fx.kernel_elems == std::vector<int>{0, 2, 4});
    CHECK(fx.complement_elems == std::vector<int>{0, 1});
  }
  SECTION("explicit element lists") {
    FrobeniusSpec fx = frobenius_from_json(json{{"group", "dihedral(3)"},
                                                {"kernel", {0, 1, 2}},
                                                {"complement", {0, 3}}});
    CHECK(fx.whole.n == 6);
    CHECK(fx.kernel_elems == std::vector<int>{0, 1, 2});
  }
  SECTION("missing group") {
    CHECK_THROWS_AS(frobenius_from_json(json{{"kernel", {0, 1}}}), config_error);
  }
}

TEST_CASE("scenario reports carry kind, title, and config echo") {
  json cfg = {{"kind", "lemma_regularity"}, {"group", "extraspecial(5)"}};
  ScenarioReport r = run_scenario(cfg);
  CHECK(r.kind == "lemma_regularity");
  CHECK(r.title == "extraspecial(5)");
  CHECK(r.config == cfg);
  CHECK(r.checks.all_pass());

  cfg["title"] = "my custom title";
  CHECK(run_scenario(cfg).title == "my custom title");

  cfg["group"] = "cyclic(6)";
  CHECK_THROWS_AS(run_scenario(cfg), config_error);
}

TEST_CASE("coprime facts scenario honors the size cap") {
  json cfg = {{"kind", "coprime_facts"},
              {"action", {{"actor", "cyclic(2)"},
                          {"target", "cyclic(9)"},
                          {"action", "inversion"}}}};
  CHECK(run_scenario(cfg).checks.all_pass());
  CHECK_THROWS_AS(run_scenario(cfg, 8), too_large);
}

TEST_CASE("pipeline scenario rejects a trivial action") {
  json cfg = {{"kind", "theorem_main2_pipeline"},
              {"frobenius", {{"kernel", "cyclic(3)"},
                             {"complement", "cyclic(2)"},
                             {"action", "inversion"}}},
              {"target", "cyclic(5)"},
              {"generators",
               {{{"element", 2}, {"action", "scalar(1)"}},
                {{"element", 1}, {"action", "scalar(1)"}}}}};
  CHECK_THROWS_WITH(
      run_scenario(cfg),
      "every group element acts trivially; the pipeline has nothing to grade by");
}

TEST_CASE("pipeline scenario runs every stage on the builtin instance") {
  std::vector<ScenarioReport> reports = run_builtin("theorem_main2_pipeline");
  REQUIRE(reports.size() == 1);
  const CheckSet& cs = reports[0].checks;
  CHECK(cs.all_pass());
  std::vector<std::string> names;
  for (const CheckResult& c : cs.checks) names.push_back(c.name);
  for (const char* stage :
       {"target group is nilpotent",
        "kernel contains a normal rank-two elementary abelian subgroup",
        "associated Lie ring has the same nilpotency class",
        "kernel generator grades the ring and the complement rotates it",
        "criterion agrees with the nilpotency class",
        "zero component equals kernel-fixed plus conjugate-complement-fixed"})
    CHECK(std::find(names.begin(), names.end(), stage) != names.end());
}

TEST_CASE("builtin suite ids are stable") {
  CHECK(builtin_ids() ==
        std::vector<std::string>{
            "coprime_facts", "lemma_metacyclic", "lemma_regularity",
            "lemma_q_cube", "lemma_submet", "frobenius_generation",
            "grading_criterion", "decomposition_L0",
            "theorem_main1_hypotheses", "theorem_main2_pipeline",
            "order16_search"});
  CHECK_THROWS_AS(builtin_config("no_such_suite"), config_error);
}

TEST_CASE("the full builtin battery is green") {
  std::vector<ScenarioReport> reports = run_builtin("all");
  CHECK(reports.size() == 87);
  CHECK(exit_code_for(reports) == 0);
  for (const ScenarioReport& r : reports) {
    CAPTURE(r.kind, r.title);
    CHECK_FALSE(r.checks.any_fail());
    CHECK_FALSE(r.checks.any_abstain());
  }
}

TEST_CASE("run_config accepts an object, an array, or a wrapper") {
  json one = {{"kind", "lemma_metacyclic"}, {"group", "cyclic(25)"}};
  CHECK(run_config(one).size() == 1);
  CHECK(run_config(json::array({one, one})).size() == 2);
  CHECK(run_config(json{{"scenarios", json::array({one, one})}}).size() == 2);
}

TEST_CASE("report serialization shape") {
  ScenarioReport r = run_scenario(
      json{{"kind", "lemma_metacyclic"}, {"group", "extraspecial(5)"}});
  json j = report_to_json(r);
  CHECK(j["kind"] == "lemma_metacyclic");
  CHECK(j["checks"].is_array());
  CHECK(j["checks"][0].contains("name"));
  CHECK(j["checks"][0]["status"] == "pass");
  CHECK(j["summary"]["fail"] == 0);
  CHECK(j["summary"]["all_pass"] == true);
  CHECK_FALSE(j.contains("wall_seconds"));
  CHECK(report_to_json(r, true).contains("wall_seconds"));

  std::string text = report_to_text(r);
  CHECK(text.find("== lemma_metacyclic: extraspecial(5) ==") != std::string::npos);
  CHECK(text.find("[PASS]") != std::string::npos);
}

TEST_CASE("exit codes rank fail over abstain over pass") {
  ScenarioReport ok, ab, bad;
  ok.kind = ab.kind = bad.kind = "synthetic";
  ok.checks.add("a", Status::pass);
  ab.checks.add("b", Status::abstain);
  bad.checks.add("c", Status::fail);
  CHECK(exit_code_for({ok}) == 0);
  CHECK(exit_code_for({ok, ab}) == 2);
  CHECK(exit_code_for({ok, ab, bad}) == 1);
  CHECK(batch_to_json({ok, ab})["exit_code"] == 2);
  std::string text = batch_to_text({ok});
  CHECK(text.ends_with("exit: 0\n"));
}

TEST_CASE("report batches are deterministic") {
  std::vector<ScenarioReport> a = run_builtin("grading_criterion");
  std::vector<ScenarioReport> b = run_builtin("grading_criterion");
  CHECK(batch_to_json(a).dump(2) == batch_to_json(b).dump(2));
}

TEST_CASE("grading serialization freezes the component bases") {
  LieRing L = lie_ring_from_json(json{
      {"q", 11}, {"dim", 3}, {"name", "heisenberg"},
      {"brackets", {{0, 1, 2, 1}}}});
  Mat phi(3, 3);
  phi.at(0, 0) = 3;
  phi.at(1, 1) = 9;
  phi.at(2, 2) = 5;
  json j = grading_to_json(eigenspace_grading(L, phi, 5));
  CHECK(j["p"] == 5);
  CHECK(j["omega"] == 3);
  CHECK(j["field"]["q"] == 11);
  CHECK(j["components"][0] == json::array());
  CHECK(j["components"][1] == json::array({{1, 0, 0}}));
  CHECK(j["components"][3] == json::array({{0, 0, 1}}));
}
