#pragma once

// Report serialization. JSON objects are emitted with sorted keys and no
// environment-dependent content, so identical inputs produce identical
// bytes; wall-clock time is measured but only serialized on request.

#include <string>
#include <vector>

#include <json.hpp>

#include "finalg/check.hpp"

namespace finalg {

struct ScenarioReport {
  std::string kind;
  std::string title;
  nlohmann::json config;  // echo of the instance configuration
  CheckSet checks;
  double wall_seconds = 0;
};

inline nlohmann::json check_to_json(const CheckResult& c) {
  nlohmann::json j;
  j["name"] = c.name;
  j["status"] = to_string(c.status);
  j["hypothesis"] = c.hypothesis;
  if (!c.witness.empty()) j["witness"] = c.witness;
  if (!c.observed.is_null()) j["observed"] = c.observed;
  return j;
}

inline nlohmann::json report_to_json(const ScenarioReport& r,
                                     bool with_timings = false) {
  nlohmann::json j;
  j["kind"] = r.kind;
  if (!r.title.empty()) j["title"] = r.title;
  if (!r.config.is_null()) j["config"] = r.config;
  j["checks"] = nlohmann::json::array();
  int pass = 0, fail = 0, abstain = 0, skip = 0;
  for (const CheckResult& c : r.checks.checks) {
    j["checks"].push_back(check_to_json(c));
    switch (c.status) {
      case Status::pass: ++pass; break;
      case Status::fail: ++fail; break;
      case Status::abstain: ++abstain; break;
      case Status::skip: ++skip; break;
    }
  }
  j["summary"] = {{"pass", pass},
                  {"fail", fail},
                  {"abstain", abstain},
                  {"skip", skip},
                  {"all_pass", fail == 0 && abstain == 0}};
  if (with_timings) j["wall_seconds"] = r.wall_seconds;
  return j;
}

inline std::string report_to_text(const ScenarioReport& r) {
  std::string out = "== " + r.kind;
  if (!r.title.empty()) out += ": " + r.title;
  out += " ==\n";
  int pass = 0, fail = 0, abstain = 0, skip = 0;
  for (const CheckResult& c : r.checks.checks) {
    std::string tag = to_string(c.status);
    for (char& ch : tag) ch = static_cast<char>(toupper(ch));
    out += "[" + tag + "] " + c.name;
    if (c.hypothesis) out += " (hypothesis)";
    if (!c.witness.empty()) out += "  -- " + c.witness;
    out += "\n";
    if (!c.observed.is_null()) out += "    observed: " + c.observed.dump() + "\n";
    switch (c.status) {
      case Status::pass: ++pass; break;
      case Status::fail: ++fail; break;
      case Status::abstain: ++abstain; break;
      case Status::skip: ++skip; break;
    }
  }
  out += "summary: " + std::to_string(pass) + " pass, " + std::to_string(fail) +
         " fail, " + std::to_string(abstain) + " abstain, " +
         std::to_string(skip) + " skip\n";
  return out;
}

inline int exit_code_for(const std::vector<ScenarioReport>& reports) {
  bool any_abstain = false;
  for (const ScenarioReport& r : reports) {
    if (r.checks.any_fail()) return 1;
    if (r.checks.any_abstain()) any_abstain = true;
  }
  return any_abstain ? 2 : 0;
}

inline nlohmann::json batch_to_json(const std::vector<ScenarioReport>& reports,
                                    bool with_timings = false) {
  nlohmann::json j;
  j["reports"] = nlohmann::json::array();
  for (const ScenarioReport& r : reports)
    j["reports"].push_back(report_to_json(r, with_timings));
  j["exit_code"] = exit_code_for(reports);
  return j;
}

inline std::string batch_to_text(const std::vector<ScenarioReport>& reports) {
  std::string out;
  for (const ScenarioReport& r : reports) {
    if (!out.empty()) out += "\n";
    out += report_to_text(r);
  }
  out += "\nexit: " + std::to_string(exit_code_for(reports)) + "\n";
  return out;
}

}  // namespace finalg
