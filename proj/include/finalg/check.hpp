#pragma once

// Shared vocabulary for verifier results.  Checks carry a machine-readable
// status plus observed values; scenario reports are built from these.

#include <string>
#include <vector>

#include <json.hpp>

namespace finalg {

enum class Status { pass, fail, abstain, skip };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::abstain: return "abstain";
    case Status::skip: return "skip";
  }
  return "?";
}

struct CheckResult {
  std::string name;
  Status status = Status::pass;
  bool hypothesis = false;  // true when this check gates conclusions
  std::string witness;
  nlohmann::json observed;
};

struct CheckSet {
  std::vector<CheckResult> checks;

  CheckResult& add(std::string name, Status status, bool hypothesis = false) {
    checks.push_back(CheckResult{std::move(name), status, hypothesis, "", {}});
    return checks.back();
  }
  void append(const CheckSet& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }
  bool any_fail() const {
    for (auto& c : checks)
      if (c.status == Status::fail) return true;
    return false;
  }
  bool any_abstain() const {
    for (auto& c : checks)
      if (c.status == Status::abstain) return true;
    return false;
  }
  bool all_pass() const {
    for (auto& c : checks)
      if (c.status != Status::pass && c.status != Status::skip) return false;
    return true;
  }
  bool hypothesis_failed() const {
    for (auto& c : checks)
      if (c.hypothesis && c.status == Status::fail) return true;
    return false;
  }
};

}  // namespace finalg
