// Machine-readable check reports. Reports are deterministic for a fixed
// command, inputs and seed: checks are emitted sorted by name and no
// wall-clock data is included.

#pragma once

#include <json.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace weyl::report {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  std::vector<Check> checks;
  nlohmann::json artifacts = nlohmann::json::object();

  void add(std::string name, bool pass, std::string detail = "") {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }

  bool all_pass() const {
    for (const Check& c : checks)
      if (!c.pass) return false;
    return true;
  }

  nlohmann::json to_json() const {
    std::vector<Check> sorted = checks;
    std::sort(sorted.begin(), sorted.end(),
              [](const Check& a, const Check& b) { return a.name < b.name; });
    nlohmann::json jc = nlohmann::json::array();
    for (const Check& c : sorted) jc.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    nlohmann::json out{{"command", command}, {"inputs", inputs}, {"checks", jc}};
    if (!artifacts.empty()) out["artifacts"] = artifacts;
    return out;
  }
};

}  // namespace weyl::report
