#pragma once

#include <map>
#include <string>
#include <vector>

namespace twc {

struct Check {
  std::string name;
  bool pass = true;
  std::string detail;
  std::vector<int> witness;
};

struct CheckList {
  std::vector<Check> checks;
  std::map<std::string, long long> counts;

  void add(std::string name, bool pass, std::string detail = {}, std::vector<int> witness = {}) {
    checks.push_back({std::move(name), pass, std::move(detail), std::move(witness)});
  }
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

}  // namespace twc
