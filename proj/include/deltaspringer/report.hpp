#pragma once

#include <string>
#include <vector>

namespace ds {

// One verification check. `witness` is empty on pass and holds a concrete
// counterexample description on failure.
struct Check {
  std::string id;
  bool pass = false;
  std::string witness;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;

  void add(const std::string& id, bool pass, const std::string& witness = "") {
    checks.push_back({id, pass, pass ? std::string() : witness});
  }
  void merge(const Report& other) {
    for (const auto& c : other.checks) checks.push_back(c);
  }
  int passed() const {
    int p = 0;
    for (const auto& c : checks) p += c.pass ? 1 : 0;
    return p;
  }
  int failed() const { return static_cast<int>(checks.size()) - passed(); }
  bool all_pass() const { return failed() == 0; }
};

}  // namespace ds
