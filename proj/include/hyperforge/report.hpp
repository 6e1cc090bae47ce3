#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace hyperforge {

using Elem = int;  // index into a carrier's element list

// One verified (or refuted) law. A failed check always carries a concrete
// witness tuple that reproduces the failure when replayed standalone.
struct AxiomCheck {
  std::string axiom;
  bool pass = true;
  bool required = true;  // informational entries don't affect all_pass()
  std::vector<Elem> witness;
  std::string detail;
  long long tuples_checked = 0;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (c.required && !c.pass) return false;
    return true;
  }

  const AxiomCheck* find(std::string_view axiom) const {
    for (const auto& c : checks)
      if (c.axiom == axiom) return &c;
    return nullptr;
  }

  void add(AxiomCheck c) { checks.push_back(std::move(c)); }

  std::string summary() const {
    for (const auto& c : checks)
      if (c.required && !c.pass) return "FAIL " + c.axiom + (c.detail.empty() ? "" : ": " + c.detail);
    return "all " + std::to_string(checks.size()) + " checks pass";
  }
};

// Single-question result; witness layout is documented per operation.
struct Verdict {
  bool pass = true;
  std::string detail;
  std::vector<Elem> witness;
};

}  // namespace hyperforge
