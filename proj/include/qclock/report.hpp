#pragma once

#include <string>
#include <vector>

namespace qclock {

struct LawCheck {
  std::string law;
  double residual = 0.0;
  bool pass = false;
};

/// A flat list of named residual checks evaluated at one tolerance.
struct LawReport {
  double tol = 0.0;
  std::vector<LawCheck> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  double max_residual() const {
    double m = 0.0;
    for (const auto& c : checks) m = m < c.residual ? c.residual : m;
    return m;
  }
  const LawCheck* find(const std::string& law) const {
    for (const auto& c : checks)
      if (c.law == law) return &c;
    return nullptr;
  }
};

}  // namespace qclock
