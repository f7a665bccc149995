#pragma once

#include <string>
#include <vector>

namespace qgraph {

struct Check {
  std::string name;
  bool passed = false;
  double residual = 0.0;
  std::string detail;
};

/// Ordered list of named pass/fail checks.
struct Report {
  std::vector<Check> checks;

  /// Records a check that passes when residual <= threshold.
  void add(std::string name, double residual, double threshold, std::string detail = {});
  void add_flag(std::string name, bool passed, std::string detail = {});
  void append(const Report& other, const std::string& prefix = {});

  bool passed() const;
  const Check* find(const std::string& name) const;
  /// Largest residual over all checks.
  double max_residual() const;
};

}  // namespace qgraph
