#include "qgraph/report.hpp"

#include <algorithm>
#include <cmath>

namespace qgraph {

void Report::add(std::string name, double residual, double threshold, std::string detail) {
  const bool ok = std::isfinite(residual) && residual <= threshold;
  checks.push_back({std::move(name), ok, residual, std::move(detail)});
}

void Report::add_flag(std::string name, bool passed, std::string detail) {
  checks.push_back({std::move(name), passed, 0.0, std::move(detail)});
}

void Report::append(const Report& other, const std::string& prefix) {
  for (const auto& c : other.checks) {
    Check copy = c;
    copy.name = prefix + copy.name;
    checks.push_back(std::move(copy));
  }
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const Check* Report::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

double Report::max_residual() const {
  double m = 0.0;
  for (const auto& c : checks) m = std::max(m, c.residual);
  return m;
}

}  // namespace qgraph
