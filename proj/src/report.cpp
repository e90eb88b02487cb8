#include "krein/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace krein {

void ResidualTracker::add(double residual, const nlohmann::json& witness) {
  if (std::isnan(residual)) residual = std::numeric_limits<double>::infinity();
  max_ = std::max(max_, residual);
  if (!failed_ && residual > tol_) {
    failed_ = true;
    if (!witness.is_null()) witness_ = witness;
  }
}

Check ResidualTracker::finish() const { return Check{name_, !failed_, max_, witness_}; }

bool Report::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const Check* Report::find(const std::string& name) const {
  auto it = std::find_if(checks.begin(), checks.end(),
                         [&](const Check& c) { return c.name == name; });
  return it == checks.end() ? nullptr : &*it;
}

void Report::append(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

nlohmann::json to_json(const Check& c) {
  nlohmann::json j{{"name", c.name}, {"passed", c.passed}, {"max_residual", c.max_residual}};
  j["witness"] = c.witness ? *c.witness : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const Report& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const Check& c : r.checks) checks.push_back(to_json(c));
  return nlohmann::json{{"checks", checks}};
}

}  // namespace krein
