#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace krein {

/// One named residual check. `witness` is an already-serialized element.
struct Check {
  std::string name;
  bool passed = true;
  double max_residual = 0.0;
  std::optional<nlohmann::json> witness;
};

/// Accumulates a residual maximum and compares it against a tolerance.
class ResidualTracker {
 public:
  ResidualTracker(std::string name, double tol) : name_(std::move(name)), tol_(tol) {}

  /// Records a residual; the first residual above tolerance keeps its witness.
  void add(double residual, const nlohmann::json& witness = nullptr);
  Check finish() const;

 private:
  std::string name_;
  double tol_;
  double max_ = 0.0;
  bool failed_ = false;
  std::optional<nlohmann::json> witness_;
};

struct Report {
  std::vector<Check> checks;

  bool all_passed() const;
  const Check* find(const std::string& name) const;
  void add(Check c) { checks.push_back(std::move(c)); }
  void append(const Report& other);
};

nlohmann::json to_json(const Check& c);
nlohmann::json to_json(const Report& r);

}  // namespace krein
