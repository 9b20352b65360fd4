#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace soft7 {

enum class Status { Pass, Fail };

struct Witness {
  std::vector<std::string> point;  // coordinates, exact strings or decimals
  std::vector<int> indices;
  std::string value;
  std::string note;
};

struct CheckResult {
  std::string name;
  Status status = Status::Pass;
  std::size_t points_tested = 0;
  double max_deviation = 0.0;
  std::optional<Witness> witness;
  std::string anchor;
  // advisory checks are reported but do not decide the overall status
  bool advisory = false;

  bool passed() const { return status == Status::Pass; }
};

struct SuiteConfig {
  std::uint64_t seed = 1;
  std::string model = "exact";  // exact | float
  std::size_t points = 50;
};

struct Report {
  SuiteConfig config;
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.advisory && !c.passed()) return false;
    return true;
  }

  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

}  // namespace soft7
