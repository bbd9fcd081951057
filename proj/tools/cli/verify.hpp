#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace baker::cli {

struct Check {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string relation;  // how measured is compared with tolerance
  bool passed = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;

  bool passed() const;
  nlohmann::ordered_json to_json() const;
};

const std::vector<std::string>& suite_names();

/// Runs a named verification suite with the given seed; nullopt for an
/// unknown name.
std::optional<SuiteReport> run_suite(const std::string& name, std::uint64_t seed);

}  // namespace baker::cli
