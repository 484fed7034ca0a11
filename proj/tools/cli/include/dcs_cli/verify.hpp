#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dcs::cli {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  // Wall-clock limit counted toward `passed`; 0 means none.
  double budget_seconds = 0.0;
};

struct SuiteInfo {
  int id;
  const char* name;
};

// Acceptance suites in run order.
const std::vector<SuiteInfo>& suites();

// Throws InputError for an unknown id.
CriterionResult run_criterion(int id, std::uint64_t seed);

// "all" or a suite name.
std::vector<CriterionResult> run_suite(const std::string& suite, std::uint64_t seed);

}  // namespace dcs::cli
