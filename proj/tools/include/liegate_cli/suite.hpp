#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace liegate::cli {

struct Check {
  int criterion = 0;  // acceptance criterion 1..9
  std::string group;
  std::string name;
  double value = 0;
  double threshold = 0;
  bool upper = true;  // pass iff value <= threshold (or >= when false)
  bool pass = false;
  std::string note;
};

struct SuiteOptions {
  std::uint64_t seed = 7;
  int random_sets = 20;
  bool corrupt_map = false;
};

// Criteria 1..9; each returns its checks.  Deterministic for fixed options.
std::vector<Check> run_criterion(int criterion, const SuiteOptions& opt);
std::vector<Check> run_suite(const SuiteOptions& opt);

}  // namespace liegate::cli
