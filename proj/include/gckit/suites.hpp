#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gckit/instances.hpp"

namespace gckit {

enum class CheckStatus { passed, failed, skipped };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::passed;
  std::string detail;  // witness on failure, reason on skip
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  long long elapsed_ms = 0;

  int count(CheckStatus s) const;
  bool ok() const { return count(CheckStatus::failed) == 0; }
  void print(std::ostream& os) const;
};

const std::vector<std::string>& suite_names();

// Runs the named suite over every compatible object of the pack.
// UnknownSuite for bad names; object-level SizeLimit registers as a skip.
SuiteReport run_suite(InstanceRegistry& reg, const std::string& suite);

}  // namespace gckit
