#pragma once

#include <string>
#include <vector>

namespace exchg {

/// One property checked over a batch of generated cases.
struct SuiteCheck {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
};

struct SuiteResult {
  std::string name;
  std::vector<SuiteCheck> checks;
  bool passed() const;
};

std::vector<std::string> suite_names();

/// Runs a named property suite with a fixed seed. Throws PreconditionFailed
/// for an unknown name.
SuiteResult run_suite(const std::string& name, unsigned long long seed = 20240601);

}  // namespace exchg
