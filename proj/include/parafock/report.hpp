#pragma once

#include <string>
#include <vector>

namespace parafock {

/// One failed check: where, what was expected, what came out. Contexts are
/// human-readable and stable, so they double as regression identifiers.
struct CheckFailure {
  std::string context;
  std::string expected;
  std::string actual;
};

struct Report {
  std::string suite;
  int p = 0;
  int max_m = 0;
  long long checks_run = 0;
  std::vector<CheckFailure> failures;

  bool passed() const { return failures.empty(); }

  void check(bool ok, const std::string& context, const std::string& expected,
             const std::string& actual) {
    ++checks_run;
    if (!ok) failures.push_back({context, expected, actual});
  }

  void merge(const Report& other) {
    checks_run += other.checks_run;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  }
};

/// "suite p=2 max_m=6: 412 checks, PASS" or a multi-line failure listing.
std::string to_string(const Report& report);

}  // namespace parafock
