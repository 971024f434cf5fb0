#include "parafock/report.hpp"

namespace parafock {

std::string to_string(const Report& report) {
  std::string head = report.suite + " p=" + std::to_string(report.p) +
                     " max_m=" + std::to_string(report.max_m) + ": " +
                     std::to_string(report.checks_run) + " checks, ";
  if (report.passed()) return head + "PASS";
  std::string out = head + std::to_string(report.failures.size()) + " FAILED";
  for (const CheckFailure& f : report.failures) {
    out += "\n  " + f.context + ": expected " + f.expected + ", got " + f.actual;
  }
  return out;
}

}  // namespace parafock
