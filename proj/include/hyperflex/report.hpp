#pragma once
// Verification suites: each runs a set of named checks with expected and
// computed values and timing, for the report CLI and the acceptance runner.
#include <string>
#include <vector>

namespace hfx::report {

struct Check {
  std::string name;
  std::string location;  // stable claim locator
  std::string expected;
  std::string computed;
  bool pass = false;
  bool flagged = false;  // claimed bound missed; discrepancy emitted, not hidden
  std::string note;
  double runtime_ms = 0;
};

// suites, in acceptance order: e6, bitangent, twoadic, padic, family, properties
std::vector<std::string> suite_names();
std::vector<Check> run_suite(const std::string& suite);

std::string render_json(const std::vector<Check>& checks, int exit_code);
std::string render_csv(const std::vector<Check>& checks);
bool all_pass(const std::vector<Check>& checks);
bool any_flagged(const std::vector<Check>& checks);

}  // namespace hfx::report
