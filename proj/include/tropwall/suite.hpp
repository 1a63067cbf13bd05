#pragma once

#include <string>
#include <vector>

namespace tropwall {

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  bool skipped = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;  // wall-clock limit, part of the pass condition
};

/// Golden checks of the toolkit, one per acceptance criterion. The
/// Gr(3,6) check only runs with `long_run`.
std::vector<CheckResult> run_acceptance_suite(bool long_run = false);

/// "PASS  3  name  (0.01 s / 1 s)  detail"
std::string format_result(const CheckResult& r);

}  // namespace tropwall
