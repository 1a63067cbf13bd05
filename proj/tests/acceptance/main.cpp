#include <cstring>
#include <iostream>

#include "tropwall/suite.hpp"

int main(int argc, char** argv) {
  bool long_run = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--long") == 0) long_run = true;
  int failed = 0;
  for (const auto& r : tropwall::run_acceptance_suite(long_run)) {
    std::cout << tropwall::format_result(r) << std::endl;
    if (!r.pass) ++failed;
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << failed << " failing" << std::endl;
  return failed ? 1 : 0;
}
