// Runs the acceptance suite and prints one PASS/FAIL line per criterion.

#include <cstring>
#include <iostream>

#include "fdsrank/verify.hpp"

int main(int argc, char** argv) {
  fdsrank::VerifyOptions options;
  options.limits = fdsrank::Limits::from_env();
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) options.quick = true;
  }
  options.on_result = [](const fdsrank::CheckResult& r) { std::cout << fdsrank::format_check(r) << std::endl; };
  int failed = 0;
  for (const auto& r : fdsrank::run_acceptance(options)) failed += !r.pass;
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
