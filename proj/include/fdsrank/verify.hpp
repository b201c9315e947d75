#ifndef FDSRANK_VERIFY_HPP_
#define FDSRANK_VERIFY_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fdsrank/common.hpp"

namespace fdsrank {

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string expected;
  std::string actual;
  double seconds = 0.0;
};

struct VerifyOptions {
  bool quick = false;
  Limits limits;
  // Per-graph family budget for the q = 3 sweeps; graphs above it are
  // counted as not covered.
  std::uint64_t q3_budget = 2'000'000;
  std::uint32_t seed = 20240601;
  std::function<void(const CheckResult&)> on_result;
};

// Runs the fourteen acceptance checks in order.
std::vector<CheckResult> run_acceptance(const VerifyOptions& options);

// "[PASS] 3 name: expected ..., actual ... (0.12 s)"
std::string format_check(const CheckResult& r);

}  // namespace fdsrank

#endif  // FDSRANK_VERIFY_HPP_
