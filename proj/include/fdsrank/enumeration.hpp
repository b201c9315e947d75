#ifndef FDSRANK_ENUMERATION_HPP_
#define FDSRANK_ENUMERATION_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>

#include "fdsrank/common.hpp"
#include "fdsrank/digraph.hpp"

namespace fdsrank {

struct QuantityStats {
  std::uint64_t min = 0;
  std::uint64_t max = 0;
  mpq_class average;
  std::map<std::uint64_t, std::uint64_t> histogram;  // value -> count
};

struct StatsReport {
  std::string fingerprint;
  int q = 2;
  bool strict = false;
  std::uint64_t function_count = 0;
  QuantityStats rank;
  QuantityStats periodic_rank;
  QuantityStats fixed_points;
  mpq_class fixed_point_free_fraction;
};

// |F[D,q]| (strict) or |F(D,q)| as an exact integer.
mpz_class family_size(const Digraph& d, int q, bool strict);

// Number of tables of arity k over q letters depending on every input.
mpz_class essential_table_count(int q, int k);

// Exhaustive statistics over F[D,q] (strict) or F(D,q). `threads` = 0 uses
// the hardware concurrency; the report does not depend on it. Throws
// SizeLimitExceeded with the exact family size past Limits::max_functions.
StatsReport enumerate_stats(const Digraph& d, int q, bool strict, const Limits& limits = {},
                            unsigned threads = 0);

// minrank[D,q] over F[D,q] by branch and bound.
std::uint64_t minrank_exact(const Digraph& d, int q, const Limits& limits = {});

struct UnivariateBaseline {
  int q = 2;
  mpq_class closed_form;      // (1 - (1 - 1/q)^q) q
  mpq_class enumerated;       // average rank over all q^q maps
  std::uint64_t fixed_point_free = 0;
  std::uint64_t expected_fixed_point_free = 0;  // (q-1)^q
};

UnivariateBaseline univariate_baseline(int q, const Limits& limits = {});

}  // namespace fdsrank

#endif  // FDSRANK_ENUMERATION_HPP_
