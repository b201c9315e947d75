#ifndef FDSRANK_BOUNDS_HPP_
#define FDSRANK_BOUNDS_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fdsrank/common.hpp"
#include "fdsrank/digraph.hpp"

namespace fdsrank {

// A(n,q,d): largest code in <q>^n with minimum Hamming distance d. A missing
// distance stands for an infinite one (acyclic girth) and gives 1.
std::uint64_t max_code_size(int n, int q, std::optional<int> d, const Limits& limits = {});

struct EntropyValue {
  bool exact = true;
  mpq_class value;     // valid when exact
  double approx = 0.0;
  // The graph has a source: h_v = 1 cannot hold there, so only the h_v <= 1
  // relaxation is meaningful.
  bool degenerate = false;
  std::string to_string() const;
};

// Optimum of the polymatroid program bounding log_q of the fixed-point count.
EntropyValue entropy_H(const Digraph& d, const Limits& limits = {});

// floor(q^H), exactly when H is rational.
std::uint64_t floor_power(int q, const EntropyValue& h);

struct NamedBound {
  std::string name;
  std::optional<std::uint64_t> value;  // empty when skipped
  std::string provenance;
  std::string status = "ok";           // "ok" or "skipped(size)"
};

struct BoundsReport {
  std::string fingerprint;
  int q = 2;
  bool strict = false;  // maxfix[D,q] rather than maxfix(D,q)
  std::vector<NamedBound> upper;
  std::vector<NamedBound> lower;
  std::uint64_t best_upper = UINT64_MAX;
  std::uint64_t best_lower = 0;
  bool consistent = true;
  std::optional<EntropyValue> entropy;
};

// Upper and lower bounds on the maximum number of fixed points. Throws
// std::logic_error if some lower bound exceeds some upper bound.
BoundsReport fix_bounds_report(const Digraph& d, int q, bool strict = false, const Limits& limits = {});

}  // namespace fdsrank

#endif  // FDSRANK_BOUNDS_HPP_
