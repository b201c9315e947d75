#include <doctest.h>

#include "fdsrank/bounds.hpp"
#include "fdsrank/enumeration.hpp"

using namespace fdsrank;

namespace {

std::optional<std::uint64_t> find(const std::vector<NamedBound>& list, const std::string& name) {
  for (const auto& b : list) {
    if (b.name == name) return b.value;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("code sizes") {
  CHECK(max_code_size(3, 2, 2) == 4);
  CHECK(max_code_size(3, 2, 3) == 2);
  CHECK(max_code_size(2, 3, 1) == 9);
  CHECK(max_code_size(4, 2, std::nullopt) == 1);
}

TEST_CASE("entropy program") {
  const EntropyValue c5 = entropy_H(fixtures::C5sym());
  REQUIRE(c5.exact);
  CHECK(c5.value == mpq_class(5, 2));
  CHECK(entropy_H(fixtures::C3()).value == 1);
  CHECK(entropy_H(fixtures::E3()).degenerate);
  CHECK(floor_power(2, c5) == 5);
  CHECK(floor_power(4, c5) == 32);
}

TEST_CASE("bounds for C3 at q = 2") {
  const BoundsReport r = fix_bounds_report(fixtures::C3(), 2);
  CHECK(find(r.upper, "girth") == 2);
  CHECK(find(r.upper, "feedback") == 2);
  CHECK(find(r.lower, "packing") == 2);
  CHECK(r.best_lower == 2);
  CHECK(r.best_upper == 2);
}

TEST_CASE("bounds for K3 at q = 2") {
  const BoundsReport r = fix_bounds_report(fixtures::K3(), 2);
  CHECK(find(r.lower, "clique_cover") == 4);
  CHECK(find(r.lower, "code") == 4);
  CHECK(find(r.upper, "feedback") == 4);
  CHECK(r.best_lower == 4);
  CHECK(r.best_upper == 4);
}

TEST_CASE("C5sym: entropy upper bound and blow-up lower bound") {
  CHECK(find(fix_bounds_report(fixtures::C5sym(), 2).upper, "entropy") == 5);
  const BoundsReport r4 = fix_bounds_report(fixtures::C5sym(), 4);
  CHECK(r4.best_lower == 32);
  CHECK(r4.best_upper == 32);
}

TEST_CASE("strict bounds bracket strict enumeration") {
  for (std::uint64_t bits = 0; bits < 512; bits += 3) {
    const Digraph d = fixtures::from_adjacency_bits(3, bits);
    const BoundsReport r = fix_bounds_report(d, 2, true);
    const std::uint64_t maxfix = enumerate_stats(d, 2, true).fixed_points.max;
    CHECK(r.best_lower <= maxfix);
    CHECK(maxfix <= r.best_upper);
  }
}

TEST_CASE("loop-full bound is exact") {
  const Digraph full = fixtures::P1().with_all_loops();
  const BoundsReport r = fix_bounds_report(full, 2, true);
  CHECK(find(r.lower, "loopfull") == 3);
}
