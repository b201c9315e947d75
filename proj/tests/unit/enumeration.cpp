#include <doctest.h>

#include <map>

#include "fdsrank/enumeration.hpp"

using namespace fdsrank;

namespace {

std::map<std::uint64_t, std::uint64_t> hist(const QuantityStats& s) {
  return {s.histogram.begin(), s.histogram.end()};
}

}  // namespace

TEST_CASE("family sizes") {
  CHECK(family_size(fixtures::STAR3(), 2, true) == 2000);
  CHECK(family_size(fixtures::C3(), 2, true) == 8);
  CHECK(family_size(fixtures::C3(), 2, false) == 64);
  CHECK(essential_table_count(2, 2) == 10);
  CHECK(essential_table_count(2, 0) == 2);
}

TEST_CASE("F[L1,2]") {
  const StatsReport s = enumerate_stats(fixtures::L1(), 2, true);
  CHECK(s.function_count == 2);
  CHECK(s.rank.min == 2);
  CHECK(s.rank.max == 2);
  CHECK(hist(s.fixed_points) == std::map<std::uint64_t, std::uint64_t>{{0, 1}, {2, 1}});
  CHECK(s.fixed_points.average == 1);
}

TEST_CASE("F[P1,2]") {
  const StatsReport s = enumerate_stats(fixtures::P1(), 2, true);
  CHECK(s.function_count == 4);
  CHECK(s.rank.min == 2);
  CHECK(s.fixed_points.min == 1);
  CHECK(s.fixed_points.max == 1);
}

TEST_CASE("F[STAR3,2]") {
  const StatsReport s = enumerate_stats(fixtures::STAR3(), 2, true);
  CHECK(s.function_count == 2000);
  CHECK(s.rank.min == 5);
}

TEST_CASE("F[C3,2]") {
  const StatsReport s = enumerate_stats(fixtures::C3(), 2, true);
  CHECK(s.function_count == 8);
  CHECK(hist(s.fixed_points) == std::map<std::uint64_t, std::uint64_t>{{0, 4}, {2, 4}});
  CHECK(s.periodic_rank.min == 8);
  CHECK(s.periodic_rank.max == 8);
  CHECK(s.fixed_point_free_fraction == mpq_class(1, 2));
}

TEST_CASE("results do not depend on the worker count") {
  const StatsReport one = enumerate_stats(fixtures::K3(), 2, false, {}, 1);
  const StatsReport four = enumerate_stats(fixtures::K3(), 2, false, {}, 4);
  CHECK(one.rank.average == four.rank.average);
  CHECK(hist(one.fixed_points) == hist(four.fixed_points));
  CHECK(hist(one.periodic_rank) == hist(four.periodic_rank));
}

TEST_CASE("enumeration guard") {
  Limits tight;
  tight.max_functions = 100;
  CHECK_THROWS_AS(enumerate_stats(fixtures::STAR3(), 2, true, tight), SizeLimitExceeded);
}

TEST_CASE("exact minrank") {
  CHECK(minrank_exact(fixtures::STAR3(), 2) == 5);
  CHECK(minrank_exact(fixtures::C3(), 2) == 8);
  CHECK(minrank_exact(fixtures::E3(), 2) == 1);
}

TEST_CASE("minrank is non-increasing in q on small digraphs") {
  for (int n = 1; n <= 2; ++n) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n * n)); ++bits) {
      const Digraph d = fixtures::from_adjacency_bits(n, bits);
      CHECK(minrank_exact(d, 2) >= minrank_exact(d, 3));
    }
  }
}

TEST_CASE("univariate baselines") {
  const auto q2 = univariate_baseline(2);
  CHECK(q2.enumerated == mpq_class(3, 2));
  CHECK(q2.closed_form == mpq_class(3, 2));
  CHECK(q2.fixed_point_free == 1);
  const auto q3 = univariate_baseline(3);
  CHECK(q3.enumerated == mpq_class(19, 9));
  CHECK(q3.fixed_point_free == 8);
}
