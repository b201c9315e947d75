#include <doctest.h>

#include "fdsrank/graph_invariants.hpp"

using namespace fdsrank;

TEST_CASE("structure statistics") {
  const auto c3 = structure_stats(fixtures::C3());
  CHECK(c3.girth == 3);
  CHECK(c3.min_in_degree == 1);
  CHECK_FALSE(c3.acyclic);

  const auto e3 = structure_stats(fixtures::E3());
  CHECK_FALSE(e3.girth.has_value());
  CHECK(e3.min_in_degree == 0);
  CHECK(e3.acyclic);
  CHECK(e3.sources.size() == 3);

  const auto l1 = structure_stats(fixtures::L1());
  CHECK(l1.girth == 1);
  CHECK(l1.min_in_degree == 1);
}

TEST_CASE("feedback vertex sets") {
  CHECK(transversal_number(fixtures::C3()) == 1);
  CHECK(transversal_number(fixtures::K3()) == 2);
  CHECK(transversal_number(fixtures::E3()) == 0);
  CHECK(minimum_feedback_vertex_set(fixtures::K3()).size() == 2);
}

TEST_CASE("cycle packings") {
  CHECK(cycle_packing_number(fixtures::C3_looped()) == 3);
  CHECK(cycle_packing_number(fixtures::K3()) == 1);
  CHECK(cycle_packing_number(fixtures::E3()) == 0);
  CHECK(simple_cycles(fixtures::K3()).size() == 5);
  CHECK(cycle_packing_number(blowup(fixtures::C5sym(), 2)) == 5);
}

TEST_CASE("clique partitions") {
  CHECK(clique_partition_number(fixtures::K3()) == 1);
  CHECK(clique_partition_number(fixtures::E3()) == 3);
  CHECK(clique_partition_number(fixtures::C5sym()) == 3);
  const auto parts = minimum_clique_partition(fixtures::C5sym());
  std::size_t covered = 0;
  for (const auto& p : parts) covered += p.size();
  CHECK(covered == 5);
}

TEST_CASE("fractional relaxations") {
  const auto k3 = fractional_cycle_packing(fixtures::K3());
  REQUIRE(k3.exact);
  CHECK(k3.value == mpq_class(3, 2));
  CHECK(fractional_cycle_packing(fixtures::C3()).value == 1);
  CHECK(fractional_cycle_packing(fixtures::C5sym()).value == mpq_class(5, 2));

  CHECK(fractional_clique_cover(fixtures::C5sym()).value == mpq_class(5, 2));
  CHECK(fractional_clique_cover(fixtures::K3()).value == 1);
  CHECK(fractional_clique_cover(fixtures::E3()).value == 3);
}

TEST_CASE("independent arcs and cycle covers") {
  CHECK(max_independent_arcs(fixtures::C3()) == 3);
  CHECK(max_independent_arcs(fixtures::P1()) == 1);
  CHECK(max_independent_arcs(fixtures::STAR3()) == 3);
  CHECK(max_cycle_cover(fixtures::C3()) == 3);
  CHECK(max_cycle_cover(fixtures::STAR3()) == 3);
  CHECK(max_cycle_cover(fixtures::E3()) == 0);

  const auto arcs = maximum_independent_arcs(fixtures::STAR3());
  CHECK(arcs.size() == 3);
  const auto cover = maximum_cycle_cover(fixtures::STAR3());
  CHECK(cover.size() == 4);
}

TEST_CASE("blow-up") {
  const Digraph b = blowup(fixtures::L1(), 2);
  CHECK(b.size() == 2);
  CHECK(b.arc_count() == 4);
  CHECK(isomorphic(blowup(fixtures::C3(), 1), fixtures::C3()));
}

TEST_CASE("in-dominating profile") {
  CHECK(in_dominating_profile(Digraph(1, {})) == std::vector<std::uint64_t>{1, 1});
  CHECK(in_dominating_profile(fixtures::P1()) == std::vector<std::uint64_t>{0, 2, 1});
  CHECK(in_dominating_profile(fixtures::E3()) == std::vector<std::uint64_t>{1, 3, 3, 1});
}

TEST_CASE("nilpotent sufficiency") {
  const Digraph c3_loop(3, {{0, 1}, {1, 2}, {2, 0}, {0, 0}});
  CHECK(nilpotent_sufficiency(c3_loop) == NilpotentSufficiency::Loop);
  CHECK(nilpotent_sufficiency(fixtures::K3()) == NilpotentSufficiency::Symmetric);
  CHECK(nilpotent_sufficiency(fixtures::C3()) == NilpotentSufficiency::None);
}

TEST_CASE("isomorphism") {
  const Digraph a(3, {{0, 1}, {1, 2}});
  const Digraph b(3, {{2, 0}, {0, 1}});
  CHECK(isomorphic(a, b));
  CHECK_FALSE(isomorphic(a, fixtures::C3()));
}
