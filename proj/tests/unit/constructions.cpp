#include <doctest.h>

#include "fdsrank/canonical.hpp"
#include "fdsrank/constructions.hpp"
#include "fdsrank/graph_invariants.hpp"

using namespace fdsrank;

TEST_CASE("conjunctive networks") {
  const Fds e3 = conjunctive(fixtures::E3());
  CHECK(rank(e3) == 1);
  CHECK(e3.apply(0) == 7);
  CHECK(interaction_graph(conjunctive(fixtures::K3())) == fixtures::K3());
  CHECK(rank(conjunctive(fixtures::K3())) == 5);
  CHECK(rank(conjunctive(fixtures::STAR3())) == 8);
  CHECK(rank(conjunctive(fixtures::FIG1())) == 7);
}

TEST_CASE("conjunctive rank via the canonical graph") {
  CHECK(conjunctive_rank(fixtures::FIG1()) == 7);
  CHECK(conjunctive_rank(fixtures::C3()) == 8);
  CHECK(conjunctive_rank(fixtures::K3()) == 5);
  for (std::uint64_t bits = 0; bits < 512; bits += 5) {
    const Digraph d = fixtures::from_adjacency_bits(3, bits);
    CHECK(canonical_conjunctive_rank(canonicalize(d)) == rank(conjunctive(d)));
  }
}

TEST_CASE("alphabet extension") {
  const Fds neg = extend_alphabet(Fds(1, 2, {{0}}, {{1, 0}}));
  CHECK(neg.alphabet() == 3);
  CHECK(std::vector<Value>(neg.table(0).begin(), neg.table(0).end()) == std::vector<Value>{1, 0, 0});
  CHECK(rank(neg) == 2);
  CHECK(interaction_graph(neg) == fixtures::L1());

  const Fds id = extend_alphabet(Fds(1, 2, {{0}}, {{0, 1}}));
  CHECK(std::vector<Value>(id.table(0).begin(), id.table(0).end()) == std::vector<Value>{0, 1, 1});
  CHECK(rank(id) == 2);
  CHECK(rank(extend_alphabet(conjunctive(fixtures::E3()))) == 1);
}

TEST_CASE("nilpotent class two") {
  for (const Digraph& d : {fixtures::C3(), fixtures::L1()}) {
    const Fds f = nilpotent_class_two(d, 3);
    CHECK(interaction_graph(f) == d);
    CHECK(nilpotency_class(f).nil_class == 2);
    CHECK(periodic_rank(f) == 1);
  }
  CHECK(nilpotency_class(nilpotent_class_two(fixtures::E3(), 3)).nil_class == 1);
  CHECK_THROWS_AS(nilpotent_class_two(fixtures::C3(), 2), AlphabetTooSmall);
}

TEST_CASE("canonical upper witness attains U") {
  CHECK(rank(canonical_upper_witness(canonicalize(fixtures::FIG1()))) == 8);
  CHECK(rank(canonical_upper_witness(canonicalize(fixtures::STAR3()))) == 4);
  CHECK(rank(canonical_upper_witness(canonicalize(fixtures::P1()))) == 2);
}

TEST_CASE("star witness") {
  CHECK(rank(star_witness(3)) == 5);
  CHECK(rank(star_witness(5)) == 11);
  CHECK(interaction_graph(star_witness(3)) == fixtures::STAR3());
  CHECK_THROWS_AS(star_witness(4), EvenN);
}

TEST_CASE("modular network on the complete graph") {
  CHECK(fixed_points(modular_complete(3, 2)).size() == 4);
  CHECK(fixed_points(modular_complete(2, 3)).size() == 3);
  CHECK(fixed_points(modular_complete(2, 2)) == std::vector<State>{0, 3});
}

TEST_CASE("max periodic rank and max rank witnesses") {
  CHECK(periodic_rank(maxper_witness(fixtures::C3(), 2)) == 8);
  CHECK(periodic_rank(maxper_witness(fixtures::STAR3(), 3)) == 27);
  CHECK(periodic_rank(maxper_witness(fixtures::E3(), 2)) == 1);
  CHECK(rank(maxrank_witness(fixtures::P1(), 2)) == 2);
  CHECK(rank(maxrank_witness(fixtures::C3(), 2)) == 8);
  CHECK(rank(maxrank_witness(fixtures::STAR3(), 2)) == 8);
}

TEST_CASE("packing plus one") {
  const Digraph two(2, {{0, 0}, {0, 1}, {1, 1}});
  const Fds f = packing_plus_one_witness(two, {{0}, {1}});
  // States are x_0 + 2 x_1: 00, 10, 11.
  CHECK(fixed_points(f) == std::vector<State>{0, 1, 3});
  CHECK(fixed_points(packing_plus_one_witness(fixtures::C3(), {{0, 1, 2}})).size() == 2);
  CHECK(fixed_points(packing_plus_one_witness(fixtures::C3_looped(), {{0}, {1}, {2}})).size() >= 4);
  CHECK_THROWS_AS(packing_plus_one_witness(fixtures::K3(), {{0, 1}}), BadPacking);
  const Fds partial = packing_plus_one_witness(fixtures::K3(), {{0, 1}}, true);
  CHECK(fixed_points(partial).size() >= 2);
}

TEST_CASE("loop-full closed form") {
  CHECK(loopfull_maxfix(Digraph(1, {}), 2) == 2);
  CHECK(loopfull_maxfix(fixtures::P1(), 2) == 3);
  CHECK(loopfull_maxfix(fixtures::P1(), 3) == 8);
}
