#include <doctest.h>

#include "fdsrank/canonical.hpp"
#include "fdsrank/constructions.hpp"

using namespace fdsrank;

TEST_CASE("canonical version of C3 is three copies of P1") {
  const CanonicalGraph c = canonicalize(fixtures::C3());
  CHECK(c.source_count() == 3);
  CHECK(c.sink_count() == 3);
  CHECK(c.as_digraph().arc_count() == 3);
  CHECK(c.components().size() == 3);
  CHECK(c.is_fixed_point());
}

TEST_CASE("canonical version of STAR3") {
  const CanonicalGraph c = canonicalize(fixtures::STAR3());
  REQUIRE(c.source_count() == 4);
  REQUIRE(c.sink_count() == 3);
  // Sinks are the copies of satellites 2, 3, 4; the centre's sink copy is gone.
  for (int j = 0; j < 3; ++j) {
    const auto p = c.provenance(c.source_count() + j);
    CHECK(p.copy == 1);
    CHECK(p.original == j + 1);
  }
  CHECK(c.as_digraph().arc_count() == 6);
}

TEST_CASE("canonical version of E3 is empty") { CHECK(canonicalize(fixtures::E3()).empty()); }

TEST_CASE("canonicalization is idempotent up to isomorphism") {
  for (std::uint64_t bits = 0; bits < 512; bits += 7) {
    const CanonicalGraph c = canonicalize(fixtures::from_adjacency_bits(3, bits));
    if (c.empty()) continue;
    const CanonicalGraph again = canonicalize(c.as_digraph());
    CHECK(isomorphic(again.as_digraph(), c.as_digraph()));
  }
}

TEST_CASE("bounds U, L and L'") {
  const CanonicalGraph fig1 = canonicalize(fixtures::FIG1());
  CHECK(upper_bound_U(fig1) == 8);
  CHECK(lower_bound_L(fig1) == 4);
  CHECK(refined_bound_Lp(fig1) == 6);

  const CanonicalGraph star = canonicalize(fixtures::STAR3());
  CHECK(upper_bound_U(star) == 4);
  CHECK(lower_bound_L(star) == 4);
  CHECK(refined_bound_Lp(star) == 4);

  const CanonicalGraph empty = canonicalize(fixtures::E3());
  CHECK(upper_bound_U(empty) == 1);
  CHECK(lower_bound_L(empty) == 1);

  CHECK(refined_bound_Lp(canonicalize(fixtures::P1())) == 2);
}

TEST_CASE("L <= L' <= U on every 3-vertex digraph") {
  for (std::uint64_t bits = 0; bits < 512; ++bits) {
    const CanonicalGraph c = canonicalize(fixtures::from_adjacency_bits(3, bits));
    const auto l = lower_bound_L(c), lp = refined_bound_Lp(c), u = upper_bound_U(c);
    CHECK(l <= lp);
    CHECK(lp <= u);
  }
}

TEST_CASE("tightness") {
  const Tightness star = tightness_classify(canonicalize(fixtures::STAR3()));
  CHECK(star.tight);
  REQUIRE(star.witness.has_value());
  CHECK(isomorphic(*star.witness, fixtures::STAR3()));

  const Tightness fig1 = tightness_classify(canonicalize(fixtures::FIG1()));
  CHECK_FALSE(fig1.tight);
  CHECK(fig1.lower == 4);
  CHECK(fig1.upper == 8);

  const Tightness k3 = tightness_classify(canonicalize(fixtures::K3()));
  CHECK_FALSE(k3.tight);
  CHECK(k3.lower == 3);
  CHECK(k3.upper == 4);
}

TEST_CASE("minrank classification") {
  CHECK(minrank_classify(fixtures::E3()) == MinrankClass::One);
  CHECK(minrank_classify(Digraph(3, {{0, 1}, {0, 2}})) == MinrankClass::Two);
  CHECK(minrank_classify(fixtures::C3()) == MinrankClass::Full);
  CHECK(minrank_classify(fixtures::STAR3()) == MinrankClass::Other);
}

TEST_CASE("absolute minrank bounds") {
  const auto star = absolute_minrank_bounds(fixtures::STAR3());
  CHECK(star.lower == 4);
  CHECK(star.upper == 4);
  CHECK(star.exact);
  // (n + 1) m with n = 4 vertices and m = 6 arcs.
  CHECK(star.stabilization_q == 30);

  const auto fig1 = absolute_minrank_bounds(fixtures::FIG1());
  CHECK(fig1.lower == 6);
  CHECK(fig1.upper == 7);
  CHECK_FALSE(fig1.exact);
  CHECK(fig1.stabilization_q == 48);

  const auto e3 = absolute_minrank_bounds(fixtures::E3());
  CHECK(e3.lower == 1);
  CHECK(e3.upper == 1);
  CHECK(e3.stabilization_q == 2);
}

TEST_CASE("simultaneous sink removal loses conjunctive rank") {
  // N(1) = N(2) = {1, 2}, N(3) = {1}: sinks 1 and 2 are each redundant, but
  // not both at once.
  const Digraph d(3, {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {0, 2}});
  CHECK(rank(conjunctive(d)) == 3);
  CHECK(canonical_conjunctive_rank(canonicalize(d)) == 3);
  CHECK(canonical_conjunctive_rank(canonicalize(d, RemovalPolicy::Simultaneous)) == 2);
}
