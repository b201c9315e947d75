#include <doctest.h>

#include <set>

#include "fdsrank/fds.hpp"

using namespace fdsrank;

namespace {

// x_v <- x_{v-1} on the 3-cycle 0 -> 1 -> 2 -> 0.
Fds shift_c3(int q) {
  std::vector<Value> identity(q);
  for (int i = 0; i < q; ++i) identity[i] = static_cast<Value>(i);
  return Fds(3, q, {{2}, {0}, {1}}, {identity, identity, identity});
}

Fds negation_l1() { return Fds(1, 2, {{0}}, {{1, 0}}); }

Fds constant(int n, int q, Value c) {
  return Fds(n, q, std::vector<std::vector<Vertex>>(n), std::vector<std::vector<Value>>(n, {c}));
}

}  // namespace

TEST_CASE("validation") {
  CHECK(Fds(1, 2, {{0}}, {{0, 1}}).table(0).size() == 2);
  CHECK_THROWS_AS(Fds(1, 2, {{0}}, {{0, 2}}), ValueOutOfRange);
  CHECK_THROWS_AS(Fds(2, 2, {{4}, {}}, {{0, 1}, {0}}), ShapeMismatch);
  CHECK_THROWS_AS(Fds(1, 2, {{0}}, {{0, 1, 0}}), ShapeMismatch);
}

TEST_CASE("encoding is little-endian in vertex order") {
  const Fds f = constant(3, 3, 0);
  const std::vector<Value> x{1, 2, 0};
  CHECK(f.encode(x) == 1 + 2 * 3);
  CHECK(f.decode(7) == x);
}

TEST_CASE("trajectories") {
  CHECK(evaluate_trajectory(negation_l1(), 0, 2) == std::vector<State>{0, 1, 0});
  const auto t = evaluate_trajectory(constant(2, 2, 1), 0, 2);
  CHECK(t[1] == 3);
  CHECK(t[2] == 3);

  // Acyclic interaction graph: f^n is constant.
  const Fds path(3, 2, {{}, {0}, {1}}, {{1}, {1, 0}, {0, 1}});
  std::set<State> ends;
  for (State x = 0; x < 8; ++x) ends.insert(evaluate_trajectory(path, x, 3).back());
  CHECK(ends.size() == 1);
}

TEST_CASE("interaction graph keeps essential inputs only") {
  const Fds swap(2, 2, {{1}, {0}}, {{0, 1}, {0, 1}});
  CHECK(interaction_graph(swap) == Digraph(2, {{0, 1}, {1, 0}}));
  // Second input of vertex 0 is declared but ignored.
  const Fds padded(2, 2, {{0, 1}, {}}, {{0, 1, 0, 1}, {0}});
  CHECK(interaction_graph(padded) == Digraph(2, {{0, 0}}));
  CHECK(interaction_graph(constant(3, 2, 1)).arc_count() == 0);
}

TEST_CASE("rank, fixed points and periodic rank") {
  CHECK(rank(shift_c3(2)) == 8);
  CHECK(rank(constant(3, 2, 0)) == 1);
  CHECK(fixed_points(shift_c3(2)) == std::vector<State>{0, 7});
  CHECK(fixed_points(negation_l1()).empty());
  CHECK(periodic_rank(shift_c3(2)) == 8);
  CHECK(periodic_rank(constant(2, 3, 2)) == 1);
}

TEST_CASE("nilpotency") {
  const auto c = nilpotency_class(constant(2, 2, 1));
  CHECK(c.nilpotent);
  CHECK(c.nil_class == 1);
  CHECK_FALSE(nilpotency_class(shift_c3(2)).nilpotent);
}

TEST_CASE("state-space guard") {
  Limits tight;
  tight.max_states = 4;
  CHECK_THROWS_AS(rank(shift_c3(2), tight), SizeLimitExceeded);
}

TEST_CASE("scratch kernels agree with direct counts") {
  const auto map = image_map(shift_c3(3));
  DynamicsScratch scratch(map.size());
  const auto [r, p] = scratch.rank_and_periodic(map);
  CHECK(r == 27);
  CHECK(p == 27);
  CHECK(DynamicsScratch::fixed_count(map) == 3);
}
