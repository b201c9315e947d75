#ifndef FDSRANK_FDS_HPP_
#define FDSRANK_FDS_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fdsrank/common.hpp"
#include "fdsrank/digraph.hpp"

namespace fdsrank {

using Value = std::uint32_t;
// A state x in <q>^n serialised as sum_v x_v q^v (x_1 least significant).
using State = std::uint64_t;

// Finite dynamical system given by one lookup table per vertex over its
// declared inputs. Table index is little-endian in the declared order:
// sum_i x_{inputs[i]} q^i.
class Fds {
 public:
  Fds() = default;
  // Throws ShapeMismatch (bad input vertex, duplicate input, wrong table
  // length, q < 2) or ValueOutOfRange (entry >= q).
  Fds(int n, int q, std::vector<std::vector<Vertex>> inputs, std::vector<std::vector<Value>> tables);

  int size() const noexcept { return n_; }
  int alphabet() const noexcept { return q_; }
  std::span<const Vertex> inputs(Vertex v) const { return inputs_[v]; }
  std::span<const Value> table(Vertex v) const { return tables_[v]; }

  // q^n, saturating.
  std::uint64_t state_count() const;
  Value local(Vertex v, State x) const;
  State apply(State x) const;

  std::vector<Value> decode(State x) const;
  State encode(std::span<const Value> coords) const;

  // Arc u->v for every declared input u of v.
  Digraph declared_graph() const;

 private:
  int n_ = 0;
  int q_ = 2;
  std::vector<std::vector<Vertex>> inputs_;
  std::vector<std::vector<Value>> tables_;
  std::vector<State> power_;  // q^v
};

Fds make_fds(int n, int q, std::vector<std::vector<Vertex>> inputs,
             std::vector<std::vector<Value>> tables);

// x, f(x), ..., f^k(x).
std::vector<State> evaluate_trajectory(const Fds& f, State x, int k);

// Arcs u->v where f_v depends essentially on x_u.
Digraph interaction_graph(const Fds& f);

// f over every state; guarded by Limits::max_states.
std::vector<State> image_map(const Fds& f, const Limits& limits = {});

std::uint64_t rank(const Fds& f, const Limits& limits = {});
std::vector<State> fixed_points(const Fds& f, const Limits& limits = {});
std::uint64_t periodic_rank(const Fds& f, const Limits& limits = {});

struct Nilpotency {
  bool nilpotent = false;
  std::optional<int> nil_class;
};
Nilpotency nilpotency_class(const Fds& f, const Limits& limits = {});

// Reusable whole-space kernels over an explicit map (map[x] = f(x)).
class DynamicsScratch {
 public:
  explicit DynamicsScratch(std::size_t states) : stamp_(states, 0), buffer_(), next_() {}

  std::uint64_t rank(std::span<const State> map);
  // Size of the eventual image, by iterating S <- f(S) from the whole space.
  std::uint64_t periodic_rank(std::span<const State> map);
  // {rank, periodic rank} sharing the first image pass.
  std::pair<std::uint64_t, std::uint64_t> rank_and_periodic(std::span<const State> map);
  // Number of iterations until the image is a single state; nullopt if never.
  std::optional<int> nilpotency_class(std::span<const State> map);
  static std::uint64_t fixed_count(std::span<const State> map);

 private:
  // Writes the distinct images of `from` into `to`; returns its size.
  std::size_t step(std::span<const State> map, const std::vector<State>& from, std::vector<State>& to);
  std::uint32_t next_generation();

  std::vector<std::uint32_t> stamp_;
  std::uint32_t generation_ = 0;
  std::vector<State> buffer_;
  std::vector<State> next_;
};

}  // namespace fdsrank

#endif  // FDSRANK_FDS_HPP_
