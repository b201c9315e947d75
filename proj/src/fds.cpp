#include "fdsrank/fds.hpp"

#include <algorithm>

namespace fdsrank {

Fds::Fds(int n, int q, std::vector<std::vector<Vertex>> inputs, std::vector<std::vector<Value>> tables)
    : n_(n), q_(q), inputs_(std::move(inputs)), tables_(std::move(tables)) {
  if (n < 1) throw ShapeMismatch("an FDS needs at least one vertex");
  if (q < 2) throw ShapeMismatch("alphabet size must be at least 2");
  if (static_cast<int>(inputs_.size()) != n || static_cast<int>(tables_.size()) != n) {
    throw ShapeMismatch("expected one input list and one table per vertex");
  }
  for (Vertex v = 0; v < n; ++v) {
    auto sorted = inputs_[v];
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ShapeMismatch("vertex " + std::to_string(v + 1) + " declares an input twice");
    }
    for (Vertex u : inputs_[v]) {
      if (u < 0 || u >= n) {
        throw ShapeMismatch("vertex " + std::to_string(v + 1) + " declares input " +
                            std::to_string(u + 1) + " outside 1.." + std::to_string(n));
      }
    }
    const std::uint64_t expected = saturating_pow(q, inputs_[v].size());
    if (tables_[v].size() != expected) {
      throw ShapeMismatch("vertex " + std::to_string(v + 1) + " table has " +
                          std::to_string(tables_[v].size()) + " entries, expected " +
                          std::to_string(expected));
    }
    for (Value value : tables_[v]) {
      if (value >= static_cast<Value>(q)) {
        throw ValueOutOfRange("vertex " + std::to_string(v + 1) + " table entry " +
                              std::to_string(value) + " outside 0.." + std::to_string(q - 1));
      }
    }
  }
  power_.resize(n);
  State p = 1;
  for (Vertex v = 0; v < n; ++v) {
    power_[v] = p;
    p = saturating_mul(p, q);
  }
}

std::uint64_t Fds::state_count() const { return saturating_pow(q_, n_); }

Value Fds::local(Vertex v, State x) const {
  std::size_t index = 0;
  std::size_t weight = 1;
  for (Vertex u : inputs_[v]) {
    index += ((x / power_[u]) % q_) * weight;
    weight *= q_;
  }
  return tables_[v][index];
}

State Fds::apply(State x) const {
  State y = 0;
  for (Vertex v = 0; v < n_; ++v) y += local(v, x) * power_[v];
  return y;
}

std::vector<Value> Fds::decode(State x) const {
  std::vector<Value> coords(n_);
  for (Vertex v = 0; v < n_; ++v) {
    coords[v] = static_cast<Value>(x % q_);
    x /= q_;
  }
  return coords;
}

State Fds::encode(std::span<const Value> coords) const {
  State x = 0;
  for (Vertex v = 0; v < n_; ++v) x += coords[v] * power_[v];
  return x;
}

Digraph Fds::declared_graph() const {
  std::vector<Arc> arcs;
  for (Vertex v = 0; v < n_; ++v) {
    for (Vertex u : inputs_[v]) arcs.push_back({u, v});
  }
  return Digraph(n_, std::move(arcs));
}

Fds make_fds(int n, int q, std::vector<std::vector<Vertex>> inputs,
             std::vector<std::vector<Value>> tables) {
  return Fds(n, q, std::move(inputs), std::move(tables));
}

std::vector<State> evaluate_trajectory(const Fds& f, State x, int k) {
  if (k < 0) throw ValueOutOfRange("trajectory length must be non-negative");
  if (x >= f.state_count()) throw ValueOutOfRange("state outside the state space");
  std::vector<State> out{x};
  for (int i = 0; i < k; ++i) out.push_back(f.apply(out.back()));
  return out;
}

Digraph interaction_graph(const Fds& f) {
  const int q = f.alphabet();
  std::vector<Arc> arcs;
  for (Vertex v = 0; v < f.size(); ++v) {
    const auto table = f.table(v);
    const auto inputs = f.inputs(v);
    std::size_t weight = 1;
    for (std::size_t pos = 0; pos < inputs.size(); ++pos, weight *= q) {
      // Compare each entry whose digit at `pos` is zero with its neighbours
      // along that digit.
      bool essential = false;
      for (std::size_t idx = 0; idx < table.size() && !essential; ++idx) {
        if ((idx / weight) % q != 0) continue;
        for (int digit = 1; digit < q; ++digit) {
          if (table[idx + digit * weight] != table[idx]) {
            essential = true;
            break;
          }
        }
      }
      if (essential) arcs.push_back({inputs[pos], v});
    }
  }
  return Digraph(f.size(), std::move(arcs));
}

namespace {

void require_states(const Fds& f, const Limits& limits, const char* what) {
  const std::uint64_t states = f.state_count();
  if (states > limits.max_states) {
    throw SizeLimitExceeded(what, std::to_string(f.alphabet()) + "^" + std::to_string(f.size()) +
                                      (states == UINT64_MAX ? std::string{} : " = " + std::to_string(states)),
                            std::to_string(limits.max_states));
  }
}

}  // namespace

std::vector<State> image_map(const Fds& f, const Limits& limits) {
  require_states(f, limits, "state space");
  const std::uint64_t states = f.state_count();
  std::vector<State> map(states);
  for (State x = 0; x < states; ++x) map[x] = f.apply(x);
  return map;
}

std::uint64_t rank(const Fds& f, const Limits& limits) {
  const auto map = image_map(f, limits);
  return DynamicsScratch(map.size()).rank(map);
}

std::vector<State> fixed_points(const Fds& f, const Limits& limits) {
  const auto map = image_map(f, limits);
  std::vector<State> out;
  for (State x = 0; x < map.size(); ++x) {
    if (map[x] == x) out.push_back(x);
  }
  return out;
}

std::uint64_t periodic_rank(const Fds& f, const Limits& limits) {
  const auto map = image_map(f, limits);
  return DynamicsScratch(map.size()).periodic_rank(map);
}

Nilpotency nilpotency_class(const Fds& f, const Limits& limits) {
  const auto map = image_map(f, limits);
  Nilpotency out;
  out.nil_class = DynamicsScratch(map.size()).nilpotency_class(map);
  out.nilpotent = out.nil_class.has_value();
  return out;
}

std::uint32_t DynamicsScratch::next_generation() {
  if (++generation_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    generation_ = 1;
  }
  return generation_;
}

std::uint64_t DynamicsScratch::rank(std::span<const State> map) {
  const std::uint32_t gen = next_generation();
  std::uint64_t count = 0;
  for (State y : map) {
    if (stamp_[y] != gen) {
      stamp_[y] = gen;
      ++count;
    }
  }
  return count;
}

std::size_t DynamicsScratch::step(std::span<const State> map, const std::vector<State>& from,
                                  std::vector<State>& to) {
  const std::uint32_t gen = next_generation();
  to.clear();
  for (State x : from) {
    State y = map[x];
    if (stamp_[y] != gen) {
      stamp_[y] = gen;
      to.push_back(y);
    }
  }
  return to.size();
}

std::uint64_t DynamicsScratch::periodic_rank(std::span<const State> map) {
  return rank_and_periodic(map).second;
}

std::pair<std::uint64_t, std::uint64_t> DynamicsScratch::rank_and_periodic(std::span<const State> map) {
  // f(X) first, then shrink until f is a bijection on the current set.
  const std::uint32_t gen = next_generation();
  buffer_.clear();
  for (State y : map) {
    if (stamp_[y] != gen) {
      stamp_[y] = gen;
      buffer_.push_back(y);
    }
  }
  const std::uint64_t image = buffer_.size();
  for (;;) {
    std::size_t before = buffer_.size();
    if (step(map, buffer_, next_) == before) return {image, before};
    std::swap(buffer_, next_);
  }
}

std::optional<int> DynamicsScratch::nilpotency_class(std::span<const State> map) {
  buffer_.resize(map.size());
  for (State x = 0; x < map.size(); ++x) buffer_[x] = x;
  int k = 0;
  while (buffer_.size() > 1) {
    std::size_t before = buffer_.size();
    step(map, buffer_, next_);
    ++k;
    if (next_.size() == before) return std::nullopt;
    std::swap(buffer_, next_);
  }
  return k;
}

std::uint64_t DynamicsScratch::fixed_count(std::span<const State> map) {
  std::uint64_t count = 0;
  for (State x = 0; x < map.size(); ++x) count += map[x] == x ? 1 : 0;
  return count;
}

}  // namespace fdsrank
