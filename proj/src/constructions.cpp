#include "fdsrank/constructions.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

#include "fdsrank/graph_invariants.hpp"

namespace fdsrank {

namespace {

std::vector<Vertex> in_list(const Digraph& d, Vertex v) { return {d.in(v).begin(), d.in(v).end()}; }

// Fills a table over `arity` inputs by calling value(digits).
template <class F>
std::vector<Value> tabulate(int q, std::size_t arity, F value) {
  const std::uint64_t size = saturating_pow(q, arity);
  std::vector<Value> table(size);
  std::vector<Value> digits(arity, 0);
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    table[idx] = value(digits);
    for (std::size_t i = 0; i < arity; ++i) {
      if (++digits[i] < static_cast<Value>(q)) break;
      digits[i] = 0;
    }
  }
  return table;
}

}  // namespace

Fds conjunctive(const Digraph& d) {
  std::vector<std::vector<Vertex>> inputs(d.size());
  std::vector<std::vector<Value>> tables(d.size());
  for (Vertex v = 0; v < d.size(); ++v) {
    inputs[v] = in_list(d, v);
    tables[v] = tabulate(2, inputs[v].size(), [](const std::vector<Value>& x) {
      return static_cast<Value>(std::all_of(x.begin(), x.end(), [](Value b) { return b == 1; }));
    });
  }
  return Fds(d.size(), 2, std::move(inputs), std::move(tables));
}

std::optional<std::uint64_t> canonical_conjunctive_rank(const CanonicalGraph& c, const Limits& limits) {
  // Sources are constantly 1, so images are the distinct sink patterns.
  const std::uint64_t assignments = saturating_pow(2, c.source_count());
  if (assignments > limits.max_states || c.sink_count() > 64) return std::nullopt;
  std::unordered_set<std::uint64_t> seen;
  for (std::uint64_t x = 0; x < assignments; ++x) {
    std::uint64_t y = 0;
    for (int j = 0; j < c.sink_count(); ++j) {
      if ((c.sink_in(j) & ~x) == 0) y |= std::uint64_t{1} << j;
    }
    seen.insert(y);
  }
  return seen.size();
}

std::uint64_t conjunctive_rank(const Digraph& d, const Limits& limits) {
  const CanonicalGraph c = canonicalize(d);
  const auto via_canonical = canonical_conjunctive_rank(c, limits);
  if (!via_canonical) {
    throw SizeLimitExceeded("conjunctive rank", "2^" + std::to_string(c.source_count()),
                            std::to_string(limits.max_states));
  }
  if (saturating_pow(2, d.size()) <= limits.max_states) {
    const std::uint64_t direct = rank(conjunctive(d), limits);
    if (direct != *via_canonical) {
      throw std::logic_error("conjunctive rank mismatch: direct " + std::to_string(direct) + ", canonical " +
                             std::to_string(*via_canonical));
    }
  }
  return *via_canonical;
}

Fds extend_alphabet(const Fds& f) {
  const int q = f.alphabet();
  std::vector<std::vector<Vertex>> inputs(f.size());
  std::vector<std::vector<Value>> tables(f.size());
  for (Vertex v = 0; v < f.size(); ++v) {
    inputs[v].assign(f.inputs(v).begin(), f.inputs(v).end());
    const auto old = f.table(v);
    tables[v] = tabulate(q + 1, inputs[v].size(), [&](const std::vector<Value>& x) {
      std::size_t idx = 0, weight = 1;
      for (Value digit : x) {
        idx += std::min<Value>(digit, q - 1) * weight;
        weight *= q;
      }
      return old[idx];
    });
  }
  return Fds(f.size(), q + 1, std::move(inputs), std::move(tables));
}

Fds nilpotent_class_two(const Digraph& d, int q) {
  if (q < 3) throw AlphabetTooSmall("class-two construction needs q >= 3, got " + std::to_string(q));
  std::vector<std::vector<Vertex>> inputs(d.size());
  std::vector<std::vector<Value>> tables(d.size());
  for (Vertex v = 0; v < d.size(); ++v) {
    inputs[v] = in_list(d, v);
    tables[v] = tabulate(q, inputs[v].size(), [](const std::vector<Value>& x) {
      return static_cast<Value>(std::any_of(x.begin(), x.end(), [](Value b) { return b >= 2; }));
    });
  }
  return Fds(d.size(), q, std::move(inputs), std::move(tables));
}

Fds canonical_upper_witness(const CanonicalGraph& c) {
  const int q = std::max(c.sink_count(), 2);
  const Digraph g = c.as_digraph();
  std::vector<std::vector<Vertex>> inputs(g.size());
  std::vector<std::vector<Value>> tables(g.size());
  for (Vertex v = 0; v < g.size(); ++v) {
    inputs[v] = in_list(g, v);
    if (v < c.source_count()) {
      tables[v] = {0};
      continue;
    }
    const Value j = static_cast<Value>(v - c.source_count());
    tables[v] = tabulate(q, inputs[v].size(), [j](const std::vector<Value>& x) {
      return static_cast<Value>(std::all_of(x.begin(), x.end(), [j](Value b) { return b == j; }));
    });
  }
  return Fds(g.size(), q, std::move(inputs), std::move(tables));
}

Fds star_witness(int n) {
  if (n < 3 || n % 2 == 0) throw EvenN("star witness needs an odd n >= 3, got " + std::to_string(n));
  std::vector<std::vector<Vertex>> inputs(n + 1);
  std::vector<std::vector<Value>> tables(n + 1);
  tables[0] = {1};
  const int positive = (n + 1) / 2;
  for (Vertex v = 1; v <= n; ++v) {
    inputs[v] = {0, v};
    // Index is x_centre + 2 x_v.
    tables[v] = v <= positive ? std::vector<Value>{0, 0, 0, 1} : std::vector<Value>{0, 0, 1, 0};
  }
  return Fds(n + 1, 2, std::move(inputs), std::move(tables));
}

Fds modular_complete(int n, int q) {
  if (n < 2) throw ShapeMismatch("modular network needs n >= 2");
  std::vector<std::vector<Vertex>> inputs(n);
  std::vector<std::vector<Value>> tables(n);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u = 0; u < n; ++u) {
      if (u != v) inputs[v].push_back(u);
    }
    tables[v] = tabulate(q, inputs[v].size(), [q](const std::vector<Value>& x) {
      std::uint64_t sum = 0;
      for (Value b : x) sum += b;
      return static_cast<Value>((q - sum % q) % q);
    });
  }
  return Fds(n, q, std::move(inputs), std::move(tables));
}

namespace {

Fds copy_network(int n, int q, const std::vector<Vertex>& source_of) {
  std::vector<std::vector<Vertex>> inputs(n);
  std::vector<std::vector<Value>> tables(n);
  for (Vertex v = 0; v < n; ++v) {
    if (source_of[v] < 0) {
      tables[v] = {0};
    } else {
      inputs[v] = {source_of[v]};
      tables[v] = tabulate(q, 1, [](const std::vector<Value>& x) { return x[0]; });
    }
  }
  return Fds(n, q, std::move(inputs), std::move(tables));
}

}  // namespace

Fds maxper_witness(const Digraph& d, int q) {
  const auto succ = maximum_cycle_cover(d);
  std::vector<Vertex> pred(d.size(), -1);
  for (Vertex u = 0; u < d.size(); ++u) {
    if (succ[u] >= 0) pred[succ[u]] = u;
  }
  return copy_network(d.size(), q, pred);
}

Fds maxrank_witness(const Digraph& d, int q) {
  std::vector<Vertex> tail(d.size(), -1);
  for (const Arc& a : maximum_independent_arcs(d)) tail[a.to] = a.from;
  return copy_network(d.size(), q, tail);
}

Fds packing_plus_one_witness(const Digraph& d, const std::vector<std::vector<Vertex>>& packing,
                             bool allow_partial) {
  const int n = d.size();
  std::vector<int> cycle_of(n, -1);
  std::vector<Vertex> pred(n, -1);
  for (std::size_t i = 0; i < packing.size(); ++i) {
    const auto& cyc = packing[i];
    if (cyc.empty()) throw BadPacking("cycle " + std::to_string(i + 1) + " is empty");
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      const Vertex u = cyc[k];
      const Vertex w = cyc[(k + 1) % cyc.size()];
      if (u < 0 || u >= n) throw BadPacking("cycle " + std::to_string(i + 1) + " names a missing vertex");
      if (cycle_of[u] >= 0) throw BadPacking("vertex " + std::to_string(u + 1) + " lies on two cycles");
      if (w < 0 || w >= n || !d.has_arc(u, w)) {
        throw BadPacking("cycle " + std::to_string(i + 1) + " uses an arc missing from the graph");
      }
      cycle_of[u] = static_cast<int>(i);
      pred[w] = u;
    }
  }
  if (!allow_partial) {
    for (Vertex v = 0; v < n; ++v) {
      if (cycle_of[v] < 0) throw BadPacking("vertex " + std::to_string(v + 1) + " is not covered");
    }
  }

  // f_v = (x_pred AND same-or-earlier-cycle inputs) OR later-cycle inputs.
  std::vector<std::vector<Vertex>> inputs(n);
  std::vector<std::vector<Value>> tables(n);
  for (Vertex v = 0; v < n; ++v) {
    if (cycle_of[v] < 0) {
      tables[v] = {0};
      continue;
    }
    std::vector<bool> later;
    for (Vertex u : d.in(v)) {
      if (cycle_of[u] < 0) continue;
      inputs[v].push_back(u);
      later.push_back(cycle_of[u] > cycle_of[v]);
    }
    tables[v] = tabulate(2, inputs[v].size(), [&later](const std::vector<Value>& x) {
      bool conj = true, disj = false;
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (later[i]) disj = disj || x[i] == 1;
        else conj = conj && x[i] == 1;
      }
      return static_cast<Value>(conj || disj);
    });
  }
  return Fds(n, 2, std::move(inputs), std::move(tables));
}

std::uint64_t loopfull_maxfix(const Digraph& d, int q, const Limits& limits) {
  const auto profile = in_dominating_profile(d, limits);
  std::uint64_t total = 0;
  for (std::size_t k = 0; k < profile.size(); ++k) {
    const std::uint64_t term = saturating_mul(saturating_pow(q - 1, k), profile[k]);
    total = term > UINT64_MAX - total ? UINT64_MAX : total + term;
  }
  return total;
}

}  // namespace fdsrank
