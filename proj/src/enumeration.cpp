#include "fdsrank/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <unordered_map>

#include "fdsrank/canonical.hpp"
#include "fdsrank/fds.hpp"

namespace fdsrank {

namespace {

using Table = std::uint8_t;

// All tables of one arity, stored back to back.
struct TableList {
  std::size_t width = 1;  // q^arity
  std::size_t count = 0;
  std::vector<Table> data;
  const Table* at(std::size_t i) const { return data.data() + i * width; }
};

bool depends_on_every_input(const Table* t, std::size_t width, int q, int arity) {
  std::size_t weight = 1;
  for (int pos = 0; pos < arity; ++pos, weight *= q) {
    bool essential = false;
    for (std::size_t idx = 0; idx < width && !essential; ++idx) {
      if ((idx / weight) % q != 0) continue;
      for (int digit = 1; digit < q && !essential; ++digit) essential = t[idx + digit * weight] != t[idx];
    }
    if (!essential) return false;
  }
  return true;
}

TableList build_tables(int q, int arity, bool strict) {
  TableList list;
  list.width = saturating_pow(q, arity);
  std::vector<Table> t(list.width, 0);
  for (;;) {
    if (!strict || depends_on_every_input(t.data(), list.width, q, arity)) {
      list.data.insert(list.data.end(), t.begin(), t.end());
      ++list.count;
    }
    std::size_t i = 0;
    while (i < list.width && ++t[i] == q) t[i++] = 0;
    if (i == list.width) break;
  }
  return list;
}

// log2 of the family size, cheap enough to evaluate before any big numbers.
double family_log2(const Digraph& d, int q) {
  double bits = 0;
  for (Vertex v = 0; v < d.size(); ++v) bits += std::pow(double(q), d.in_degree(v)) * std::log2(double(q));
  return bits;
}

// local_index[v][x]: table index of vertex v at state x.
std::vector<std::vector<std::uint32_t>> local_indices(const Digraph& d, int q, std::uint64_t states) {
  const int n = d.size();
  std::vector<std::uint64_t> power(n, 1);
  for (int v = 1; v < n; ++v) power[v] = power[v - 1] * q;
  std::vector<std::vector<std::uint32_t>> out(n, std::vector<std::uint32_t>(states));
  for (Vertex v = 0; v < n; ++v) {
    for (std::uint64_t x = 0; x < states; ++x) {
      std::uint32_t idx = 0, weight = 1;
      for (Vertex u : d.in(v)) {
        idx += static_cast<std::uint32_t>((x / power[u]) % q) * weight;
        weight *= q;
      }
      out[v][x] = idx;
    }
  }
  return out;
}

class Histogram {
 public:
  explicit Histogram(std::uint64_t max_value) {
    if (max_value + 1 <= (std::uint64_t{1} << 20)) dense_.assign(max_value + 1, 0);
  }
  void add(std::uint64_t value, std::uint64_t count = 1) {
    if (!dense_.empty()) dense_[value] += count;
    else sparse_[value] += count;
  }
  void merge(const Histogram& other) {
    for (std::size_t v = 0; v < other.dense_.size(); ++v) {
      if (other.dense_[v] != 0) add(v, other.dense_[v]);
    }
    for (const auto& [v, c] : other.sparse_) add(v, c);
  }
  QuantityStats finish(std::uint64_t total) const {
    QuantityStats s;
    for (std::size_t v = 0; v < dense_.size(); ++v) {
      if (dense_[v] != 0) s.histogram[v] = dense_[v];
    }
    for (const auto& [v, c] : sparse_) s.histogram[v] += c;
    mpz_class weighted = 0;
    for (const auto& [v, c] : s.histogram) weighted += mpz_class(std::to_string(v)) * mpz_class(std::to_string(c));
    if (!s.histogram.empty()) {
      s.min = s.histogram.begin()->first;
      s.max = s.histogram.rbegin()->first;
    }
    s.average = total == 0 ? mpq_class(0) : mpq_class(weighted, mpz_class(std::to_string(total)));
    s.average.canonicalize();
    return s;
  }

 private:
  std::vector<std::uint64_t> dense_;
  std::unordered_map<std::uint64_t, std::uint64_t> sparse_;
};

struct Accumulator {
  explicit Accumulator(std::uint64_t states) : rank(states), periodic(states), fixed(states) {}
  Histogram rank, periodic, fixed;
  std::uint64_t count = 0;
  void merge(const Accumulator& o) {
    rank.merge(o.rank);
    periodic.merge(o.periodic);
    fixed.merge(o.fixed);
    count += o.count;
  }
};

void require_state_space(const Digraph& d, int q, const Limits& limits) {
  if (d.size() < 1) throw ShapeMismatch("enumeration needs at least one vertex");
  const std::uint64_t states = saturating_pow(q, d.size());
  if (states > limits.max_states) {
    throw SizeLimitExceeded("state space", std::to_string(q) + "^" + std::to_string(d.size()),
                            std::to_string(limits.max_states));
  }
  if (q > 255) throw ValueOutOfRange("enumeration supports q <= 255");
  if (q < 2) throw ValueOutOfRange("alphabet size must be at least 2");
}

}  // namespace

mpz_class essential_table_count(int q, int k) {
  mpz_class total = 0;
  for (int j = 0; j <= k; ++j) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), k, j);
    mpz_class inner;
    mpz_ui_pow_ui(inner.get_mpz_t(), q, j);
    mpz_class term;
    mpz_ui_pow_ui(term.get_mpz_t(), q, inner.get_ui());
    term *= binom;
    if ((k - j) % 2 == 0) total += term;
    else total -= term;
  }
  return total;
}

mpz_class family_size(const Digraph& d, int q, bool strict) {
  mpz_class total = 1;
  for (Vertex v = 0; v < d.size(); ++v) {
    const int k = d.in_degree(v);
    if (strict) {
      total *= essential_table_count(q, k);
    } else {
      mpz_class width;
      mpz_ui_pow_ui(width.get_mpz_t(), q, k);
      mpz_class count;
      mpz_ui_pow_ui(count.get_mpz_t(), q, width.get_ui());
      total *= count;
    }
  }
  return total;
}

StatsReport enumerate_stats(const Digraph& d, int q, bool strict, const Limits& limits, unsigned threads) {
  require_state_space(d, q, limits);
  const double bits = family_log2(d, q);
  if (bits > 4096) {
    throw SizeLimitExceeded("function family", "about 2^" + std::to_string(static_cast<long long>(bits)),
                            std::to_string(limits.max_functions));
  }
  const mpz_class size = family_size(d, q, strict);
  if (size > mpz_class(std::to_string(limits.max_functions))) {
    throw SizeLimitExceeded("function family", size.get_str(), std::to_string(limits.max_functions));
  }

  const int n = d.size();
  const std::uint64_t states = saturating_pow(q, n);
  StatsReport report;
  report.fingerprint = d.fingerprint();
  report.q = q;
  report.strict = strict;
  report.function_count = size.get_ui();

  std::vector<TableList> lists;
  {
    std::vector<std::optional<TableList>> cache(static_cast<std::size_t>(n) + 1);
    for (Vertex v = 0; v < n; ++v) {
      const int k = d.in_degree(v);
      if (!cache[k]) cache[k] = build_tables(q, k, strict);
      lists.push_back(*cache[k]);
    }
  }
  const auto index = local_indices(d, q, states);
  std::vector<State> power(n, 1);
  for (int v = 1; v < n; ++v) power[v] = power[v - 1] * q;

  const Vertex outer = n - 1;
  const std::size_t outer_count = lists[outer].count;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, outer_count));

  auto work = [&](unsigned worker, Accumulator& acc) {
    DynamicsScratch scratch(states);
    // suffix[v][x] = sum over u >= v of f_u(x) q^u.
    std::vector<std::vector<State>> suffix(n + 1, std::vector<State>(states, 0));
    std::vector<std::size_t> digit(n, 0);
    auto refresh = [&](Vertex v) {
      const Table* t = lists[v].at(digit[v]);
      const auto& idx = index[v];
      auto& dst = suffix[v];
      const auto& above = suffix[v + 1];
      for (std::uint64_t x = 0; x < states; ++x) dst[x] = above[x] + t[idx[x]] * power[v];
    };
    for (std::size_t top = worker; top < outer_count; top += threads) {
      std::fill(digit.begin(), digit.end(), 0);
      digit[outer] = top;
      for (Vertex v = outer; v >= 0; --v) refresh(v);
      for (;;) {
        const auto& map = suffix[0];
        const auto [image, periodic] = scratch.rank_and_periodic(map);
        acc.rank.add(image);
        acc.periodic.add(periodic);
        acc.fixed.add(DynamicsScratch::fixed_count(map));
        ++acc.count;
        Vertex k = 0;
        while (k < outer) {
          if (++digit[k] < lists[k].count) break;
          digit[k++] = 0;
        }
        if (k == outer) break;
        for (Vertex v = k; v >= 0; --v) refresh(v);
      }
    }
  };

  std::vector<Accumulator> accs(threads, Accumulator(states));
  if (threads == 1) {
    work(0, accs[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w, std::ref(accs[w]));
    for (auto& t : pool) t.join();
  }
  for (unsigned w = 1; w < threads; ++w) accs[0].merge(accs[w]);
  const Accumulator& total = accs[0];
  if (total.count != report.function_count) throw std::logic_error("enumeration count mismatch");

  report.rank = total.rank.finish(total.count);
  report.periodic_rank = total.periodic.finish(total.count);
  report.fixed_points = total.fixed.finish(total.count);
  const auto zero = report.fixed_points.histogram.find(0);
  const std::uint64_t free_count = zero == report.fixed_points.histogram.end() ? 0 : zero->second;
  report.fixed_point_free_fraction = mpq_class(mpz_class(std::to_string(free_count)), size);
  report.fixed_point_free_fraction.canonicalize();
  return report;
}

std::uint64_t minrank_exact(const Digraph& d, int q, const Limits& limits) {
  require_state_space(d, q, limits);
  const int n = d.size();
  const std::uint64_t states = saturating_pow(q, n);
  for (Vertex v = 0; v < n; ++v) {
    // Every table list is materialised; refuse lists that cannot fit.
    if (std::pow(double(q), d.in_degree(v)) * std::log2(double(q)) > std::log2(double(limits.max_functions))) {
      throw SizeLimitExceeded("table list for vertex " + std::to_string(v + 1),
                              std::to_string(q) + "^(" + std::to_string(q) + "^" +
                                  std::to_string(d.in_degree(v)) + ")",
                              std::to_string(limits.max_functions));
    }
  }

  std::vector<TableList> lists;
  for (Vertex v = 0; v < n; ++v) {
    if (d.is_source(v)) {
      TableList constant;
      constant.width = 1;
      constant.count = 1;
      constant.data = {0};
      lists.push_back(std::move(constant));
    } else {
      lists.push_back(build_tables(q, d.in_degree(v), true));
    }
  }
  const auto index = local_indices(d, q, states);

  // remaining_bound[k]: L' of the graph keeping only arcs into vertices >= k.
  std::vector<std::uint64_t> remaining_bound(n + 1, 1);
  for (int k = 0; k < n; ++k) {
    std::vector<Vertex> heads;
    for (Vertex v = k; v < n; ++v) heads.push_back(v);
    try {
      std::uint64_t bound = 1;
      for (const auto& comp : canonicalize(d.arcs_into(heads)).components()) {
        bound = saturating_mul(bound, refined_bound_Lp(comp));
      }
      remaining_bound[k] = bound;
    } catch (const SizeLimitExceeded&) {
      remaining_bound[k] = 1;
    }
  }

  std::uint64_t best = UINT64_MAX;
  std::uint64_t nodes = 0;
  const std::uint64_t budget = saturating_mul(limits.max_functions, 100);
  std::vector<std::vector<State>> code(n + 1, std::vector<State>(states, 0));
  std::vector<std::uint32_t> stamp(states, 0);
  std::uint32_t generation = 0;
  State weight = 1;
  std::vector<State> weights(n, 1);
  for (int v = 0; v < n; ++v) {
    weights[v] = weight;
    weight *= q;
  }

  auto search = [&](auto&& self, int k) -> void {
    for (std::size_t choice = 0; choice < lists[k].count; ++choice) {
      if (++nodes > budget) {
        throw SizeLimitExceeded("minimum-rank search nodes", std::to_string(nodes), std::to_string(budget));
      }
      const Table* t = lists[k].at(choice);
      const auto& idx = index[k];
      const auto& prev = code[k];
      auto& next = code[k + 1];
      if (++generation == 0) {
        std::fill(stamp.begin(), stamp.end(), 0);
        generation = 1;
      }
      std::uint64_t distinct = 0;
      for (std::uint64_t x = 0; x < states; ++x) {
        next[x] = prev[x] + t[idx[x]] * weights[k];
        if (stamp[next[x]] != generation) {
          stamp[next[x]] = generation;
          ++distinct;
        }
      }
      if (k + 1 == n) {
        best = std::min(best, distinct);
        continue;
      }
      if (std::max(distinct, remaining_bound[k + 1]) >= best) continue;
      self(self, k + 1);
    }
  };
  search(search, 0);
  return best;
}

UnivariateBaseline univariate_baseline(int q, const Limits& limits) {
  if (q < 2) throw ValueOutOfRange("alphabet size must be at least 2");
  const std::uint64_t maps = saturating_pow(q, q);
  if (maps > limits.max_functions) {
    throw SizeLimitExceeded("univariate maps", std::to_string(q) + "^" + std::to_string(q),
                            std::to_string(limits.max_functions));
  }
  UnivariateBaseline out;
  out.q = q;
  mpq_class keep(q - 1, q);
  mpq_class power = 1;
  for (int i = 0; i < q; ++i) power *= keep;
  out.closed_form = (1 - power) * q;
  out.closed_form.canonicalize();
  out.expected_fixed_point_free = saturating_pow(q - 1, q);

  std::vector<int> f(q, 0);
  std::vector<char> seen(q);
  mpz_class total_rank = 0;
  for (std::uint64_t m = 0; m < maps; ++m) {
    std::fill(seen.begin(), seen.end(), 0);
    int distinct = 0;
    bool fixed = false;
    for (int x = 0; x < q; ++x) {
      if (!seen[f[x]]) {
        seen[f[x]] = 1;
        ++distinct;
      }
      fixed = fixed || f[x] == x;
    }
    total_rank += distinct;
    if (!fixed) ++out.fixed_point_free;
    for (int i = 0; i < q && ++f[i] == q; ++i) f[i] = 0;
  }
  out.enumerated = mpq_class(total_rank, mpz_class(std::to_string(maps)));
  out.enumerated.canonicalize();
  return out;
}

}  // namespace fdsrank
