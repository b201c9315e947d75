#include "fdsrank/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "fdsrank/constructions.hpp"
#include "fdsrank/graph_invariants.hpp"
#include "fdsrank/lp.hpp"

namespace fdsrank {

namespace {

class MaxClique {
 public:
  explicit MaxClique(std::vector<std::vector<std::uint64_t>> adj)
      : adj_(std::move(adj)), words_(adj_.empty() ? 0 : adj_[0].size()) {}

  int solve() {
    std::vector<std::uint64_t> all(words_, 0);
    for (std::size_t v = 0; v < adj_.size(); ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);
    if (!adj_.empty()) expand(all, 0);
    return best_;
  }

 private:
  static bool empty(const std::vector<std::uint64_t>& s) {
    return std::all_of(s.begin(), s.end(), [](std::uint64_t w) { return w == 0; });
  }

  void expand(std::vector<std::uint64_t> p, int size) {
    // Greedy colouring: vertices in colour class c can extend a clique by at
    // most c more vertices.
    std::vector<int> order, colour;
    std::vector<std::uint64_t> uncoloured = p;
    int c = 0;
    while (!empty(uncoloured)) {
      ++c;
      std::vector<std::uint64_t> q = uncoloured;
      for (std::size_t w = 0; w < words_; ++w) {
        while (q[w] != 0) {
          const int v = static_cast<int>(w * 64 + std::countr_zero(q[w]));
          q[w] &= q[w] - 1;
          uncoloured[w] &= ~(std::uint64_t{1} << (v % 64));
          for (std::size_t k = 0; k < words_; ++k) q[k] &= ~adj_[v][k];
          order.push_back(v);
          colour.push_back(c);
        }
      }
    }
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (size + colour[i] <= best_) return;
      const int v = order[i];
      std::vector<std::uint64_t> next(words_);
      for (std::size_t k = 0; k < words_; ++k) next[k] = p[k] & adj_[v][k];
      if (empty(next)) best_ = std::max(best_, size + 1);
      else expand(std::move(next), size + 1);
      p[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    }
  }

  std::vector<std::vector<std::uint64_t>> adj_;
  std::size_t words_;
  int best_ = 0;
};

std::string rational_text(const mpq_class& v) {
  return v.get_den() == 1 ? v.get_num().get_str() : v.get_num().get_str() + "/" + v.get_den().get_str();
}

}  // namespace

std::uint64_t max_code_size(int n, int q, std::optional<int> d, const Limits& limits) {
  if (n < 0 || q < 2) throw ValueOutOfRange("code size needs n >= 0 and q >= 2");
  if (!d || *d > n) return 1;
  const std::uint64_t space = saturating_pow(q, n);
  if (*d <= 1) return space;
  if (space > limits.max_code_space) {
    throw SizeLimitExceeded("code space", std::to_string(q) + "^" + std::to_string(n),
                            std::to_string(limits.max_code_space));
  }
  auto distance = [&](std::uint64_t a, std::uint64_t b) {
    int diff = 0;
    for (int i = 0; i < n; ++i, a /= q, b /= q) diff += (a % q) != (b % q);
    return diff;
  };
  // Translations act transitively on words, so some optimal code contains
  // the zero word; search among the words far from it.
  std::vector<std::uint64_t> far;
  for (std::uint64_t w = 1; w < space; ++w) {
    if (distance(0, w) >= *d) far.push_back(w);
  }
  const std::size_t words = (far.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> adj(far.size(), std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < far.size(); ++i) {
    for (std::size_t j = i + 1; j < far.size(); ++j) {
      if (distance(far[i], far[j]) >= *d) {
        adj[i][j / 64] |= std::uint64_t{1} << (j % 64);
        adj[j][i / 64] |= std::uint64_t{1} << (i % 64);
      }
    }
  }
  return static_cast<std::uint64_t>(MaxClique(std::move(adj)).solve()) + 1;
}

std::string EntropyValue::to_string() const {
  if (exact) return rational_text(value);
  std::ostringstream out;
  out.precision(9);
  out << approx;
  return out.str();
}

EntropyValue entropy_H(const Digraph& d, const Limits& limits) {
  const int n = d.size();
  if (n > limits.max_entropy_n) {
    throw SizeLimitExceeded("entropy program", "2^" + std::to_string(n) + " variables",
                            "2^" + std::to_string(limits.max_entropy_n));
  }
  EntropyValue out;
  for (Vertex v = 0; v < n; ++v) out.degenerate = out.degenerate || d.is_source(v);
  if (n == 0) {
    out.value = 0;
    return out;
  }

  // Variable S-1 holds h_S for every non-empty S; h_empty = 0 is implicit.
  const std::uint32_t full = (1u << n) - 1;
  lp::LinearProgram prog(static_cast<int>(full));
  prog.maximize = true;
  prog.objective[full - 1] = 1;
  auto var = [](std::uint32_t s) { return static_cast<int>(s) - 1; };
  auto add = [&](std::vector<std::pair<int, long>>& terms, std::uint32_t s, long c) {
    if (s != 0) terms.emplace_back(var(s), c);
  };

  for (Vertex v = 0; v < n; ++v) {
    prog.add_row({{var(1u << v), 1}}, lp::Relation::LessEq, 1);
    const auto in = static_cast<std::uint32_t>(d.in_mask(v));
    const std::uint32_t with = in | (1u << v);
    if (with != in) {
      std::vector<std::pair<int, long>> terms;
      add(terms, with, 1);
      add(terms, in, -1);
      prog.add_row(std::move(terms), lp::Relation::Equal, 0);
    }
  }
  for (std::uint32_t s = 1; s < full; ++s) {
    for (int i = 0; i < n; ++i) {
      if ((s >> i) & 1u) continue;
      prog.add_row({{var(s | (1u << i)), 1}, {var(s), -1}}, lp::Relation::GreaterEq, 0);
    }
  }
  for (std::uint32_t s = 0; s <= full; ++s) {
    for (int i = 0; i < n; ++i) {
      if ((s >> i) & 1u) continue;
      for (int j = i + 1; j < n; ++j) {
        if ((s >> j) & 1u) continue;
        std::vector<std::pair<int, long>> terms;
        add(terms, s | (1u << i), 1);
        add(terms, s | (1u << j), 1);
        add(terms, s | (1u << i) | (1u << j), -1);
        add(terms, s, -1);
        prog.add_row(std::move(terms), lp::Relation::GreaterEq, 0);
      }
    }
  }

  const bool exact = n <= limits.exact_entropy_n;
  const lp::Solution sol = exact ? lp::solve_exact(prog) : lp::solve_float(prog);
  if (sol.status != lp::Status::Optimal) {
    throw std::logic_error("entropy program ended " + lp::to_string(sol.status));
  }
  out.exact = sol.exact;
  out.value = sol.exact ? sol.value : mpq_class(0);
  out.approx = sol.approx;
  return out;
}

std::uint64_t floor_power(int q, const EntropyValue& h) {
  if (!h.exact) return static_cast<std::uint64_t>(std::floor(std::pow(double(q), h.approx) + 1e-6));
  // floor((q^p)^(1/r)) for H = p/r.
  const mpz_class p = h.value.get_num();
  const mpz_class r = h.value.get_den();
  if (p > 4096) return UINT64_MAX;
  mpz_class power;
  mpz_ui_pow_ui(power.get_mpz_t(), q, p.get_ui());
  mpz_class root;
  mpz_root(root.get_mpz_t(), power.get_mpz_t(), r.get_ui());
  return root.fits_ulong_p() ? root.get_ui() : UINT64_MAX;
}

namespace {

// Runs a constituent bound, recording a skip instead of failing on a guard.
template <class F>
NamedBound attempt(std::string name, std::string provenance, F compute) {
  NamedBound b{std::move(name), std::nullopt, std::move(provenance), "ok"};
  try {
    b.value = compute();
  } catch (const SizeLimitExceeded&) {
    b.status = "skipped(size)";
  }
  return b;
}

std::optional<std::pair<int, int>> perfect_power(int q) {
  // Smallest base b with q = b^k, k >= 2.
  for (int b = 2; b * b <= q; ++b) {
    int k = 0;
    long long p = 1;
    while (p < q) {
      p *= b;
      ++k;
    }
    if (p == q) return std::make_pair(b, k);
  }
  return std::nullopt;
}

void add_non_strict_lower(std::vector<NamedBound>& lower, const Digraph& d, int q, const Limits& limits,
                          const std::string& suffix = "") {
  const int n = d.size();
  lower.push_back(attempt("clique_cover" + suffix, "q^(n - clique partition number)", [&] {
    return saturating_pow(q, n - clique_partition_number(d, limits));
  }));
  lower.push_back(attempt("packing" + suffix, "q^(disjoint cycle packing number)", [&] {
    return saturating_pow(q, cycle_packing_number(d, limits));
  }));
  lower.push_back(attempt("code" + suffix, "A(n, q, n - min in-degree + 1)", [&] {
    return max_code_size(n, q, n - structure_stats(d).min_in_degree + 1, limits);
  }));
  lower.push_back(attempt("degree" + suffix, "ceil(q^(min in-degree) / n)", [&] {
    const std::uint64_t p = saturating_pow(q, structure_stats(d).min_in_degree);
    return n == 0 ? std::uint64_t{1} : (p + n - 1) / n;
  }));
  if (const auto pp = perfect_power(q)) {
    const auto [b, k] = *pp;
    lower.push_back(attempt("blowup_packing" + suffix,
                            "b^(packing number of the k-fold blow-up), q = " + std::to_string(b) + "^" +
                                std::to_string(k),
                            [&, b = b, k = k] { return saturating_pow(b, cycle_packing_number(blowup(d, k), limits)); }));
    lower.push_back(attempt(
        "blowup_clique_cover" + suffix,
        "b^(kn - clique partition number of the k-fold blow-up), q = " + std::to_string(b) + "^" + std::to_string(k),
        [&, b = b, k = k] { return saturating_pow(b, k * n - clique_partition_number(blowup(d, k), limits)); }));
  }
}

}  // namespace

BoundsReport fix_bounds_report(const Digraph& d, int q, bool strict, const Limits& limits) {
  if (q < 2) throw ValueOutOfRange("alphabet size must be at least 2");
  const int n = d.size();
  BoundsReport report;
  report.fingerprint = d.fingerprint();
  report.q = q;
  report.strict = strict;

  const StructureStats stats = structure_stats(d);
  report.upper.push_back(attempt("girth", "A(n, q, girth); 1 when acyclic", [&] {
    return max_code_size(n, q, stats.girth, limits);
  }));
  report.upper.push_back(attempt("feedback", "q^(transversal number)", [&] {
    return saturating_pow(q, transversal_number(d, limits));
  }));
  {
    NamedBound b{"entropy", std::nullopt, "floor(q^H), H the polymatroid program optimum", "ok"};
    try {
      report.entropy = entropy_H(d, limits);
      b.value = floor_power(q, *report.entropy);
    } catch (const SizeLimitExceeded&) {
      b.status = "skipped(size)";
    }
    report.upper.push_back(std::move(b));
  }

  if (!strict) {
    add_non_strict_lower(report.lower, d, q, limits);
  } else {
    if (q >= 3) {
      // Ghost dependencies lift any system over q-1 letters into F[D,q].
      std::vector<NamedBound> below;
      add_non_strict_lower(below, d, q - 1, limits);
      std::optional<std::uint64_t> best;
      for (const auto& b : below) {
        if (b.value) best = std::max(best.value_or(0), *b.value);
      }
      NamedBound ghost{"ghost", best, "best non-strict lower bound at q-1", best ? "ok" : "skipped(size)"};
      report.lower.push_back(std::move(ghost));
    } else {
      report.lower.push_back(attempt("nu_plus_one", "disjoint cycle packing number + 1 (q = 2)", [&] {
        return static_cast<std::uint64_t>(cycle_packing_number(d, limits)) + 1;
      }));
    }
  }
  if (n > 0 && stats.loop_count == n) {
    std::vector<Arc> plain;
    for (const Arc& a : d.arcs()) {
      if (a.from != a.to) plain.push_back(a);
    }
    report.lower.push_back(attempt("loopfull", "sum_k (q-1)^k I_k over in-dominating sets (exact, strict)", [&] {
      return loopfull_maxfix(Digraph(n, plain), q, limits);
    }));
  }

  for (const auto& b : report.upper) {
    if (b.value) report.best_upper = std::min(report.best_upper, *b.value);
  }
  for (const auto& b : report.lower) {
    if (b.value) report.best_lower = std::max(report.best_lower, *b.value);
  }
  report.consistent = report.best_lower <= report.best_upper;
  if (!report.consistent) {
    throw std::logic_error("inconsistent fixed-point bounds for " + report.fingerprint + ": lower " +
                           std::to_string(report.best_lower) + " exceeds upper " +
                           std::to_string(report.best_upper));
  }
  return report;
}

}  // namespace fdsrank
