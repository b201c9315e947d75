#include "fdsrank/graph_invariants.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>

#include "fdsrank/lp.hpp"

namespace fdsrank {

namespace {

void require_exact_n(const Digraph& d, const Limits& limits, const char* what) {
  if (d.size() > limits.max_exact_n || d.size() > 63) {
    throw SizeLimitExceeded(what, "n=" + std::to_string(d.size()),
                            "n<=" + std::to_string(std::min(limits.max_exact_n, 63)));
  }
}

using Mask = std::uint64_t;

Mask bit(int v) { return Mask{1} << v; }

// Shortest cycle inside the vertex set `alive`, as a vertex list; empty if
// the induced subgraph is acyclic.
std::vector<Vertex> shortest_cycle_in(const Digraph& d, Mask alive) {
  std::vector<Vertex> best;
  const int n = d.size();
  std::vector<int> dist(n), parent(n);
  for (Vertex s = 0; s < n; ++s) {
    if (!(alive & bit(s))) continue;
    if (d.has_loop(s)) return {s};
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    std::queue<Vertex> queue;
    queue.push(s);
    int found_len = -1;
    Vertex found_last = -1;
    while (!queue.empty() && found_len < 0) {
      Vertex u = queue.front();
      queue.pop();
      for (Vertex w : d.out(u)) {
        if (!(alive & bit(w))) continue;
        if (w == s) {
          found_len = dist[u] + 1;
          found_last = u;
          break;
        }
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push(w);
        }
      }
    }
    if (found_len > 0 && (best.empty() || found_len < static_cast<int>(best.size()))) {
      std::vector<Vertex> cyc;
      for (Vertex v = found_last; v != s; v = parent[v]) cyc.push_back(v);
      cyc.push_back(s);
      std::reverse(cyc.begin(), cyc.end());
      best = std::move(cyc);
      if (best.size() == 2) return best;
    }
  }
  return best;
}

// Drops vertices that cannot lie on a cycle inside `alive`.
Mask strip_acyclic_part(const Digraph& d, Mask alive) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (Mask rest = alive; rest; rest &= rest - 1) {
      Vertex v = std::countr_zero(rest);
      if (!(d.in_mask(v) & alive) || !(d.out_mask(v) & alive)) {
        alive &= ~bit(v);
        changed = true;
      }
    }
  }
  return alive;
}

}  // namespace

StructureStats structure_stats(const Digraph& d) {
  StructureStats s;
  const int n = d.size();
  s.loop_count = d.loop_count();
  s.min_in_degree = n == 0 ? 0 : std::numeric_limits<int>::max();
  for (Vertex v = 0; v < n; ++v) {
    s.min_in_degree = std::min(s.min_in_degree, d.in_degree(v));
    if (d.is_source(v)) s.sources.push_back(v);
    if (d.is_sink(v)) s.sinks.push_back(v);
  }
  // BFS from every vertex; the shortest cycle through s closes at an arc u->s.
  std::vector<int> dist(n);
  for (Vertex s0 = 0; s0 < n; ++s0) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s0] = 0;
    std::queue<Vertex> queue;
    queue.push(s0);
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop();
      for (Vertex w : d.out(u)) {
        if (w == s0) {
          int len = dist[u] + 1;
          if (!s.girth || len < *s.girth) s.girth = len;
        } else if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          queue.push(w);
        }
      }
    }
  }
  s.acyclic = !s.girth.has_value();
  return s;
}

std::vector<Vertex> minimum_feedback_vertex_set(const Digraph& d, const Limits& limits) {
  require_exact_n(d, limits, "transversal_number");
  Mask best_set = d.all_mask();
  int best = d.size();
  // `excluded` vertices stay out of the set for the rest of the branch.
  std::function<void(Mask, Mask, Mask, int)> search = [&](Mask alive, Mask excluded, Mask chosen,
                                                          int count) {
    alive = strip_acyclic_part(d, alive);
    if (!alive) {
      if (count < best) {
        best = count;
        best_set = chosen;
      }
      return;
    }
    if (count + 1 >= best) return;
    for (Mask rest = alive; rest; rest &= rest - 1) {
      Vertex v = std::countr_zero(rest);
      if (d.has_loop(v)) {
        if (excluded & bit(v)) return;
        search(alive & ~bit(v), excluded, chosen | bit(v), count + 1);
        return;
      }
    }
    std::vector<Vertex> cyc = shortest_cycle_in(d, alive);
    // Branch i takes cyc[i] and excludes cyc[0..i).
    Mask skip = excluded;
    for (Vertex v : cyc) {
      if (!(skip & bit(v))) search(alive & ~bit(v), skip, chosen | bit(v), count + 1);
      skip |= bit(v);
    }
  };
  search(d.all_mask(), 0, 0, 0);
  std::vector<Vertex> result;
  for (Mask rest = best_set; rest; rest &= rest - 1) result.push_back(std::countr_zero(rest));
  return result;
}

int transversal_number(const Digraph& d, const Limits& limits) {
  return static_cast<int>(minimum_feedback_vertex_set(d, limits).size());
}

std::vector<std::vector<Vertex>> simple_cycles(const Digraph& d, const Limits& limits) {
  std::vector<std::vector<Vertex>> cycles;
  const int n = d.size();
  std::vector<Vertex> path;
  std::vector<char> on_path(n, 0);
  std::uint64_t steps = 0;
  const std::uint64_t step_cap = saturating_mul(limits.max_cycles, 64);
  auto overflow = [&](const char* what) {
    throw SizeLimitExceeded(what, "more than " + std::to_string(limits.max_cycles) + " cycles",
                            std::to_string(limits.max_cycles));
  };
  std::function<void(Vertex, Vertex)> dfs = [&](Vertex start, Vertex u) {
    if (++steps > step_cap) overflow("simple_cycles (search steps)");
    for (Vertex w : d.out(u)) {
      if (w < start) continue;
      if (w == start) {
        cycles.push_back(path);
        if (cycles.size() > limits.max_cycles) overflow("simple_cycles");
      } else if (!on_path[w]) {
        on_path[w] = 1;
        path.push_back(w);
        dfs(start, w);
        path.pop_back();
        on_path[w] = 0;
      }
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    path = {s};
    on_path[s] = 1;
    dfs(s, s);
    on_path[s] = 0;
  }
  return cycles;
}

std::vector<std::vector<Vertex>> maximum_cycle_packing(const Digraph& d, const Limits& limits) {
  require_exact_n(d, limits, "cycle_packing_number");
  const auto cycles = simple_cycles(d, limits);
  const int n = d.size();
  std::vector<Mask> masks;
  std::size_t shortest = n + 1;
  for (const auto& c : cycles) {
    Mask m = 0;
    for (Vertex v : c) m |= bit(v);
    masks.push_back(m);
    shortest = std::min(shortest, c.size());
  }
  std::vector<std::vector<int>> through(n);
  for (std::size_t i = 0; i < masks.size(); ++i) {
    for (Mask rest = masks[i]; rest; rest &= rest - 1) through[std::countr_zero(rest)].push_back(static_cast<int>(i));
  }
  Mask on_cycle = 0;
  for (Mask m : masks) on_cycle |= m;

  std::vector<int> current, best;
  std::function<void(Mask)> search = [&](Mask avail) {
    if (current.size() > best.size()) best = current;
    avail &= on_cycle;
    if (!avail) return;
    if (current.size() + std::popcount(avail) / shortest <= best.size()) return;
    Vertex v = std::countr_zero(avail);
    for (int ci : through[v]) {
      if ((masks[ci] & avail) == masks[ci]) {
        current.push_back(ci);
        search(avail & ~masks[ci]);
        current.pop_back();
      }
    }
    search(avail & ~bit(v));
  };
  if (!masks.empty()) search(d.all_mask());
  std::vector<std::vector<Vertex>> packing;
  for (int ci : best) packing.push_back(cycles[ci]);
  std::sort(packing.begin(), packing.end());
  return packing;
}

int cycle_packing_number(const Digraph& d, const Limits& limits) {
  return static_cast<int>(maximum_cycle_packing(d, limits).size());
}

namespace {

std::vector<Mask> symmetric_adjacency(const Digraph& d) {
  std::vector<Mask> adj(d.size(), 0);
  for (const Arc& a : d.arcs()) {
    if (a.from != a.to && d.has_arc(a.to, a.from)) adj[a.from] |= bit(a.to);
  }
  return adj;
}

}  // namespace

std::vector<std::vector<Vertex>> minimum_clique_partition(const Digraph& d, const Limits& limits) {
  require_exact_n(d, limits, "clique_partition_number");
  const int n = d.size();
  const auto adj = symmetric_adjacency(d);
  std::vector<Mask> parts, best;
  for (Vertex v = 0; v < n; ++v) best.push_back(bit(v));
  std::function<void(Vertex)> search = [&](Vertex v) {
    if (parts.size() >= best.size()) return;
    if (v == n) {
      best = parts;
      return;
    }
    // Index loop: the recursion appends to `parts`.
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if ((adj[v] & parts[i]) == parts[i]) {
        parts[i] |= bit(v);
        search(v + 1);
        parts[i] &= ~bit(v);
      }
    }
    parts.push_back(bit(v));
    search(v + 1);
    parts.pop_back();
  };
  search(0);
  std::vector<std::vector<Vertex>> result;
  for (Mask m : best) {
    std::vector<Vertex> part;
    for (Mask rest = m; rest; rest &= rest - 1) part.push_back(std::countr_zero(rest));
    result.push_back(std::move(part));
  }
  return result;
}

int clique_partition_number(const Digraph& d, const Limits& limits) {
  return static_cast<int>(minimum_clique_partition(d, limits).size());
}

std::vector<Mask> maximal_cliques(const Digraph& d, const Limits& limits) {
  require_exact_n(d, limits, "maximal_cliques");
  const auto adj = symmetric_adjacency(d);
  std::vector<Mask> cliques;
  // Bron-Kerbosch with pivoting.
  std::function<void(Mask, Mask, Mask)> bk = [&](Mask r, Mask p, Mask x) {
    if (!p && !x) {
      cliques.push_back(r);
      if (cliques.size() > limits.max_cycles) {
        throw SizeLimitExceeded("maximal_cliques", ">" + std::to_string(limits.max_cycles),
                                std::to_string(limits.max_cycles));
      }
      return;
    }
    Mask px = p | x;
    Vertex pivot = std::countr_zero(px);
    int best_deg = -1;
    for (Mask rest = px; rest; rest &= rest - 1) {
      Vertex u = std::countr_zero(rest);
      int deg = std::popcount(adj[u] & p);
      if (deg > best_deg) {
        best_deg = deg;
        pivot = u;
      }
    }
    for (Mask rest = p & ~adj[pivot]; rest; rest &= rest - 1) {
      Vertex v = std::countr_zero(rest);
      bk(r | bit(v), p & adj[v], x & adj[v]);
      p &= ~bit(v);
      x |= bit(v);
    }
  };
  bk(0, d.all_mask(), 0);
  std::sort(cliques.begin(), cliques.end());
  return cliques;
}

std::string FractionalValue::to_string() const {
  if (exact) return value.get_str();
  return std::to_string(approx);
}

namespace {

FractionalValue solve_covering_lp(const lp::LinearProgram& program, const Limits& limits) {
  FractionalValue out;
  out.columns = static_cast<std::size_t>(program.num_vars);
  lp::Solution sol = out.columns <= limits.exact_lp_columns ? lp::solve_exact(program)
                                                            : lp::solve_float(program, 1e-9);
  if (sol.status != lp::Status::Optimal) {
    throw Error("fractional LP did not reach an optimum: " + lp::to_string(sol.status));
  }
  out.exact = sol.exact;
  out.approx = sol.approx;
  if (sol.exact) out.value = sol.value;
  return out;
}

}  // namespace

FractionalValue fractional_cycle_packing(const Digraph& d, const Limits& limits) {
  const auto cycles = simple_cycles(d, limits);
  lp::LinearProgram program(static_cast<int>(cycles.size()));
  program.maximize = true;
  std::vector<std::vector<std::pair<int, long>>> rows(d.size());
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    program.objective[i] = 1;
    for (Vertex v : cycles[i]) rows[v].push_back({static_cast<int>(i), 1});
  }
  for (auto& row : rows) {
    if (!row.empty()) program.add_row(std::move(row), lp::Relation::LessEq, 1);
  }
  return solve_covering_lp(program, limits);
}

FractionalValue fractional_clique_cover(const Digraph& d, const Limits& limits) {
  // Weights on arbitrary cliques can be moved onto maximal ones without
  // changing feasibility or cost, so maximal cliques are enough columns.
  const auto cliques = maximal_cliques(d, limits);
  lp::LinearProgram program(static_cast<int>(cliques.size()));
  program.maximize = false;
  std::vector<std::vector<std::pair<int, long>>> rows(d.size());
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    program.objective[i] = 1;
    for (Mask rest = cliques[i]; rest; rest &= rest - 1) {
      rows[std::countr_zero(rest)].push_back({static_cast<int>(i), 1});
    }
  }
  for (auto& row : rows) program.add_row(std::move(row), lp::Relation::GreaterEq, 1);
  return solve_covering_lp(program, limits);
}

namespace {

// Kuhn's augmenting paths. `allowed(u, v)` filters arcs; returns match size.
template <class Allowed>
int bipartite_matching(const Digraph& d, Allowed allowed) {
  const int n = d.size();
  std::vector<int> match_head(n, -1);
  std::vector<char> seen(n);
  std::function<bool(Vertex)> augment = [&](Vertex u) {
    for (Vertex v : d.out(u)) {
      if (!allowed(u, v) || seen[v]) continue;
      seen[v] = 1;
      if (match_head[v] < 0 || augment(match_head[v])) {
        match_head[v] = u;
        return true;
      }
    }
    return false;
  };
  int size = 0;
  for (Vertex u = 0; u < n; ++u) {
    std::fill(seen.begin(), seen.end(), 0);
    if (augment(u)) ++size;
  }
  return size;
}

}  // namespace

int max_independent_arcs(const Digraph& d) {
  return bipartite_matching(d, [](Vertex, Vertex) { return true; });
}

std::vector<Arc> maximum_independent_arcs(const Digraph& d) {
  const int n = d.size();
  const int optimum = max_independent_arcs(d);
  std::vector<Arc> chosen;
  std::vector<char> tail_fixed(n, 0), head_used(n, 0);
  for (Vertex u = 0; u < n && static_cast<int>(chosen.size()) < optimum; ++u) {
    tail_fixed[u] = 1;
    for (Vertex v : d.out(u)) {
      if (head_used[v]) continue;
      head_used[v] = 1;
      int rest = bipartite_matching(d, [&](Vertex a, Vertex b) { return !tail_fixed[a] && !head_used[b]; });
      if (static_cast<int>(chosen.size()) + 1 + rest == optimum) {
        chosen.push_back({u, v});
        break;
      }
      head_used[v] = 0;
    }
  }
  return chosen;
}

namespace {

// Minimum-cost assignment (Hungarian, O(n^3)). cost is n x n.
std::vector<int> hungarian(const std::vector<std::vector<long>>& cost) {
  const int n = static_cast<int>(cost.size());
  const long inf = std::numeric_limits<long>::max() / 4;
  std::vector<long> u(n + 1, 0), v(n + 1, 0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<long> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      int i0 = p[j0], j1 = 0;
      long delta = inf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        long cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  std::vector<int> assignment(n, -1);
  for (int j = 1; j <= n; ++j) {
    if (p[j] > 0) assignment[p[j] - 1] = j - 1;
  }
  return assignment;
}

// Cost matrix of the bipartite double: arc u->v weight 1 (cost -1),
// fallback u->u weight 0, everything else forbidden.
std::vector<std::vector<long>> cover_costs(const Digraph& d) {
  const int n = d.size();
  const long forbidden = n + 1;
  std::vector<std::vector<long>> cost(n, std::vector<long>(n, forbidden));
  for (Vertex u = 0; u < n; ++u) cost[u][u] = 0;
  for (const Arc& a : d.arcs()) cost[a.from][a.to] = -1;
  return cost;
}

long assignment_cost(const std::vector<std::vector<long>>& cost, const std::vector<int>& a) {
  long total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += cost[i][a[i]];
  return total;
}

}  // namespace

int max_cycle_cover(const Digraph& d) {
  if (d.size() == 0) return 0;
  auto cost = cover_costs(d);
  return static_cast<int>(-assignment_cost(cost, hungarian(cost)));
}

std::vector<Vertex> maximum_cycle_cover(const Digraph& d) {
  const int n = d.size();
  std::vector<Vertex> succ(n, -1);
  if (n == 0) return succ;
  auto cost = cover_costs(d);
  const long forbidden = n + 1;
  const long optimum = assignment_cost(cost, hungarian(cost));
  std::vector<int> assignment;
  if (n > 40) {
    assignment = hungarian(cost);
  } else {
    // Fix successors one vertex at a time, smallest arc head first.
    for (Vertex u = 0; u < n; ++u) {
      std::vector<Vertex> options(d.out(u).begin(), d.out(u).end());
      if (!d.has_loop(u)) options.push_back(u);
      for (Vertex v : options) {
        auto trial = cost;
        for (Vertex w = 0; w < n; ++w) {
          if (w != v) trial[u][w] = forbidden;
          if (w != u) trial[w][v] = forbidden;
        }
        auto a = hungarian(trial);
        if (assignment_cost(cost, a) == optimum && assignment_cost(trial, a) == optimum) {
          cost = std::move(trial);
          assignment = std::move(a);
          break;
        }
      }
    }
  }
  for (Vertex u = 0; u < n; ++u) {
    if (cost[u][assignment[u]] == -1) succ[u] = assignment[u];
  }
  return succ;
}

Digraph blowup(const Digraph& d, int k) {
  if (k < 1) throw ValueOutOfRange("blow-up factor must be >= 1");
  std::vector<Arc> arcs;
  for (const Arc& a : d.arcs()) {
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) arcs.push_back({a.from * k + i, a.to * k + j});
    }
  }
  return Digraph(d.size() * k, std::move(arcs));
}

std::vector<std::uint64_t> in_dominating_profile(const Digraph& d, const Limits& limits) {
  if (d.loop_count() > 0) throw LoopsPresent("in_dominating_profile needs a loopless graph");
  require_exact_n(d, limits, "in_dominating_profile");
  const int n = d.size();
  std::vector<Mask> in(n);
  for (Vertex v = 0; v < n; ++v) in[v] = d.in_mask(v);
  std::vector<std::uint64_t> profile(n + 1, 0);
  for (Mask x = 0; x <= d.all_mask(); ++x) {
    bool dominating = true;
    for (Vertex v = 0; v < n && dominating; ++v) {
      if (in[v] && !(x & bit(v)) && !(in[v] & x)) dominating = false;
    }
    if (dominating) ++profile[std::popcount(x)];
    if (x == d.all_mask()) break;
  }
  return profile;
}

bool is_primitive(const Digraph& d) {
  if (!d.is_strongly_connected()) return false;
  const int n = d.size();
  std::vector<int> level(n, -1);
  level[0] = 0;
  std::queue<Vertex> queue;
  queue.push(0);
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop();
    for (Vertex w : d.out(u)) {
      if (level[w] < 0) {
        level[w] = level[u] + 1;
        queue.push(w);
      }
    }
  }
  int period = 0;
  for (const Arc& a : d.arcs()) period = std::gcd(period, std::abs(level[a.from] + 1 - level[a.to]));
  return period == 1;
}

std::string to_string(NilpotentSufficiency v) {
  switch (v) {
    case NilpotentSufficiency::Loop:
      return "loop";
    case NilpotentSufficiency::Symmetric:
      return "symmetric";
    case NilpotentSufficiency::PrimitiveStrictSpanning:
      return "primitive-strict-spanning";
    case NilpotentSufficiency::None:
      return "none";
  }
  return "none";
}

NilpotentSufficiency nilpotent_sufficiency(const Digraph& d) {
  if (!d.is_strongly_connected()) {
    throw NotStronglyConnected("nilpotent_sufficiency needs a strongly connected graph");
  }
  const int n = d.size();
  if (d.loop_count() > 0 && n != 1) return NilpotentSufficiency::Loop;
  const bool is_k2 = n == 2 && d.arc_count() == 2 && d.has_arc(0, 1) && d.has_arc(1, 0);
  if (d.is_symmetric() && !is_k2) return NilpotentSufficiency::Symmetric;
  // A primitive strict spanning subgraph exists iff removing some single
  // arc leaves a primitive graph (supergraphs of primitive graphs are
  // primitive).
  for (const Arc& a : d.arcs()) {
    if (is_primitive(d.without_arc(a))) return NilpotentSufficiency::PrimitiveStrictSpanning;
  }
  return NilpotentSufficiency::None;
}

}  // namespace fdsrank
