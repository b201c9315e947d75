#include "fdsrank/canonical.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

#include "fdsrank/constructions.hpp"

namespace fdsrank {

namespace {

std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

void require_sinks(const CanonicalGraph& c, int cap, const char* what) {
  if (c.sink_count() > cap) {
    throw SizeLimitExceeded(what, std::to_string(c.sink_count()) + " sinks", std::to_string(cap));
  }
}

// Sink v (position in `alive`) is redundant when the in-neighbourhoods of
// other alive sinks contained in N(v) cover it, subject to the tie-break for
// a single covering sink.
bool sink_redundant(std::size_t v, const std::vector<std::uint64_t>& in,
                    const std::vector<Vertex>& origin, const std::vector<bool>& alive) {
  const std::uint64_t nv = in[v];
  if (nv == 0) return true;
  std::uint64_t cover = 0;
  int members = 0;
  Vertex only = -1;
  for (std::size_t w = 0; w < in.size(); ++w) {
    if (w == v || !alive[w] || in[w] == 0 || (in[w] & ~nv) != 0) continue;
    cover |= in[w];
    ++members;
    only = origin[w];
  }
  if (cover != nv) return false;
  return members >= 2 || only < origin[v];
}

}  // namespace

CanonicalGraph::CanonicalGraph(std::vector<Vertex> source_origin, std::vector<Vertex> sink_origin,
                               std::vector<std::uint64_t> sink_in)
    : source_origin_(std::move(source_origin)),
      sink_origin_(std::move(sink_origin)),
      sink_in_(std::move(sink_in)) {
  if (source_origin_.size() > 64) {
    throw SizeLimitExceeded("canonical graph", std::to_string(source_origin_.size()) + " sources", "64");
  }
  if (sink_in_.size() != sink_origin_.size()) {
    throw ShapeMismatch("one in-neighbourhood mask per sink expected");
  }
  const std::uint64_t valid =
      source_origin_.size() == 64 ? ~std::uint64_t{0} : bit(static_cast<int>(source_origin_.size())) - 1;
  for (std::uint64_t m : sink_in_) {
    if ((m & ~valid) != 0) throw ShapeMismatch("sink in-neighbourhood names a missing source");
  }
}

CanonicalGraph CanonicalGraph::from_bipartite(const Digraph& d) {
  std::vector<int> position(d.size(), -1);
  std::vector<Vertex> sources, sinks;
  for (Vertex v = 0; v < d.size(); ++v) {
    if (d.in_degree(v) == 0) {
      position[v] = static_cast<int>(sources.size());
      sources.push_back(v);
    } else {
      if (d.out_degree(v) != 0) {
        throw ShapeMismatch("vertex " + std::to_string(v + 1) + " has both in- and out-arcs");
      }
      sinks.push_back(v);
    }
  }
  std::vector<std::uint64_t> masks;
  for (Vertex b : sinks) {
    std::uint64_t m = 0;
    for (Vertex a : d.in(b)) m |= bit(position[a]);
    masks.push_back(m);
  }
  return CanonicalGraph(std::move(sources), std::move(sinks), std::move(masks));
}

Digraph CanonicalGraph::as_digraph() const {
  const int na = source_count();
  std::vector<Arc> arcs;
  for (int j = 0; j < sink_count(); ++j) {
    for (std::uint64_t m = sink_in_[j]; m != 0; m &= m - 1) {
      arcs.push_back({std::countr_zero(m), na + j});
    }
  }
  return Digraph(na + sink_count(), std::move(arcs));
}

CanonicalGraph::Provenance CanonicalGraph::provenance(Vertex v) const {
  if (v < 0 || v >= source_count() + sink_count()) throw ValueOutOfRange("no such canonical vertex");
  if (v < source_count()) return {source_origin_[v], 0};
  return {sink_origin_[v - source_count()], 1};
}

std::vector<CanonicalGraph> CanonicalGraph::components() const {
  const int na = source_count();
  const int nb = sink_count();
  std::vector<int> parent(na + nb);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int j = 0; j < nb; ++j) {
    for (std::uint64_t m = sink_in_[j]; m != 0; m &= m - 1) {
      parent[find(std::countr_zero(m))] = find(na + j);
    }
  }
  // Order components by least source, falling back to least sink.
  std::vector<int> roots;
  for (int x = 0; x < na + nb; ++x) {
    if (std::find(roots.begin(), roots.end(), find(x)) == roots.end()) roots.push_back(find(x));
  }
  std::vector<CanonicalGraph> out;
  for (int root : roots) {
    std::vector<int> remap(na, -1);
    std::vector<Vertex> src, snk;
    std::vector<std::uint64_t> masks;
    for (int a = 0; a < na; ++a) {
      if (find(a) == root) {
        remap[a] = static_cast<int>(src.size());
        src.push_back(source_origin_[a]);
      }
    }
    for (int j = 0; j < nb; ++j) {
      if (find(na + j) != root) continue;
      std::uint64_t m = 0;
      for (std::uint64_t s = sink_in_[j]; s != 0; s &= s - 1) m |= bit(remap[std::countr_zero(s)]);
      snk.push_back(sink_origin_[j]);
      masks.push_back(m);
    }
    out.emplace_back(std::move(src), std::move(snk), std::move(masks));
  }
  return out;
}

bool CanonicalGraph::is_fixed_point() const {
  std::vector<bool> alive(sink_in_.size(), true);
  for (std::size_t v = 0; v < sink_in_.size(); ++v) {
    if (sink_redundant(v, sink_in_, sink_origin_, alive)) return false;
  }
  std::vector<std::uint64_t> out(source_count(), 0);
  for (int j = 0; j < sink_count(); ++j) {
    for (std::uint64_t m = sink_in_[j]; m != 0; m &= m - 1) out[std::countr_zero(m)] |= bit(j);
  }
  for (int a = 0; a < source_count(); ++a) {
    if (out[a] == 0) return false;
    for (int b = 0; b < a; ++b) {
      if (out[b] == out[a]) return false;
    }
  }
  return true;
}

CanonicalGraph canonicalize(const Digraph& d, RemovalPolicy policy) {
  const int n = d.size();
  if (n > 64) throw SizeLimitExceeded("canonicalization", std::to_string(n) + " vertices", "64");

  // D': sink copy v_1 has in-neighbourhood {u_0 : u in N(v)}.
  std::vector<std::uint64_t> in(n);
  std::vector<Vertex> origin(n);
  for (Vertex v = 0; v < n; ++v) {
    in[v] = d.in_mask(v);
    origin[v] = v;
  }

  std::vector<bool> alive(n, true);
  if (policy == RemovalPolicy::Sequential) {
    for (Vertex v = 0; v < n; ++v) {
      if (sink_redundant(v, in, origin, alive)) alive[v] = false;
    }
  } else {
    std::vector<bool> redundant(n, false);
    for (Vertex v = 0; v < n; ++v) redundant[v] = sink_redundant(v, in, origin, alive);
    for (Vertex v = 0; v < n; ++v) alive[v] = !redundant[v];
  }

  // D'': drop isolated sources and sources duplicating a smaller one.
  std::vector<std::uint64_t> out(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    for (std::uint64_t m = in[v]; m != 0; m &= m - 1) out[std::countr_zero(m)] |= bit(v);
  }
  std::vector<Vertex> kept_sources;
  std::vector<int> position(n, -1);
  for (Vertex u = 0; u < n; ++u) {
    if (out[u] == 0) continue;
    bool duplicate = false;
    for (Vertex w : kept_sources) duplicate = duplicate || out[w] == out[u];
    if (duplicate) continue;
    position[u] = static_cast<int>(kept_sources.size());
    kept_sources.push_back(u);
  }
  std::vector<Vertex> sinks;
  std::vector<std::uint64_t> masks;
  for (Vertex v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    std::uint64_t m = 0;
    for (std::uint64_t s = in[v]; s != 0; s &= s - 1) {
      int p = position[std::countr_zero(s)];
      if (p >= 0) m |= bit(p);
    }
    sinks.push_back(v);
    masks.push_back(m);
  }
  return CanonicalGraph(std::move(kept_sources), std::move(sinks), std::move(masks));
}

std::uint64_t upper_bound_U(const CanonicalGraph& c) {
  require_sinks(c, 30, "independent-set count");
  const int nb = c.sink_count();
  std::vector<std::uint32_t> conflict(nb, 0);
  for (int i = 0; i < nb; ++i) {
    for (int j = 0; j < nb; ++j) {
      if (i != j && (c.sink_in(i) & c.sink_in(j)) != 0) conflict[i] |= 1u << j;
    }
  }
  // Meet in the middle: low half enumerated, high half looked up through a
  // table counting independent subsets of each allowed high-side set.
  const int lo = nb / 2;
  const int hi = nb - lo;
  const std::uint32_t hi_all = (1u << hi) - 1;
  std::vector<std::uint64_t> count(std::size_t{1} << hi, 0);
  // count[M] = independent subsets of high sinks inside M.
  count[0] = 1;
  for (std::uint32_t m = 1; m <= hi_all; ++m) {
    int top = 31 - std::countl_zero(m);
    std::uint32_t rest = m & ~(1u << top);
    std::uint32_t nbrs = (conflict[lo + top] >> lo) & hi_all;
    count[m] = count[rest] + count[rest & ~nbrs];
  }
  std::uint64_t total = 0;
  for (std::uint32_t s = 0; s < (1u << lo); ++s) {
    std::uint32_t blocked = 0;
    bool independent = true;
    for (std::uint32_t t = s; t != 0; t &= t - 1) {
      int i = std::countr_zero(t);
      if (conflict[i] & s & ((1u << lo) - 1)) independent = false;
      blocked |= conflict[i] >> lo;
    }
    if (independent) total += count[hi_all & ~blocked];
  }
  return total;
}

std::uint64_t lower_bound_L(const CanonicalGraph& c) {
  require_sinks(c, 20, "sequence search");
  const int nb = c.sink_count();
  const std::uint32_t full = (1u << nb) - 1;
  std::vector<std::uint64_t> cover(std::size_t{1} << nb, 0);
  for (std::uint32_t s = 1; s <= full; ++s) {
    int low = std::countr_zero(s);
    cover[s] = cover[s & (s - 1)] | c.sink_in(low);
  }
  std::vector<char> reachable(std::size_t{1} << nb, 0);
  reachable[0] = 1;
  int best = 0;
  for (std::uint32_t s = 0; s <= full; ++s) {
    if (!reachable[s]) continue;
    best = std::max(best, std::popcount(s));
    for (int b = 0; b < nb; ++b) {
      if ((s >> b) & 1u) continue;
      if ((c.sink_in(b) & ~cover[s]) != 0) reachable[s | (1u << b)] = 1;
    }
  }
  return static_cast<std::uint64_t>(best) + 1;
}

namespace {

// Splits of `members` (connected pieces of a sink set under conflict) into
// two non-empty unions, reported as the first part.
template <class Visit>
void for_each_split(const std::vector<std::uint32_t>& pieces, Visit visit) {
  const std::size_t k = pieces.size();
  if (k < 2) return;
  if (k <= 16) {
    // Fix the last piece on the second side to visit each split once.
    for (std::uint32_t choose = 1; choose < (1u << (k - 1)); ++choose) {
      std::uint32_t part = 0;
      for (std::size_t i = 0; i + 1 < k; ++i) {
        if ((choose >> i) & 1u) part |= pieces[i];
      }
      visit(part);
    }
  } else {
    for (std::uint32_t piece : pieces) visit(piece);
  }
}

}  // namespace

std::uint64_t refined_bound_Lp(const CanonicalGraph& c) {
  require_sinks(c, 20, "refined bound");
  const int nb = c.sink_count();
  const std::uint32_t full = (1u << nb) - 1;
  std::vector<std::uint32_t> conflict(nb, 0);
  for (int i = 0; i < nb; ++i) {
    for (int j = 0; j < nb; ++j) {
      if ((c.sink_in(i) & c.sink_in(j)) != 0) conflict[i] |= 1u << j;
    }
  }
  std::vector<std::uint64_t> cover(std::size_t{1} << nb, 0);
  for (std::uint32_t s = 1; s <= full; ++s) cover[s] = cover[s & (s - 1)] | c.sink_in(std::countr_zero(s));

  auto pieces_of = [&](std::uint32_t s) {
    std::vector<std::uint32_t> pieces;
    std::uint32_t left = s;
    while (left != 0) {
      std::uint32_t comp = left & (~left + 1);
      std::uint32_t frontier = comp;
      while (frontier != 0) {
        int i = std::countr_zero(frontier);
        frontier &= frontier - 1;
        std::uint32_t grow = conflict[i] & s & ~comp;
        comp |= grow;
        frontier |= grow;
      }
      pieces.push_back(comp);
      left &= ~comp;
    }
    return pieces;
  };

  std::vector<std::uint64_t> r(std::size_t{1} << nb, 1);
  // Every constraint bounds r(S) from subsets of S, so one pass in
  // increasing mask order reaches the least solution.
  auto demand = [&](std::uint32_t s) {
    std::uint64_t need = 1;
    for (std::uint32_t t = s; t != 0; t &= t - 1) {
      int b = std::countr_zero(t);
      std::uint32_t rest = s & ~(1u << b);
      std::uint64_t base = r[rest];
      if ((c.sink_in(b) & ~cover[rest]) != 0) base += 1;
      need = std::max(need, base);
    }
    for_each_split(pieces_of(s), [&](std::uint32_t part) {
      need = std::max(need, saturating_mul(r[part], r[s & ~part]));
    });
    return need;
  };
  for (std::uint32_t s = 1; s <= full; ++s) r[s] = demand(s);
  for (std::uint32_t s = 1; s <= full; ++s) {
    if (demand(s) > r[s]) throw std::logic_error("refined bound did not stabilise");
  }
  return r[full];
}

bool in_tight_family(const Digraph& h, int r) {
  if (r < 0 || r > h.size()) return false;
  for (Vertex v = 0; v < r; ++v) {
    if (!h.has_loop(v)) return false;
  }
  for (Vertex a = 0; a < r; ++a) {
    for (Vertex b = a + 1; b < r; ++b) {
      if (h.has_arc(a, b) || h.has_arc(b, a)) continue;
      bool shared = false;
      for (Vertex l = r; l < h.size() && !shared; ++l) shared = h.has_arc(l, a) && h.has_arc(l, b);
      if (!shared) return false;
    }
  }
  return true;
}

namespace {

// Builds H from a sink order and distinct representatives: R-vertex i copies
// sink order[i] (and source reps[i]), L-vertices copy the leftover sources.
Digraph tight_candidate(const CanonicalGraph& c, const std::vector<int>& order, const std::vector<int>& reps) {
  const int n = c.sink_count();
  std::vector<int> source_slot(c.source_count(), -1);
  for (int i = 0; i < n; ++i) source_slot[reps[i]] = i;
  int next = n;
  for (int a = 0; a < c.source_count(); ++a) {
    if (source_slot[a] < 0) source_slot[a] = next++;
  }
  std::vector<Arc> arcs;
  for (int j = 0; j < n; ++j) {
    for (std::uint64_t m = c.sink_in(order[j]); m != 0; m &= m - 1) {
      arcs.push_back({source_slot[std::countr_zero(m)], j});
    }
  }
  return Digraph(next, std::move(arcs));
}

}  // namespace

Tightness tightness_classify(const CanonicalGraph& c) {
  Tightness t;
  t.lower = lower_bound_L(c);
  t.upper = upper_bound_U(c);
  const std::uint64_t target = static_cast<std::uint64_t>(c.sink_count()) + 1;
  if (t.lower != target || t.upper != target) return t;

  const int n = c.sink_count();
  const Digraph reference = c.as_digraph();
  std::vector<int> order, reps;
  std::vector<bool> used(n, false);
  std::optional<Digraph> found;
  std::function<void(std::uint64_t)> search = [&](std::uint64_t covered) {
    if (found) return;
    if (static_cast<int>(order.size()) == n) {
      Digraph h = tight_candidate(c, order, reps);
      if (in_tight_family(h, n) && isomorphic(canonicalize(h).as_digraph(), reference)) found = std::move(h);
      return;
    }
    for (int b = 0; b < n && !found; ++b) {
      if (used[b]) continue;
      std::uint64_t fresh = c.sink_in(b) & ~covered;
      for (std::uint64_t m = fresh; m != 0 && !found; m &= m - 1) {
        used[b] = true;
        order.push_back(b);
        reps.push_back(std::countr_zero(m));
        search(covered | c.sink_in(b));
        order.pop_back();
        reps.pop_back();
        used[b] = false;
      }
    }
  };
  search(0);
  if (found) {
    t.tight = true;
    t.witness = std::move(found);
    t.witness_r = n;
  }
  return t;
}

std::string to_string(MinrankClass c) {
  switch (c) {
    case MinrankClass::One: return "one";
    case MinrankClass::Two: return "two";
    case MinrankClass::Full: return "full";
    case MinrankClass::Other: return "other";
  }
  return "other";
}

MinrankClass minrank_classify(const Digraph& d) {
  if (d.arc_count() == 0) return MinrankClass::One;
  std::optional<std::vector<Vertex>> shared;
  bool two = true;
  for (Vertex v = 0; v < d.size() && two; ++v) {
    if (d.is_source(v)) continue;
    std::vector<Vertex> nv(d.in(v).begin(), d.in(v).end());
    if (!shared) shared = nv;
    else two = *shared == nv;
  }
  if (two) return MinrankClass::Two;
  bool full = true;
  for (Vertex v = 0; v < d.size(); ++v) full = full && d.in_degree(v) == 1 && d.out_degree(v) == 1;
  return full ? MinrankClass::Full : MinrankClass::Other;
}

AbsoluteMinrankBounds absolute_minrank_bounds(const Digraph& d, const Limits& limits) {
  AbsoluteMinrankBounds out;
  const std::uint64_t stab = saturating_mul(static_cast<std::uint64_t>(d.size()) + 1, d.arc_count());
  out.stabilization_q = std::max<std::uint64_t>(stab, 2);
  for (const CanonicalGraph& comp : canonicalize(d).components()) {
    AbsoluteMinrankBounds::Component part;
    part.lp = refined_bound_Lp(comp);
    part.u = upper_bound_U(comp);
    part.crank = canonical_conjunctive_rank(comp, limits).value_or(0);
    out.lower = saturating_mul(out.lower, part.lp);
    out.upper = saturating_mul(out.upper, part.crank == 0 ? part.u : std::min(part.crank, part.u));
    out.components.push_back(part);
  }
  out.exact = out.lower == out.upper;
  return out;
}

}  // namespace fdsrank
