#include "fdsrank/digraph.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <queue>
#include <sstream>

#include "fdsrank/common.hpp"

namespace fdsrank {

Limits Limits::from_env() {
  Limits limits;
  if (const char* env = std::getenv("FDSRANK_MAX_FUNCS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    unsigned long long value = std::strtoull(env, &end, 10);
    if (end != nullptr && *end == '\0' && value > 0) limits.max_functions = value;
  }
  return limits;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > UINT64_MAX / b) return UINT64_MAX;
  return a * b;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    result = saturating_mul(result, base);
    if (result == UINT64_MAX) break;
  }
  return result;
}

Digraph::Digraph(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
  if (n < 0) throw ShapeMismatch("vertex count must be non-negative");
  for (const Arc& a : arcs_) {
    if (a.from < 0 || a.from >= n || a.to < 0 || a.to >= n) {
      throw ValueOutOfRange("arc endpoint outside 1.." + std::to_string(n));
    }
  }
  std::sort(arcs_.begin(), arcs_.end());
  if (std::adjacent_find(arcs_.begin(), arcs_.end()) != arcs_.end()) {
    throw ShapeMismatch("duplicate arc");
  }
  in_.assign(n, {});
  out_.assign(n, {});
  for (const Arc& a : arcs_) {
    out_[a.from].push_back(a.to);
    in_[a.to].push_back(a.from);
  }
  for (auto& list : in_) std::sort(list.begin(), list.end());
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
  return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

int Digraph::loop_count() const {
  int count = 0;
  for (Vertex v = 0; v < n_; ++v) count += has_loop(v) ? 1 : 0;
  return count;
}

bool Digraph::is_symmetric() const {
  return std::all_of(arcs_.begin(), arcs_.end(),
                     [&](const Arc& a) { return has_arc(a.to, a.from); });
}

std::uint64_t Digraph::in_mask(Vertex v) const {
  std::uint64_t m = 0;
  for (Vertex u : in_[v]) m |= std::uint64_t{1} << u;
  return m;
}

std::uint64_t Digraph::out_mask(Vertex v) const {
  std::uint64_t m = 0;
  for (Vertex u : out_[v]) m |= std::uint64_t{1} << u;
  return m;
}

std::uint64_t Digraph::all_mask() const {
  return n_ >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
}

Digraph Digraph::induced(std::span<const Vertex> keep) const {
  std::vector<int> index(n_, -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
  std::vector<Arc> arcs;
  for (const Arc& a : arcs_) {
    if (index[a.from] >= 0 && index[a.to] >= 0) arcs.push_back({index[a.from], index[a.to]});
  }
  return Digraph(static_cast<int>(keep.size()), std::move(arcs));
}

Digraph Digraph::without_arc(Arc removed) const {
  std::vector<Arc> arcs;
  for (const Arc& a : arcs_) {
    if (a != removed) arcs.push_back(a);
  }
  return Digraph(n_, std::move(arcs));
}

Digraph Digraph::with_all_loops() const {
  std::vector<Arc> arcs = arcs_;
  for (Vertex v = 0; v < n_; ++v) {
    if (!has_loop(v)) arcs.push_back({v, v});
  }
  return Digraph(n_, std::move(arcs));
}

Digraph Digraph::arcs_into(std::span<const Vertex> heads) const {
  std::vector<char> keep(n_, 0);
  for (Vertex v : heads) keep[v] = 1;
  std::vector<Arc> arcs;
  for (const Arc& a : arcs_) {
    if (keep[a.to]) arcs.push_back(a);
  }
  return Digraph(n_, std::move(arcs));
}

std::vector<std::vector<Vertex>> Digraph::weak_components() const {
  std::vector<int> parent(n_);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Arc& a : arcs_) {
    int ra = find(a.from);
    int rb = find(a.to);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::vector<std::vector<Vertex>> comps;
  std::vector<int> slot(n_, -1);
  for (Vertex v = 0; v < n_; ++v) {
    int r = find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[slot[r]].push_back(v);
  }
  return comps;
}

// Tarjan, iterative.
std::vector<std::vector<Vertex>> Digraph::strong_components() const {
  std::vector<int> index(n_, -1), low(n_, 0);
  std::vector<char> on_stack(n_, 0);
  std::vector<Vertex> stack;
  std::vector<std::vector<Vertex>> comps;
  int counter = 0;
  std::vector<std::pair<Vertex, std::size_t>> call;
  for (Vertex root = 0; root < n_; ++root) {
    if (index[root] >= 0) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& [v, next] = call.back();
      if (next < out_[v].size()) {
        Vertex w = out_[v][next++];
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::vector<Vertex> comp;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
      }
      Vertex finished = v;
      call.pop_back();
      if (!call.empty()) {
        Vertex parent = call.back().first;
        low[parent] = std::min(low[parent], low[finished]);
      }
    }
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

bool Digraph::is_strongly_connected() const {
  return n_ > 0 && strong_components().size() == 1;
}

bool Digraph::is_acyclic() const {
  std::vector<int> indeg(n_);
  for (Vertex v = 0; v < n_; ++v) indeg[v] = in_degree(v);
  std::queue<Vertex> ready;
  for (Vertex v = 0; v < n_; ++v) {
    if (indeg[v] == 0) ready.push(v);
  }
  int seen = 0;
  while (!ready.empty()) {
    Vertex v = ready.front();
    ready.pop();
    ++seen;
    for (Vertex w : out_[v]) {
      if (--indeg[w] == 0) ready.push(w);
    }
  }
  return seen == n_;
}

std::string Digraph::fingerprint() const {
  std::ostringstream os;
  os << "n=" << n_ << " arcs=";
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    if (i) os << ',';
    os << arcs_[i].from + 1 << '>' << arcs_[i].to + 1;
  }
  return os.str();
}

namespace fixtures {

Digraph E3() { return Digraph::empty(3); }
Digraph L1() { return Digraph(1, {{0, 0}}); }
Digraph P1() { return Digraph(2, {{0, 1}}); }
Digraph C3() { return cycle(3); }
Digraph C3_looped() { return C3().with_all_loops(); }
Digraph K3() { return complete(3); }

Digraph C5sym() {
  std::vector<Arc> arcs;
  for (int i = 0; i < 5; ++i) {
    arcs.push_back({i, (i + 1) % 5});
    arcs.push_back({(i + 1) % 5, i});
  }
  return Digraph(5, std::move(arcs));
}

Digraph STAR3() { return star(3); }

Digraph FIG1() {
  return Digraph(7, {{0, 3}, {0, 4}, {1, 4}, {1, 5}, {2, 5}, {2, 6}});
}

Digraph cycle(int n) {
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n});
  return Digraph(n, std::move(arcs));
}

Digraph complete(int n) {
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v) arcs.push_back({u, v});
    }
  }
  return Digraph(n, std::move(arcs));
}

Digraph star(int satellites) {
  std::vector<Arc> arcs;
  for (int v = 1; v <= satellites; ++v) {
    arcs.push_back({0, v});
    arcs.push_back({v, v});
  }
  return Digraph(satellites + 1, std::move(arcs));
}

Digraph from_adjacency_bits(int n, std::uint64_t bits) {
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if ((bits >> (u * n + v)) & 1U) arcs.push_back({u, v});
    }
  }
  return Digraph(n, std::move(arcs));
}

}  // namespace fixtures

namespace {

struct VertexInvariant {
  int in_degree;
  int out_degree;
  bool loop;
  friend auto operator<=>(const VertexInvariant&, const VertexInvariant&) = default;
};

VertexInvariant invariant_of(const Digraph& g, Vertex v) {
  return {g.in_degree(v), g.out_degree(v), g.has_loop(v)};
}

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Digraph& g, const Digraph& h) {
  const int n = g.size();
  if (n != h.size() || g.arc_count() != h.arc_count()) return std::nullopt;
  std::vector<VertexInvariant> gi(n), hi(n);
  for (Vertex v = 0; v < n; ++v) {
    gi[v] = invariant_of(g, v);
    hi[v] = invariant_of(h, v);
  }
  {
    auto a = gi, b = hi;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  // Map the most constrained vertices first.
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return g.in_degree(a) + g.out_degree(a) > g.in_degree(b) + g.out_degree(b);
  });
  std::vector<Vertex> map(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> extend = [&](int depth) -> bool {
    if (depth == n) return true;
    Vertex v = order[depth];
    for (Vertex w = 0; w < n; ++w) {
      if (used[w] || gi[v] != hi[w]) continue;
      bool ok = true;
      for (int d = 0; d < depth && ok; ++d) {
        Vertex u = order[d];
        ok = g.has_arc(u, v) == h.has_arc(map[u], w) && g.has_arc(v, u) == h.has_arc(w, map[u]);
      }
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      if (extend(depth + 1)) return true;
      used[w] = 0;
      map[v] = -1;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return map;
}

}  // namespace fdsrank
