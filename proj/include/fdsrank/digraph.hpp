#ifndef FDSRANK_DIGRAPH_HPP_
#define FDSRANK_DIGRAPH_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fdsrank {

// Vertices are 0-based internally; every text format and report is 1-based.
using Vertex = int;

struct Arc {
  Vertex from;
  Vertex to;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Immutable directed graph on {0..n-1}, loops allowed, no parallel arcs.
class Digraph {
 public:
  Digraph() = default;
  // Throws ValueOutOfRange for a bad endpoint, ShapeMismatch for a
  // duplicate arc or n < 0.
  Digraph(int n, std::vector<Arc> arcs);

  static Digraph empty(int n) { return Digraph(n, {}); }

  int size() const noexcept { return n_; }
  std::size_t arc_count() const noexcept { return arcs_.size(); }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }

  std::span<const Vertex> in(Vertex v) const { return in_[v]; }
  std::span<const Vertex> out(Vertex v) const { return out_[v]; }
  int in_degree(Vertex v) const { return static_cast<int>(in_[v].size()); }
  int out_degree(Vertex v) const { return static_cast<int>(out_[v].size()); }
  bool has_arc(Vertex u, Vertex v) const;
  bool has_loop(Vertex v) const { return has_arc(v, v); }
  bool is_source(Vertex v) const { return in_[v].empty(); }
  bool is_sink(Vertex v) const { return out_[v].empty(); }
  int loop_count() const;
  bool is_symmetric() const;

  // Bitmask views; only valid when size() <= 64.
  std::uint64_t in_mask(Vertex v) const;
  std::uint64_t out_mask(Vertex v) const;
  std::uint64_t all_mask() const;

  // Subgraph induced on the vertices in `keep` (relabelled in order).
  Digraph induced(std::span<const Vertex> keep) const;
  Digraph without_arc(Arc a) const;
  Digraph with_all_loops() const;
  // Same vertex set, keeps only arcs whose head is in `heads`.
  Digraph arcs_into(std::span<const Vertex> heads) const;

  // Weakly connected components, each sorted, ordered by least vertex.
  std::vector<std::vector<Vertex>> weak_components() const;
  std::vector<std::vector<Vertex>> strong_components() const;
  bool is_strongly_connected() const;
  bool is_acyclic() const;

  // Human-readable identity used in reports, e.g. "n=3 arcs=1>2,2>3".
  std::string fingerprint() const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_;
  }

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<Vertex>> in_;
  std::vector<std::vector<Vertex>> out_;
};

// Test fixtures used throughout the docs and test suites.
namespace fixtures {
Digraph E3();
Digraph L1();
Digraph P1();
Digraph C3();
Digraph C3_looped();
Digraph K3();
Digraph C5sym();
Digraph STAR3();
Digraph FIG1();
Digraph cycle(int n);
Digraph complete(int n);  // all non-loop arcs
Digraph star(int satellites);  // centre 0 feeds every satellite; satellites looped
// Digraph on n vertices from an n*n adjacency bitmask (bit u*n+v is arc u->v).
Digraph from_adjacency_bits(int n, std::uint64_t bits);
}  // namespace fixtures

// Returns a vertex mapping g -> h when the graphs are isomorphic.
std::optional<std::vector<Vertex>> find_isomorphism(const Digraph& g, const Digraph& h);
inline bool isomorphic(const Digraph& g, const Digraph& h) {
  return find_isomorphism(g, h).has_value();
}

}  // namespace fdsrank

#endif  // FDSRANK_DIGRAPH_HPP_
