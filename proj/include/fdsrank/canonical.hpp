#ifndef FDSRANK_CANONICAL_HPP_
#define FDSRANK_CANONICAL_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fdsrank/common.hpp"
#include "fdsrank/digraph.hpp"

namespace fdsrank {

// Bipartite source/sink digraph. Every canonical vertex copies an original
// vertex: sources are 0-copies, sinks are 1-copies.
class CanonicalGraph {
 public:
  struct Provenance {
    Vertex original;
    int copy;  // 0 = source copy, 1 = sink copy
  };

  CanonicalGraph() = default;
  // sink_in[j] is the in-neighbourhood of sink j as a bitmask over source
  // positions. Throws ShapeMismatch on a mask naming a missing source.
  CanonicalGraph(std::vector<Vertex> source_origin, std::vector<Vertex> sink_origin,
                 std::vector<std::uint64_t> sink_in);

  // Reads a digraph whose arcs all run from sources to sinks. Vertices keep
  // their own index as provenance. Throws ShapeMismatch otherwise.
  static CanonicalGraph from_bipartite(const Digraph& d);

  int source_count() const noexcept { return static_cast<int>(source_origin_.size()); }
  int sink_count() const noexcept { return static_cast<int>(sink_origin_.size()); }
  bool empty() const noexcept { return sink_origin_.empty() && source_origin_.empty(); }
  std::uint64_t sink_in(int j) const { return sink_in_[j]; }
  const std::vector<std::uint64_t>& sink_in_masks() const noexcept { return sink_in_; }
  const std::vector<Vertex>& source_origins() const noexcept { return source_origin_; }
  const std::vector<Vertex>& sink_origins() const noexcept { return sink_origin_; }

  // Sources are vertices 0..|A|-1, sinks |A|..|A|+|B|-1.
  Digraph as_digraph() const;
  Provenance provenance(Vertex canonical_vertex) const;

  // Components linked through shared sources.
  std::vector<CanonicalGraph> components() const;

  // No redundant sink or source remains.
  bool is_fixed_point() const;

 private:
  std::vector<Vertex> source_origin_;
  std::vector<Vertex> sink_origin_;
  std::vector<std::uint64_t> sink_in_;
};

enum class RemovalPolicy {
  // Sinks are examined in increasing vertex order and removed one at a time
  // against the current graph.
  Sequential,
  // All redundant sinks are computed against D' and removed together. Kept
  // for comparison; it does not preserve minimum rank in general.
  Simultaneous,
};

CanonicalGraph canonicalize(const Digraph& d, RemovalPolicy policy = RemovalPolicy::Sequential);

// Number of independent sets (empty set included) of the conflict graph on
// sinks; sinks conflict when their in-neighbourhoods meet. |B| <= 30.
std::uint64_t upper_bound_U(const CanonicalGraph& c);

// Longest sequence of sinks each bringing a new in-neighbour, plus one.
// |B| <= 20.
std::uint64_t lower_bound_L(const CanonicalGraph& c);

// Least r : 2^B -> N with r(empty) = 1, r(S+b) >= r(S)+1 when b brings a new
// in-neighbour, r(S u T) >= r(S) r(T) for in-disjoint S, T, and r monotone.
// Returns r(B). |B| <= 20.
std::uint64_t refined_bound_Lp(const CanonicalGraph& c);

struct Tightness {
  bool tight = false;
  std::uint64_t lower = 0;  // L(C)
  std::uint64_t upper = 0;  // U(C)
  // When tight: H with R = vertices 0..|B|-1 (looped) and L after them.
  std::optional<Digraph> witness;
  int witness_r = 0;
};

Tightness tightness_classify(const CanonicalGraph& c);

// Literal family test: loops on R = {0..r-1}; every pair of R joined by an
// arc or by a common in-neighbour outside R.
bool in_tight_family(const Digraph& h, int r);

enum class MinrankClass { One, Two, Full, Other };
std::string to_string(MinrankClass c);

MinrankClass minrank_classify(const Digraph& d);

struct AbsoluteMinrankBounds {
  std::uint64_t lower = 1;
  std::uint64_t upper = 1;
  std::uint64_t stabilization_q = 2;
  bool exact = true;
  // Per canonical component: L', U, conjunctive rank (0 when skipped).
  struct Component {
    std::uint64_t lp = 1;
    std::uint64_t u = 1;
    std::uint64_t crank = 0;
  };
  std::vector<Component> components;
};

AbsoluteMinrankBounds absolute_minrank_bounds(const Digraph& d, const Limits& limits = {});

}  // namespace fdsrank

#endif  // FDSRANK_CANONICAL_HPP_
