#ifndef FDSRANK_GRAPH_INVARIANTS_HPP_
#define FDSRANK_GRAPH_INVARIANTS_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fdsrank/common.hpp"
#include "fdsrank/digraph.hpp"

namespace fdsrank {

struct StructureStats {
  std::optional<int> girth;  // nullopt means infinity (acyclic)
  int min_in_degree = 0;
  bool acyclic = true;
  int loop_count = 0;
  std::vector<Vertex> sources;
  std::vector<Vertex> sinks;
};

StructureStats structure_stats(const Digraph& d);

// Exact minimum feedback vertex set size (branch and bound).
int transversal_number(const Digraph& d, const Limits& limits = {});
// One optimal feedback vertex set.
std::vector<Vertex> minimum_feedback_vertex_set(const Digraph& d, const Limits& limits = {});

// Every simple directed cycle as a vertex sequence starting at its least
// vertex. Loops are cycles of length 1.
std::vector<std::vector<Vertex>> simple_cycles(const Digraph& d, const Limits& limits = {});

int cycle_packing_number(const Digraph& d, const Limits& limits = {});
// An optimal packing, cycles as vertex sequences.
std::vector<std::vector<Vertex>> maximum_cycle_packing(const Digraph& d, const Limits& limits = {});

// A clique is a vertex set whose distinct members are joined by arcs in
// both directions; loops are not required.
int clique_partition_number(const Digraph& d, const Limits& limits = {});
std::vector<std::vector<Vertex>> minimum_clique_partition(const Digraph& d, const Limits& limits = {});
std::vector<std::uint64_t> maximal_cliques(const Digraph& d, const Limits& limits = {});

// LP optimum; exact when the column count is at most
// Limits::exact_lp_columns, floating point with 1e-9 tolerance otherwise.
struct FractionalValue {
  bool exact = true;
  mpq_class value;
  double approx = 0.0;
  std::size_t columns = 0;
  std::string to_string() const;
};

FractionalValue fractional_cycle_packing(const Digraph& d, const Limits& limits = {});
FractionalValue fractional_clique_cover(const Digraph& d, const Limits& limits = {});

// Maximum family of arcs with pairwise distinct tails and distinct heads.
int max_independent_arcs(const Digraph& d);
// Lexicographically least optimal family (ordered by tail).
std::vector<Arc> maximum_independent_arcs(const Digraph& d);

// Maximum number of vertices covered by vertex-disjoint cycles.
int max_cycle_cover(const Digraph& d);
// Successor map of a lexicographically least optimal cover; -1 for
// uncovered vertices.
std::vector<Vertex> maximum_cycle_cover(const Digraph& d);

// k copies of every vertex; (u,i)->(v,j) for every arc uv. Vertex (u,i)
// (0-based u, i) gets index u*k + i, i.e. (u-1)k + i in 1-based terms.
Digraph blowup(const Digraph& d, int k);

// I_k = number of in-dominating sets of size k, k = 0..n.
std::vector<std::uint64_t> in_dominating_profile(const Digraph& d, const Limits& limits = {});

enum class NilpotentSufficiency { Loop, Symmetric, PrimitiveStrictSpanning, None };
std::string to_string(NilpotentSufficiency v);

// First sufficient condition for a nilpotent Boolean network that applies.
// Throws NotStronglyConnected.
NilpotentSufficiency nilpotent_sufficiency(const Digraph& d);

// Strongly connected with gcd of cycle lengths 1.
bool is_primitive(const Digraph& d);

}  // namespace fdsrank

#endif  // FDSRANK_GRAPH_INVARIANTS_HPP_
