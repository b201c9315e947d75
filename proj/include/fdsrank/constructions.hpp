#ifndef FDSRANK_CONSTRUCTIONS_HPP_
#define FDSRANK_CONSTRUCTIONS_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "fdsrank/canonical.hpp"
#include "fdsrank/common.hpp"
#include "fdsrank/digraph.hpp"
#include "fdsrank/fds.hpp"

namespace fdsrank {

// f_v = AND of in-neighbours over q = 2; sources are constantly 1.
Fds conjunctive(const Digraph& d);

// Rank of the conjunctive network, computed on the canonical graph and
// cross-checked against the direct computation when both fit the state
// guard. Throws std::logic_error if the two disagree.
std::uint64_t conjunctive_rank(const Digraph& d, const Limits& limits = {});

// Conjunctive rank of a canonical graph read directly from its sink
// patterns over 2^|A| source assignments; nullopt past the state guard.
std::optional<std::uint64_t> canonical_conjunctive_rank(const CanonicalGraph& c, const Limits& limits = {});

// Same network over q+1 letters, reading min(x_v, q-1).
Fds extend_alphabet(const Fds& f);

// Over q >= 3: f_v = 0 when every in-neighbour is 0 or 1, else 1.
// Throws AlphabetTooSmall.
Fds nilpotent_class_two(const Digraph& d, int q);

// Over max(|B|, 2) letters: sources 0; sink j outputs 1 iff its inputs all
// equal j (0-based). Rank equals upper_bound_U(c).
Fds canonical_upper_witness(const CanonicalGraph& c);

// Boolean network on the star with n looped satellites reaching
// 2^ceil(n/2) + 2^floor(n/2) - 1 images. Throws EvenN unless n is odd, >= 3.
Fds star_witness(int n);

// f_v = -sum_{u != v} x_u mod q on the complete loopless graph.
Fds modular_complete(int n, int q);

// Copies the cycle predecessor on a maximum disjoint cycle cover; uncovered
// vertices map to 0. Periodic rank q^{alpha_n}.
Fds maxper_witness(const Digraph& d, int q);

// f_{v_i} = x_{u_i} along a maximum independent arc family; other vertices
// map to 0. Rank q^{alpha_1}.
Fds maxrank_witness(const Digraph& d, int q);

// Boolean network with at least (#cycles + 1) fixed points built on a
// disjoint cycle packing (each cycle a vertex sequence u_0 -> u_1 -> ...).
// Throws BadPacking if cycles are not cycles of d, overlap, or (unless
// allow_partial) miss a vertex.
Fds packing_plus_one_witness(const Digraph& d, const std::vector<std::vector<Vertex>>& packing,
                             bool allow_partial = false);

// Closed form sum_k (q-1)^k I_k(d) for the maximum number of fixed points of
// the loop-full graph of d. Throws LoopsPresent.
std::uint64_t loopfull_maxfix(const Digraph& d, int q, const Limits& limits = {});

}  // namespace fdsrank

#endif  // FDSRANK_CONSTRUCTIONS_HPP_
