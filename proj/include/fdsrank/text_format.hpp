#ifndef FDSRANK_TEXT_FORMAT_HPP_
#define FDSRANK_TEXT_FORMAT_HPP_

#include <string>
#include <string_view>

#include "fdsrank/canonical.hpp"
#include "fdsrank/digraph.hpp"
#include "fdsrank/fds.hpp"

namespace fdsrank {

// Graph files:
//   # comment
//   n 3
//   1 2
//   2 3
// Vertices are 1-based; duplicate arcs are rejected. Throws ParseError.
Digraph parse_graph(std::string_view text);
Digraph read_graph_file(const std::string& path);
std::string format_graph(const Digraph& d);

// Graph text of the canonical digraph followed by one
// "# provenance <canonical-vertex> <original-vertex> <copy>" line per vertex.
std::string format_canonical(const CanonicalGraph& c);

// FDS files:
//   fds n 2 q 2
//   v 1 inputs 2 table 1 0
//   v 2 inputs table 1
// Tables are indexed little-endian over the listed inputs. Throws ParseError.
Fds parse_fds(std::string_view text);
Fds read_fds_file(const std::string& path);
std::string format_fds(const Fds& f);

// Reads a whole file; throws Error when it cannot be opened.
std::string read_text_file(const std::string& path);

}  // namespace fdsrank

#endif  // FDSRANK_TEXT_FORMAT_HPP_
