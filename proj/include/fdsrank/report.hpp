#ifndef FDSRANK_REPORT_HPP_
#define FDSRANK_REPORT_HPP_

#include <gmpxx.h>

#include <json.hpp>
#include <string>

#include "fdsrank/bounds.hpp"
#include "fdsrank/canonical.hpp"
#include "fdsrank/common.hpp"
#include "fdsrank/digraph.hpp"
#include "fdsrank/enumeration.hpp"

namespace fdsrank {

using Json = nlohmann::ordered_json;

// "p/q", or "p" for integers.
std::string rational_string(const mpq_class& v);

Json to_json(const StatsReport& r);
Json to_json(const BoundsReport& r);
Json to_json(const Limits& limits);

// Aligned plain-text renderings.
std::string to_table(const StatsReport& r);
std::string to_table(const BoundsReport& r);

// Every analysis section for one graph at alphabet q. Sections that hit a
// guard are kept with status "skipped(size)" and the projected size.
Json analyze(const Digraph& d, int q, bool strict, const Limits& limits = {});
std::string analysis_table(const Json& doc);

// Canonical form summary: sizes, L, L', U, tightness and the graph itself.
Json canonical_summary(const Digraph& d, const Limits& limits = {});

}  // namespace fdsrank

#endif  // FDSRANK_REPORT_HPP_
