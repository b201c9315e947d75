#include "fdsrank/report.hpp"

#include <iomanip>
#include <sstream>

#include "fdsrank/constructions.hpp"
#include "fdsrank/graph_invariants.hpp"

namespace fdsrank {

namespace {

Json skipped(const SizeLimitExceeded& e) {
  return Json{{"status", "skipped(size)"}, {"projected", e.projected()}, {"limit", e.limit()}, {"reason", e.what()}};
}

// Runs a section body; a guard refusal replaces the section with a skip
// record rather than dropping it.
template <class F>
Json section(F body) {
  try {
    Json out{{"status", "ok"}};
    body(out);
    return out;
  } catch (const SizeLimitExceeded& e) {
    return skipped(e);
  }
}

Json one_based(const std::vector<Vertex>& vs) {
  Json out = Json::array();
  for (Vertex v : vs) out.push_back(v + 1);
  return out;
}

Json arc_list(const Digraph& d) {
  Json out = Json::array();
  for (const Arc& a : d.arcs()) out.push_back({a.from + 1, a.to + 1});
  return out;
}

Json quantity(const QuantityStats& s) {
  Json hist = Json::array();
  for (const auto& [value, count] : s.histogram) hist.push_back({value, count});
  return Json{{"min", s.min}, {"max", s.max}, {"average", rational_string(s.average)}, {"histogram", hist}};
}

Json bound_list(const std::vector<NamedBound>& bounds) {
  Json out = Json::object();
  for (const auto& b : bounds) {
    Json entry{{"status", b.status}, {"provenance", b.provenance}};
    entry["value"] = b.value ? Json(*b.value) : Json(nullptr);
    out[b.name] = entry;
  }
  return out;
}

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

std::string rational_string(const mpq_class& v) {
  mpq_class c = v;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Json to_json(const StatsReport& r) {
  return Json{{"fingerprint", r.fingerprint},
              {"q", r.q},
              {"strict", r.strict},
              {"function_count", r.function_count},
              {"rank", quantity(r.rank)},
              {"periodic_rank", quantity(r.periodic_rank)},
              {"fixed_points", quantity(r.fixed_points)},
              {"fixed_point_free_fraction", rational_string(r.fixed_point_free_fraction)}};
}

Json to_json(const BoundsReport& r) {
  Json out{{"fingerprint", r.fingerprint},
           {"target", r.strict ? "maxfix[D,q] (strict)" : "maxfix(D,q)"},
           {"q", r.q},
           {"strict", r.strict},
           {"upper", bound_list(r.upper)},
           {"lower", bound_list(r.lower)}};
  out["best_upper"] = r.best_upper == UINT64_MAX ? Json(nullptr) : Json(r.best_upper);
  out["best_lower"] = r.best_lower;
  out["consistent"] = r.consistent;
  if (r.entropy) {
    out["entropy_H"] = Json{{"value", r.entropy->to_string()},
                            {"approx", r.entropy->approx},
                            {"exact", r.entropy->exact},
                            {"degenerate", r.entropy->degenerate}};
  }
  return out;
}

Json to_json(const Limits& l) {
  return Json{{"max_states", l.max_states},       {"max_functions", l.max_functions},
              {"max_exact_n", l.max_exact_n},     {"max_cycles", l.max_cycles},
              {"max_code_space", l.max_code_space}, {"exact_lp_columns", l.exact_lp_columns},
              {"max_entropy_n", l.max_entropy_n}, {"exact_entropy_n", l.exact_entropy_n}};
}

std::string to_table(const StatsReport& r) {
  std::ostringstream out;
  out << "graph      " << r.fingerprint << '\n'
      << "q          " << r.q << '\n'
      << "family     " << (r.strict ? "F[D,q] (strict)" : "F(D,q)") << '\n'
      << "functions  " << r.function_count << "\n\n";
  out << std::left << std::setw(16) << "quantity" << std::setw(10) << "min" << std::setw(10) << "max"
      << "average\n";
  auto row = [&](const char* name, const QuantityStats& s) {
    out << std::left << std::setw(16) << name << std::setw(10) << s.min << std::setw(10) << s.max
        << rational_string(s.average) << '\n';
  };
  row("rank", r.rank);
  row("periodic_rank", r.periodic_rank);
  row("fixed_points", r.fixed_points);
  out << "\nfixed-point-free fraction  " << rational_string(r.fixed_point_free_fraction) << '\n';
  out << "fixed-point histogram     ";
  for (const auto& [v, c] : r.fixed_points.histogram) out << ' ' << v << ':' << c;
  out << '\n';
  return out.str();
}

std::string to_table(const BoundsReport& r) {
  std::ostringstream out;
  out << "graph   " << r.fingerprint << '\n'
      << "target  " << (r.strict ? "maxfix[D,q]" : "maxfix(D,q)") << " at q = " << r.q << "\n\n";
  auto block = [&](const char* title, const std::vector<NamedBound>& bounds) {
    out << title << '\n';
    for (const auto& b : bounds) {
      out << "  " << std::left << std::setw(22) << b.name << std::setw(16)
          << (b.value ? std::to_string(*b.value) : b.status) << b.provenance << '\n';
    }
  };
  block("upper bounds", r.upper);
  block("lower bounds", r.lower);
  out << "\nbest  " << r.best_lower << " <= maxfix <= "
      << (r.best_upper == UINT64_MAX ? std::string("inf") : std::to_string(r.best_upper))
      << (r.consistent ? "  (consistent)" : "  (INCONSISTENT)") << '\n';
  return out.str();
}

Json canonical_summary(const Digraph& d, const Limits& limits) {
  (void)limits;
  return section([&](Json& out) {
    const CanonicalGraph c = canonicalize(d);
    out["sources"] = c.source_count();
    out["sinks"] = c.sink_count();
    out["L"] = lower_bound_L(c);
    out["L_refined"] = refined_bound_Lp(c);
    out["U"] = upper_bound_U(c);
    const Tightness t = tightness_classify(c);
    out["tight"] = t.tight;
    if (t.witness) out["tight_witness"] = Json{{"n", t.witness->size()}, {"r", t.witness_r}, {"arcs", arc_list(*t.witness)}};
    out["arcs"] = arc_list(c.as_digraph());
    Json prov = Json::array();
    for (Vertex v = 0; v < c.source_count() + c.sink_count(); ++v) {
      const auto p = c.provenance(v);
      prov.push_back({v + 1, p.original + 1, p.copy});
    }
    out["provenance"] = prov;
  });
}

Json analyze(const Digraph& d, int q, bool strict, const Limits& limits) {
  Json doc;
  doc["graph"] = Json{{"n", d.size()}, {"arcs", arc_list(d)}, {"fingerprint", d.fingerprint()}};
  doc["q"] = q;
  doc["strict"] = strict;
  doc["guards"] = to_json(limits);

  doc["structure"] = section([&](Json& out) {
    const StructureStats s = structure_stats(d);
    out["girth"] = s.girth ? Json(*s.girth) : Json("inf");
    out["min_in_degree"] = s.min_in_degree;
    out["acyclic"] = s.acyclic;
    out["loop_count"] = s.loop_count;
    out["sources"] = one_based(s.sources);
    out["sinks"] = one_based(s.sinks);
  });
  doc["canonical"] = canonical_summary(d, limits);
  doc["conjunctive_rank"] = section([&](Json& out) { out["value"] = conjunctive_rank(d, limits); });
  doc["minrank"] = section([&](Json& out) {
    out["classification"] = to_string(minrank_classify(d));
    // minrank[D,q] is taken over the strict family whatever the --strict flag.
    try {
      out["at_q"] = minrank_exact(d, q, limits);
    } catch (const SizeLimitExceeded& e) {
      out["at_q"] = skipped(e);
    }
    const AbsoluteMinrankBounds b = absolute_minrank_bounds(d, limits);
    out["lower"] = b.lower;
    out["upper"] = b.upper;
    out["stabilization_q"] = b.stabilization_q;
    out["exact"] = b.exact;
    Json parts = Json::array();
    for (const auto& c : b.components) {
      parts.push_back(Json{{"L_refined", c.lp}, {"U", c.u}, {"crank", c.crank == 0 ? Json(nullptr) : Json(c.crank)}});
    }
    out["components"] = parts;
  });
  doc["arc_invariants"] = section([&](Json& out) {
    const int a1 = max_independent_arcs(d);
    const int an = max_cycle_cover(d);
    out["alpha_1"] = a1;
    out["alpha_n"] = an;
    out["maxrank"] = saturating_pow(q, a1);
    out["maxper"] = saturating_pow(q, an);
  });
  doc["fix_bounds"] = section([&](Json& out) {
    const Json body = to_json(fix_bounds_report(d, q, strict, limits));
    for (const auto& [k, v] : body.items()) out[k] = v;
  });
  doc["enumeration"] = section([&](Json& out) {
    const Json body = to_json(enumerate_stats(d, q, strict, limits));
    for (const auto& [k, v] : body.items()) out[k] = v;
  });
  return doc;
}

std::string analysis_table(const Json& doc) {
  std::ostringstream out;
  for (const auto& [name, value] : doc.items()) {
    if (!value.is_object()) {
      out << std::left << std::setw(20) << name << cell(value) << '\n';
      continue;
    }
    out << '\n' << '[' << name << "]\n";
    for (const auto& [k, v] : value.items()) {
      if (k == "histogram") continue;
      if (v.is_object()) {
        out << "  " << k << '\n';
        for (const auto& [k2, v2] : v.items()) {
          if (k2 == "histogram") continue;
          out << "    " << std::left << std::setw(22) << k2 << cell(v2) << '\n';
        }
      } else {
        out << "  " << std::left << std::setw(24) << k << cell(v) << '\n';
      }
    }
  }
  return out.str();
}

}  // namespace fdsrank
