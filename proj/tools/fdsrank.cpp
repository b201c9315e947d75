// Command-line front end: analyze, enumerate, canonicalize, bound, emit
// witnesses and run the acceptance suite.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>

#include "fdsrank/bounds.hpp"
#include "fdsrank/canonical.hpp"
#include "fdsrank/constructions.hpp"
#include "fdsrank/enumeration.hpp"
#include "fdsrank/graph_invariants.hpp"
#include "fdsrank/report.hpp"
#include "fdsrank/text_format.hpp"
#include "fdsrank/verify.hpp"

using namespace fdsrank;

namespace {

const std::map<std::string, std::function<Digraph()>>& named_graphs() {
  static const std::map<std::string, std::function<Digraph()>> graphs = {
      {"E3", fixtures::E3},       {"L1", fixtures::L1},       {"P1", fixtures::P1},
      {"C3", fixtures::C3},       {"C3o", fixtures::C3_looped}, {"K3", fixtures::K3},
      {"C5sym", fixtures::C5sym}, {"STAR3", fixtures::STAR3}, {"FIG1", fixtures::FIG1}};
  return graphs;
}

// A path to a graph file, or the name of a built-in fixture when no such
// file exists.
Digraph load_graph(const std::string& source) {
  if (!std::filesystem::exists(source)) {
    auto it = named_graphs().find(source);
    if (it != named_graphs().end()) return it->second();
  }
  return read_graph_file(source);
}

void write_output(const std::string& path, const std::string& body) {
  if (path.empty() || path == "-") {
    std::cout << body;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << body;
}

struct Options {
  std::string input;
  int q = 2;
  bool strict = false;
  std::string format = "json";
  std::string output;
  unsigned threads = 0;
  bool quick = false;
  std::string witness;
  std::vector<std::string> witness_args;
  // Guard overrides; zero keeps the default.
  std::uint64_t max_functions = 0;
  std::uint64_t max_states = 0;
  int max_exact_n = 0;
};

Limits limits_for(const Options& o) {
  Limits l = Limits::from_env();
  if (o.max_functions) l.max_functions = o.max_functions;
  if (o.max_states) l.max_states = o.max_states;
  if (o.max_exact_n) l.max_exact_n = o.max_exact_n;
  return l;
}

void add_guards(CLI::App* cmd, Options& o) {
  cmd->add_option("--max-funcs", o.max_functions, "enumeration guard (functions)")->check(CLI::PositiveNumber);
  cmd->add_option("--max-states", o.max_states, "state-space guard (q^n)")->check(CLI::PositiveNumber);
  cmd->add_option("--max-exact-n", o.max_exact_n, "vertex guard for exact combinatorial searches")
      ->check(CLI::PositiveNumber);
}

int run_verify(const Options& o) {
  VerifyOptions v;
  v.quick = o.quick;
  v.limits = limits_for(o);
  v.on_result = [](const CheckResult& r) { std::cout << format_check(r) << std::endl; };
  const auto results = run_acceptance(v);
  std::vector<int> failed;
  for (const auto& r : results) {
    if (!r.pass) failed.push_back(r.id);
  }
  if (failed.empty()) {
    std::cout << "all " << results.size() << " checks passed\n";
    return 0;
  }
  std::cout << failed.size() << " check(s) failed:";
  for (int id : failed) std::cout << ' ' << id;
  std::cout << '\n';
  return 1;
}

std::string arg(const Options& o, std::size_t i, const char* what) {
  if (i >= o.witness_args.size()) throw CLI::ValidationError("witness " + o.witness + " needs " + what);
  return o.witness_args[i];
}

int parse_int(const std::string& s) {
  std::size_t used = 0;
  const int v = std::stoi(s, &used);
  if (used != s.size()) throw CLI::ValidationError("expected an integer, got '" + s + "'");
  return v;
}

Fds build_witness(const Options& o, const Limits& limits) {
  const std::string& name = o.witness;
  if (name == "conjunctive") return conjunctive(load_graph(arg(o, 0, "a graph")));
  if (name == "extend") return extend_alphabet(read_fds_file(arg(o, 0, "an fds file")));
  if (name == "class-two") return nilpotent_class_two(load_graph(arg(o, 0, "a graph")), o.q);
  if (name == "canonical-upper") return canonical_upper_witness(canonicalize(load_graph(arg(o, 0, "a graph"))));
  if (name == "star") return star_witness(parse_int(arg(o, 0, "an odd n")));
  if (name == "modular") return modular_complete(parse_int(arg(o, 0, "a vertex count")), o.q);
  if (name == "maxper") return maxper_witness(load_graph(arg(o, 0, "a graph")), o.q);
  if (name == "maxrank") return maxrank_witness(load_graph(arg(o, 0, "a graph")), o.q);
  if (name == "packing-plus-one") {
    const Digraph d = load_graph(arg(o, 0, "a graph"));
    const auto packing = maximum_cycle_packing(d, limits);
    std::size_t covered = 0;
    for (const auto& c : packing) covered += c.size();
    return packing_plus_one_witness(d, packing, covered != static_cast<std::size_t>(d.size()));
  }
  throw CLI::ValidationError("unknown witness '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rank, periodic rank and fixed points of finite dynamical systems on a digraph"};
  app.require_subcommand(1);
  Options o;

  auto* analyze_cmd = app.add_subcommand("analyze", "full report for one graph");
  analyze_cmd->add_option("file", o.input, "graph file or fixture name")->required();
  analyze_cmd->add_option("--q", o.q, "alphabet size")->check(CLI::Range(2, 65536));
  analyze_cmd->add_flag("--strict", o.strict, "use F[D,q] rather than F(D,q)");
  analyze_cmd->add_option("--format", o.format)->check(CLI::IsMember({"json", "table"}));
  add_guards(analyze_cmd, o);

  auto* enumerate_cmd = app.add_subcommand("enum", "exhaustive rank / periodic rank / fixed-point statistics");
  enumerate_cmd->add_option("file", o.input, "graph file or fixture name")->required();
  enumerate_cmd->add_option("--q", o.q, "alphabet size")->check(CLI::Range(2, 255));
  enumerate_cmd->add_flag("--strict", o.strict, "use F[D,q] rather than F(D,q)");
  enumerate_cmd->add_option("--format", o.format)->check(CLI::IsMember({"json", "table"}));
  enumerate_cmd->add_option("--threads", o.threads, "worker threads (0 = hardware)");
  add_guards(enumerate_cmd, o);

  auto* canonical_cmd = app.add_subcommand("canonical", "canonical graph with provenance");
  canonical_cmd->add_option("file", o.input, "graph file or fixture name")->required();
  canonical_cmd->add_option("--format", o.format)->check(CLI::IsMember({"json", "table"}));
  canonical_cmd->add_option("-o,--output", o.output, "output file");
  add_guards(canonical_cmd, o);

  auto* bounds_cmd = app.add_subcommand("bounds", "bounds on the maximum number of fixed points");
  bounds_cmd->add_option("file", o.input, "graph file or fixture name")->required();
  bounds_cmd->add_option("--q", o.q, "alphabet size")->check(CLI::Range(2, 65536));
  bounds_cmd->add_flag("--strict", o.strict, "bound maxfix[D,q] rather than maxfix(D,q)");
  bounds_cmd->add_option("--format", o.format)->check(CLI::IsMember({"json", "table"}));
  add_guards(bounds_cmd, o);

  auto* witness_cmd = app.add_subcommand("witness", "emit a witness network in fds text format");
  witness_cmd->add_option("name", o.witness,
                          "conjunctive | extend | class-two | canonical-upper | star | modular | maxper | maxrank | "
                          "packing-plus-one")
      ->required();
  witness_cmd->add_option("args", o.witness_args, "graph file / fixture name, fds file, or n");
  witness_cmd->add_option("--q", o.q, "alphabet size")->check(CLI::Range(2, 65536));
  witness_cmd->add_option("-o,--output", o.output, "output file (default stdout)");
  add_guards(witness_cmd, o);

  auto* verify_cmd = app.add_subcommand("verify", "run the built-in acceptance suite");
  verify_cmd->add_flag("--quick", o.quick, "smaller q = 3 sweep budget");
  add_guards(verify_cmd, o);

  CLI11_PARSE(app, argc, argv);

  try {
    const Limits limits = limits_for(o);
    const bool json = o.format == "json";
    if (analyze_cmd->parsed()) {
      const Json doc = analyze(load_graph(o.input), o.q, o.strict, limits);
      std::cout << (json ? doc.dump(2) + "\n" : analysis_table(doc));
    } else if (enumerate_cmd->parsed()) {
      const StatsReport r = enumerate_stats(load_graph(o.input), o.q, o.strict, limits, o.threads);
      std::cout << (json ? to_json(r).dump(2) + "\n" : to_table(r));
    } else if (canonical_cmd->parsed()) {
      const Digraph d = load_graph(o.input);
      write_output(o.output, json ? canonical_summary(d, limits).dump(2) + "\n" : format_canonical(canonicalize(d)));
    } else if (bounds_cmd->parsed()) {
      const BoundsReport r = fix_bounds_report(load_graph(o.input), o.q, o.strict, limits);
      std::cout << (json ? to_json(r).dump(2) + "\n" : to_table(r));
    } else if (witness_cmd->parsed()) {
      write_output(o.output, format_fds(build_witness(o, limits)));
    } else if (verify_cmd->parsed()) {
      return run_verify(o);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const SizeLimitExceeded& e) {
    std::cerr << "refused: " << e.what() << " (projected " << e.projected() << ", limit " << e.limit() << ")\n";
    return 3;
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
