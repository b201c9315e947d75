#include "fdsrank/text_format.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace fdsrank {

namespace {

struct Line {
  int number;
  std::vector<std::string_view> tokens;
};

// Splits into whitespace tokens, dropping blank lines and '#' comments.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i >= raw.size()) break;
      if (line.tokens.empty() && raw[i] == '#') break;
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
  }
  return lines;
}

long long integer(std::string_view token, int line, const char* what) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(token) + "'");
  }
  return value;
}

Vertex vertex(std::string_view token, int line, int n) {
  long long v = integer(token, line, "a vertex");
  if (v < 1 || v > n) {
    throw ParseError(line, "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
  }
  return static_cast<Vertex>(v - 1);
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Digraph parse_graph(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "missing 'n <N>' header");
  const Line& head = lines.front();
  if (head.tokens.size() != 2 || head.tokens[0] != "n") {
    throw ParseError(head.number, "expected 'n <N>' header");
  }
  const long long n = integer(head.tokens[1], head.number, "a vertex count");
  if (n < 1 || n > 4096) throw ParseError(head.number, "vertex count must lie in 1..4096");
  std::set<Arc> seen;
  std::vector<Arc> arcs;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens.size() != 2) throw ParseError(line.number, "expected '<u> <v>'");
    Arc a{vertex(line.tokens[0], line.number, static_cast<int>(n)),
          vertex(line.tokens[1], line.number, static_cast<int>(n))};
    if (!seen.insert(a).second) {
      throw ParseError(line.number,
                       "duplicate arc " + std::to_string(a.from + 1) + " " + std::to_string(a.to + 1));
    }
    arcs.push_back(a);
  }
  return Digraph(static_cast<int>(n), std::move(arcs));
}

Digraph read_graph_file(const std::string& path) { return parse_graph(read_text_file(path)); }

std::string format_graph(const Digraph& d) {
  std::ostringstream out;
  out << "n " << d.size() << '\n';
  for (const Arc& a : d.arcs()) out << a.from + 1 << ' ' << a.to + 1 << '\n';
  return out.str();
}

std::string format_canonical(const CanonicalGraph& c) {
  std::ostringstream out;
  out << format_graph(c.as_digraph());
  for (Vertex v = 0; v < c.source_count() + c.sink_count(); ++v) {
    const auto p = c.provenance(v);
    out << "# provenance " << v + 1 << ' ' << p.original + 1 << ' ' << p.copy << '\n';
  }
  return out.str();
}

Fds parse_fds(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "missing 'fds n <N> q <Q>' header");
  const Line& head = lines.front();
  if (head.tokens.size() != 5 || head.tokens[0] != "fds" || head.tokens[1] != "n" || head.tokens[3] != "q") {
    throw ParseError(head.number, "expected 'fds n <N> q <Q>' header");
  }
  const long long n = integer(head.tokens[2], head.number, "a vertex count");
  const long long q = integer(head.tokens[4], head.number, "an alphabet size");
  if (n < 1 || n > 64) throw ParseError(head.number, "vertex count must lie in 1..64");
  if (q < 2 || q > 65536) throw ParseError(head.number, "alphabet size must lie in 2..65536");

  std::vector<std::vector<Vertex>> inputs(n);
  std::vector<std::vector<Value>> tables(n);
  std::vector<int> defined_at(n, 0);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const auto& t = line.tokens;
    if (t.size() < 4 || t[0] != "v" || t[2] != "inputs") {
      throw ParseError(line.number, "expected 'v <id> inputs <i1 .. ik> table <t0 ...>'");
    }
    const Vertex v = vertex(t[1], line.number, static_cast<int>(n));
    if (defined_at[v] != 0) {
      throw ParseError(line.number, "vertex " + std::to_string(v + 1) + " already defined on line " +
                                        std::to_string(defined_at[v]));
    }
    defined_at[v] = line.number;
    std::size_t k = 3;
    for (; k < t.size() && t[k] != "table"; ++k) inputs[v].push_back(vertex(t[k], line.number, static_cast<int>(n)));
    if (k == t.size()) throw ParseError(line.number, "missing 'table' keyword");
    for (++k; k < t.size(); ++k) {
      const long long value = integer(t[k], line.number, "a table entry");
      if (value < 0 || value >= q) {
        throw ParseError(line.number, "table entry " + std::to_string(value) + " outside 0.." + std::to_string(q - 1));
      }
      tables[v].push_back(static_cast<Value>(value));
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (defined_at[v] == 0) throw ParseError(head.number, "vertex " + std::to_string(v + 1) + " is never defined");
  }
  try {
    return Fds(static_cast<int>(n), static_cast<int>(q), std::move(inputs), std::move(tables));
  } catch (const ShapeMismatch& e) {
    // Table lengths are checked against the arity as a whole, so the error is
    // reported on the header line.
    throw ParseError(head.number, e.what());
  }
}

Fds read_fds_file(const std::string& path) { return parse_fds(read_text_file(path)); }

std::string format_fds(const Fds& f) {
  std::ostringstream out;
  out << "fds n " << f.size() << " q " << f.alphabet() << '\n';
  for (Vertex v = 0; v < f.size(); ++v) {
    out << "v " << v + 1 << " inputs";
    for (Vertex u : f.inputs(v)) out << ' ' << u + 1;
    out << " table";
    for (Value x : f.table(v)) out << ' ' << x;
    out << '\n';
  }
  return out.str();
}

}  // namespace fdsrank
