#include <doctest.h>

#include "fdsrank/report.hpp"
#include "fdsrank/text_format.hpp"

using namespace fdsrank;

TEST_CASE("graph text round trip") {
  const Digraph d = fixtures::FIG1();
  CHECK(parse_graph(format_graph(d)) == d);
  const Digraph c = parse_graph("# comment\nn 3\n\n1 2\n2 3 \n3 1\n");
  CHECK(c == fixtures::C3());
}

TEST_CASE("graph parse errors carry the line") {
  try {
    parse_graph("n 3\n1 2\n1 4\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_graph("n 2\n1 2\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("3\n"), ParseError);
  CHECK_THROWS_AS(parse_graph(""), ParseError);
}

TEST_CASE("fds text round trip") {
  const Fds f(2, 3, {{1}, {0, 1}}, {{2, 1, 0}, {0, 1, 2, 1, 2, 0, 2, 0, 1}});
  const Fds g = parse_fds(format_fds(f));
  for (State x = 0; x < 9; ++x) CHECK(f.apply(x) == g.apply(x));
  try {
    parse_fds("fds n 1 q 2\nv 1 inputs 1 table 0 3\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_fds("fds n 2 q 2\nv 1 inputs table 0\n"), ParseError);
}

TEST_CASE("analysis document") {
  const Json doc = analyze(fixtures::STAR3(), 2, false, {});
  CHECK(doc["minrank"]["lower"] == 4);
  CHECK(doc["minrank"]["upper"] == 4);
  CHECK(doc["minrank"]["at_q"] == 5);
  CHECK(doc["conjunctive_rank"]["value"] == 8);
  CHECK(doc["canonical"]["tight"] == true);

  const Json fig1 = analyze(fixtures::FIG1(), 2, false, {});
  CHECK(fig1["canonical"]["L"] == 4);
  CHECK(fig1["canonical"]["L_refined"] == 6);
  CHECK(fig1["canonical"]["U"] == 8);
  CHECK(fig1["canonical"]["tight"] == false);

  const Json e3 = analyze(fixtures::E3(), 2, false, {});
  CHECK(e3["minrank"]["classification"] == "one");
  CHECK(e3["enumeration"]["rank"]["max"] == 1);
}

TEST_CASE("guard refusals become skip records") {
  Limits tight;
  tight.max_functions = 10;
  const Json doc = analyze(fixtures::STAR3(), 2, false, tight);
  CHECK(doc["enumeration"]["status"] == "skipped(size)");
  CHECK(doc["enumeration"].contains("projected"));
  CHECK(doc["structure"]["status"] == "ok");
}

TEST_CASE("json output is stable") {
  CHECK(analyze(fixtures::K3(), 2, true, {}).dump() == analyze(fixtures::K3(), 2, true, {}).dump());
}
