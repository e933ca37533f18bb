#include <doctest.h>

#include <algorithm>
#include <string>

#include "tww/generators.hpp"
#include "tww/io.hpp"
#include "tww/permgraph.hpp"
#include "tww/render.hpp"

using namespace tww;

namespace {

int parse_error_line(const std::string& text) {
  try {
    parse_edge_list(text);
  } catch (const ParseError& e) {
    return e.line;
  }
  return -1;
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t k = 0;
  for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++k;
  return k;
}

}  // namespace

TEST_CASE("edge list parsing") {
  Graph g = parse_edge_list("# path\n4 3\n0 1\n1 2   # middle\n\n2 3\n");
  CHECK(g.order() == 4);
  CHECK(g.size() == 3);
  CHECK(g.adjacent(1, 2));
  CHECK(write_edge_list(g) == "4 3\n0 1\n1 2\n2 3\n");
  CHECK(write_edge_list(parse_edge_list(write_edge_list(g))) == write_edge_list(g));
  CHECK(parse_edge_list("3 0\n").size() == 0);
}

TEST_CASE("edge list errors carry line numbers") {
  CHECK(parse_error_line("") == 0);
  CHECK(parse_error_line("x y\n") == 1);
  CHECK(parse_error_line("3 2\n0 1\n") == 1);
  CHECK(parse_error_line("3 2\n0 1\n1 1\n") == 3);
  CHECK(parse_error_line("3 2\n0 1\n# c\n1 0\n") == 4);
  CHECK(parse_error_line("3 1\n\n0 7\n") == 3);
  CHECK(parse_error_line("3 1\n0 a\n") == 2);
  CHECK(parse_error_line("3 1\n0 1 2\n") == 2);
  CHECK(parse_error_line("-1 0\n") == 1);
  try {
    parse_edge_list("3 2\n0 1\n1 0\n");
    FAIL("accepted a duplicate");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()) == "line 3: duplicate edge 0 1 (first on line 2)");
  }
}

TEST_CASE("graph6 known strings") {
  CHECK(write_graph6(Graph(2, std::vector<Edge>{{0, 1}})) == "A_");
  Graph p3(3, std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(write_graph6(p3) == "Bg");
  CHECK(parse_graph6("Bg").edges() == p3.edges());
  CHECK(parse_graph6("?").order() == 0);
  CHECK(parse_graph6(">>graph6<<A_\n").size() == 1);
  CHECK_THROWS_AS(parse_graph6("A"), ParseError);
  CHECK_THROWS_AS(parse_graph6("A__"), ParseError);
  CHECK_THROWS_AS(parse_graph6("A\x7f"), ParseError);
}

TEST_CASE("graph6 round trip") {
  Rng rng(3);
  for (int n : {0, 1, 2, 5, 6, 7, 12, 62, 63, 64, 130}) {
    Graph g = random_graph(n, 0.4, rng);
    std::string s = write_graph6(g);
    Graph h = parse_graph6(s);
    CHECK(h.order() == n);
    CHECK(h.edges() == g.edges());
    CHECK(write_graph6(h) == s);
  }
  // Oversized length prefixes are still valid.
  CHECK(parse_graph6("~??C?").order() == 4);
  CHECK(parse_graph6("~~?????A_").size() == 1);
}

TEST_CASE("format detection and corpus") {
  CHECK(parse_graph("Bo").size() == 2);
  CHECK(parse_graph("2 1\n0 1\n").size() == 1);
  CHECK(parse_graph("A_\n", GraphFormat::detect, "x.g6").order() == 2);
  CHECK_THROWS_AS(parse_graph("A_\nA_\n", GraphFormat::graph6), ParseError);
  auto corpus = parse_graph6_corpus("A_\n\nBo\nBw\n");
  REQUIRE(corpus.size() == 3);
  CHECK(corpus[2].size() == 3);
  try {
    parse_graph6_corpus("A_\nB\n");
    FAIL("accepted truncated graph6");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("sequence JSON round trip") {
  ContractionSequence seq{4, {{0, 1}, {2, 4}, {3, 5}}, 1};
  std::string text = write_sequence_json(seq);
  CHECK(text == "{\"version\":1,\"n\":4,\"width\":1,\"steps\":[[0,1],[2,4],[3,5]]}\n");
  ContractionSequence back = parse_sequence_json(text);
  CHECK(back.n0 == 4);
  CHECK(back.claimed_width == 1);
  CHECK(back.steps == seq.steps);
  CHECK(write_sequence_json(back) == text);
  CHECK(write_sequence_json(parse_sequence_json(" { \"steps\":[], \"width\":0, \"n\":1, \"version\":1 } ")) ==
        "{\"version\":1,\"n\":1,\"width\":0,\"steps\":[]}\n");
}

TEST_CASE("sequence JSON schema errors") {
  for (const char* bad : {
           "",
           "[]",
           "{\"version\":2,\"n\":1,\"width\":0,\"steps\":[]}",
           "{\"n\":1,\"width\":0,\"steps\":[]}",
           "{\"version\":1,\"n\":-1,\"width\":0,\"steps\":[]}",
           "{\"version\":1,\"n\":1.5,\"width\":0,\"steps\":[]}",
           "{\"version\":1,\"n\":2,\"width\":0,\"steps\":[[0]]}",
           "{\"version\":1,\"n\":2,\"width\":0,\"steps\":[[0,\"1\"]]}",
           "{\"version\":1,\"n\":2,\"width\":0,\"steps\":{}}",
           "{\"version\":1,\"n\":2,\"width\":0,\"steps\":[],\"extra\":0}",
       }) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_sequence_json(bad), ParseError);
  }
}

TEST_CASE("rendering") {
  Graph p4(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
  auto r = compute_realiser(p4);
  REQUIRE(r);
  std::string svg = render_svg(*r);
  CHECK(svg.starts_with("<svg"));
  CHECK(count(svg, "class=\"segment\"") == 4);
  CHECK(count_crossings(*r) == 3);
  CHECK(render_svg(*r) == svg);

  auto e3 = compute_realiser(Graph(3));
  REQUIRE(e3);
  CHECK(count_crossings(*e3) == 0);
  CHECK(count(render_svg(*e3), "class=\"segment\"") == 3);

  std::string text = render_text(*r);
  auto nl = text.find('\n');
  REQUIRE(nl != std::string::npos);
  CHECK(text.starts_with("sigma:"));
  CHECK(text.substr(nl + 1).starts_with("tau:  "));
  CHECK(text.substr(nl + 1).find('\n') == nl);
}
