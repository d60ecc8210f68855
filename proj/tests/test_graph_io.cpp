#include <doctest.h>

#include "fixtures.hpp"
#include "traag/graph_io.hpp"

using namespace traag;

namespace {

ParseError capture_parse_error(const std::string& text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error");
  return ParseError(ErrorCode::SyntaxError, 0, 0, "unreachable");
}

}  // namespace

TEST_CASE("parsing the basic grammar") {
  const MixedGraph g = parse_graph(
      "# a comment line\n"
      "\n"
      "vertex z\n"
      "edge a b\n"
      "arrow b c\n"
      "  # indented comment\n"
      "edge a   c\n");
  CHECK(g.vertices() == std::vector<VertexId>{"a", "b", "c", "z"});
  CHECK(g.has_undirected("a", "b"));
  CHECK(g.has_undirected("a", "c"));
  CHECK(g.has_directed("b", "c"));
  CHECK(g.is_isolated("z"));
}

TEST_CASE("parsing edge cases") {
  CHECK(parse_graph("") == MixedGraph());
  CHECK(parse_graph("# nothing\n\n") == MixedGraph());
  CHECK(parse_graph("vertex a'\n").has_vertex("a'"));
  CHECK(parse_graph("vertex a_1\n").has_vertex("a_1"));
  // Windows line endings are tolerated.
  CHECK(parse_graph("vertex a\r\nedge a b\r\n").has_undirected("a", "b"));
  // A final line without a newline still counts.
  CHECK(parse_graph("edge a b").has_undirected("a", "b"));
}

TEST_CASE("parse errors carry positions") {
  SUBCASE("duplicate explicit vertex") {
    const ParseError e = capture_parse_error("vertex a\nvertex a\n");
    CHECK(e.code() == ErrorCode::DuplicateVertex);
    CHECK(e.line() == 2);
    CHECK(e.column() == 8);
  }
  SUBCASE("explicit declaration after implicit use") {
    const ParseError e = capture_parse_error("edge a b\nvertex a\n");
    CHECK(e.code() == ErrorCode::DuplicateVertex);
    CHECK(e.line() == 2);
  }
  SUBCASE("self loop") {
    const ParseError e = capture_parse_error("edge a a\n");
    CHECK(e.code() == ErrorCode::SelfLoop);
    CHECK(e.line() == 1);
  }
  SUBCASE("conflicting edge kinds on one pair") {
    const ParseError e = capture_parse_error("edge a b\narrow a b\n");
    CHECK(e.code() == ErrorCode::ConflictingEdge);
    CHECK(e.line() == 2);
  }
  SUBCASE("the same undirected edge twice, reversed") {
    const ParseError e = capture_parse_error("edge a b\nedge b a\n");
    CHECK(e.code() == ErrorCode::ConflictingEdge);
  }
  SUBCASE("antiparallel arrows") {
    const ParseError e = capture_parse_error("arrow a b\narrow b a\n");
    CHECK(e.code() == ErrorCode::ConflictingEdge);
  }
  SUBCASE("arity") {
    CHECK(capture_parse_error("edge a\n").code() == ErrorCode::SyntaxError);
    CHECK(capture_parse_error("vertex a b\n").code() == ErrorCode::SyntaxError);
    CHECK(capture_parse_error("arrow a b c\n").code() == ErrorCode::SyntaxError);
  }
  SUBCASE("unknown keyword") {
    const ParseError e = capture_parse_error("node a\n");
    CHECK(e.code() == ErrorCode::SyntaxError);
    CHECK(e.column() == 1);
  }
  SUBCASE("bad vertex name") {
    CHECK(capture_parse_error("vertex a$\n").code() == ErrorCode::SyntaxError);
  }
  SUBCASE("the message embeds the position") {
    const ParseError e = capture_parse_error("vertex a\nvertex a\n");
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("serialization round trips bit for bit") {
  const std::vector<MixedGraph> corpus{
      fixtures::p2(),      fixtures::xi2(),     fixtures::p4(),
      fixtures::c4(),      fixtures::gamma1(),  fixtures::gamma2(),
      fixtures::gamma3(),  fixtures::gamma3_twisted(),
      fixtures::gamma4(),  fixtures::lambda_s(), fixtures::lambda1(),
      fixtures::lambda2(), fixtures::upsilon(),
      fixtures::edgeless({"only"})};
  for (const auto& g : corpus) {
    const std::string text = serialize_graph(g);
    CHECK(parse_graph(text) == g);
    CHECK(serialize_graph(parse_graph(text)) == text);
  }
  CHECK(serialize_graph(fixtures::xi2()) == "vertex a\nvertex b\narrow a b\n");
}

TEST_CASE("missing files are reported") {
  CHECK_THROWS_AS(parse_graph_file("/nonexistent/graph.txt"), std::runtime_error);
}

TEST_CASE("word syntax") {
  CHECK(parse_word("").empty());
  CHECK(parse_word("   \t ").empty());
  const Word w{{"a", 1}, {"b", 2}, {"c'", -1}};
  CHECK(parse_word("a b^2 c'^-1") == w);
  CHECK(format_word(w) == "a b^2 c'^-1");
  CHECK(format_word(parse_word("a b^2 c'^-1")) == "a b^2 c'^-1");
  CHECK(format_word(Word{}) == "");
  CHECK(format_word(Word{{"a", 0}, {"b", 1}}) == "b");  // dead letters vanish

  CHECK_THROWS_AS(parse_word("a^0"), GraphError);
  CHECK_THROWS_AS(parse_word("a^"), GraphError);
  CHECK_THROWS_AS(parse_word("a^x"), GraphError);
  CHECK_THROWS_AS(parse_word("a^2x"), GraphError);
  CHECK_THROWS_AS(parse_word("^2"), GraphError);
  CHECK_THROWS_AS(parse_word("a$"), GraphError);
}

TEST_CASE("generator maps") {
  const auto images = parse_generator_map("a=b^2;b=a");
  CHECK(images.at("a") == Word{{"b", 2}});
  CHECK(images.at("b") == Word{{"a", 1}});

  SUBCASE("spaces and empty segments are tolerated") {
    const auto padded = parse_generator_map(" a = b c ; ; b=a ;");
    const Word bc{{"b", 1}, {"c", 1}};
    CHECK(padded.at("a") == bc);
    CHECK(padded.at("b") == Word{{"a", 1}});
  }
  SUBCASE("an empty right side is the identity") {
    const auto killed = parse_generator_map("a=;b=b");
    CHECK(killed.at("a").empty());
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(parse_generator_map("a"), GraphError);
    CHECK_THROWS_AS(parse_generator_map("a=b;a=c"), GraphError);
    CHECK_THROWS_AS(parse_generator_map("=b"), GraphError);
  }
}
