#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "mixsep/error.hpp"
#include "mixsep/generators.hpp"
#include "mixsep/independence_model.hpp"
#include "mixsep/text_io.hpp"

using namespace mixsep;
using namespace mixsep::testing;

TEST(ParseGraph, Basic) {
  const Graph a = parse_graph("a -- b\nb -> c");
  EXPECT_EQ(a.size(), 3U);
  EXPECT_EQ(a.edges().size(), 2U);
  EXPECT_TRUE(a.has_edge(Edge::make(a.node("b"), a.node("c"), EdgeKind::Arrow)));
  EXPECT_FALSE(a.has_edge(Edge::make(a.node("c"), a.node("b"), EdgeKind::Arrow)));
}

TEST(ParseGraph, DuplicatesCollapse) {
  const Graph a = parse_graph("a -- b\na -- b");
  EXPECT_EQ(a.edges().size(), 1U);
  EXPECT_EQ(parse_graph("a -- b\nb -- a").edges().size(), 1U);
  EXPECT_EQ(parse_graph("a -- b\na <-> b\na -> b").edges().size(), 3U);
}

TEST(ParseGraph, CommentsBlanksAndIsolatedNodes) {
  const Graph a = parse_graph("# header\n\nnode z\n  x .. y   # trailing\n");
  EXPECT_EQ(a.labels(), (std::vector<std::string>{"z", "x", "y"}));
  EXPECT_EQ(a.edges().size(), 1U);
}

TEST(ParseGraph, Errors) {
  auto line_of = [](std::string_view text) {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  EXPECT_EQ(line_of("a => b"), 1U);
  EXPECT_EQ(line_of("a -- b\nb -- b"), 2U);
  EXPECT_EQ(line_of("a -- b\n\nc d"), 3U);
  EXPECT_EQ(line_of("a -- b c"), 1U);
  EXPECT_EQ(line_of("node"), 1U);
}

TEST(SerializeGraph, Format) {
  EXPECT_EQ(serialize_graph(parse_graph("c -> a\nb -- a\nnode d")),
            "node c\nnode a\nnode b\nnode d\nc -> a\na -- b\n");
  EXPECT_EQ(serialize_graph(Graph::with_size(2)), "node 0\nnode 1\n");
}

TEST(SerializeGraph, RoundTrip) {
  for (const Graph& a : {four_kind_graph(), non_maximal_cmg(), path_12345()}) EXPECT_EQ(parse_graph(serialize_graph(a)), a);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Graph a = random_graph({1 + seed % 7, ClassId::Any, 0.3, seed});
    const std::string text = serialize_graph(a);
    const Graph back = parse_graph(text);
    ASSERT_EQ(back, a) << text;
    EXPECT_EQ(serialize_graph(back), text);
  }
}

TEST(FormatWalk, Examples) {
  const Graph a = non_maximal_cmg();
  EXPECT_EQ(format_walk(a, walk(a, {"j", "k", "p", "l"})), "j -[<->]- k -[--]- p -[<-]- l");
  EXPECT_EQ(format_walk(a, walk(a, {"l", "p", "q"})), "l -[->]- p -[->]- q");
  EXPECT_EQ(format_walk(a, Walk::single(a.node("q"))), "q");
}

TEST(FormatSet, SortedAsStrings) {
  const std::vector<std::string> labels{"b", "10", "a", "9"};
  EXPECT_EQ(format_set(labels, NodeSet{0, 1, 2, 3}), "10,9,a,b");
  EXPECT_EQ(format_set(labels, {}), "-");
  EXPECT_EQ(parse_set(labels, "a,9"), (NodeSet{2, 3}));
  EXPECT_EQ(parse_set(labels, "-"), NodeSet{});
  EXPECT_THROW(parse_set(labels, "a,z"), Error);
  EXPECT_EQ(format_triple(labels, {NodeSet{0}, NodeSet{2}, {}}), "b | a | -");
}

TEST(Models, ParseAndSerialize) {
  const IndependenceModel m = parse_model("nodes a,b,c\na | b | c\n# comment\nb | a | c\n");
  EXPECT_EQ(m.labels(), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(serialize_model(m), "a | b | c\nb | a | c\n");
  EXPECT_EQ(model_lines(m), (std::vector<std::string>{"a | b | c", "b | a | c"}));
  EXPECT_EQ(parse_model(serialize_model(m)), m);
}

TEST(Models, GraphModelsRoundTrip) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const IndependenceModel m = global_model(random_graph({4, ClassId::Any, 0.3, seed}));
    std::string text = "nodes 0,1,2,3\n";
    text += serialize_model(m);
    const IndependenceModel back = parse_model(text);
    EXPECT_EQ(serialize_model(back), serialize_model(m));
  }
}

TEST(Models, Errors) {
  EXPECT_THROW(parse_model("a | a | -"), ParseError);
  EXPECT_THROW(parse_model("a | b"), ParseError);
  try {
    parse_model("a | b | -\na b c");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2U);
  }
}
