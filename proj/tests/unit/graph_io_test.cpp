#include <gtest/gtest.h>

#include <random>

#include "printers.hpp"
#include "random_graph.hpp"
#include "singlattice/errors.hpp"
#include "singlattice/graph_io.hpp"

namespace {

using namespace singlattice;

TEST(GraphIo, ParsesVerticesEdgesAndCycles) {
  const auto doc = parse_graph(
      "# comment line\n"
      "graph G\n"
      "v A sq=-3 g=1   # trailing comment\n"
      "v B sq=-2\n"
      "e A B m=2\n"
      "cycle z B=2 A=1\n");
  const auto& g = doc.graph;
  EXPECT_EQ(g.name(), "G");
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g.vertex(0).genus, 1);
  EXPECT_EQ(g.form(0, 1), 2);
  const Cycle& z = doc.cycle("z");
  EXPECT_EQ(z[0], 1);
  EXPECT_EQ(z[1], 2);
  EXPECT_THROW(doc.cycle("w"), PreconditionError);
}

TEST(GraphIo, EdgesMayPrecedeVertexDeclarations) {
  const auto doc = parse_graph("graph G\ne A B\nv A sq=-2\nv B sq=-2\n");
  EXPECT_EQ(doc.graph.form(0, 1), 1);
}

TEST(GraphIo, ErrorsCarryLineAndColumn) {
  const auto expect_error = [](const std::string& text, std::size_t line, std::size_t column) {
    try {
      parse_graph(text);
      ADD_FAILURE() << "no error for:\n" << text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), line) << e.what();
      EXPECT_EQ(e.column(), column) << e.what();
    }
  };
  expect_error("graph G\nv A sq=-2\ne A Q\n", 3, 5);
  expect_error("graph G\nv A sq=x\n", 2, 8);
  expect_error("graph G\nv A sq=-2\nv A sq=-2\n", 3, 3);
  expect_error("graph G\nv A sq=-2\nbogus\n", 3, 1);
  expect_error("graph G\nv A sq=-2 g=-1\n", 2, 13);
  expect_error("graph G\nv A sq=-2\ne A A\n", 3, 5);
  expect_error("v A sq=-2\ngraph G\n", 2, 1);
  expect_error("graph G\nv A\n", 2, 1);
  expect_error("graph G\nv A sq=-2\ncycle z A2\n", 3, 9);
  expect_error("", 1, 1);
}

TEST(GraphIo, FormatParseRoundTrip) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const auto g = singlattice::testing::random_graph(rng);
    const std::string text = format_graph(g);
    const auto back = parse_graph(text).graph;
    EXPECT_EQ(format_graph(back), text);
    EXPECT_EQ(back.intersection_matrix(), g.intersection_matrix());
  }
}

TEST(GraphIo, CycleFormatting) {
  const auto doc = parse_graph("graph G\nv A sq=-2\nv B sq=-2\ne A B\ncycle z A=1\n");
  const auto& g = doc.graph;
  EXPECT_EQ(format_cycle(g, doc.cycle("z")), "A:1 B:0");
  EXPECT_EQ(format_cycle_statement(g, "z", doc.cycle("z")), "cycle z A=1 B=0");
  const auto again = parse_graph(format_graph(g) + format_cycle_statement(g, "z", doc.cycle("z")));
  EXPECT_EQ(again.cycle("z"), doc.cycle("z"));
}

TEST(GraphIo, VertexLists) {
  const auto g = parse_graph("graph G\nv A sq=-2\nv B sq=-2\nv C sq=-2\ne A B\ne B C\n").graph;
  EXPECT_EQ(parse_vertex_list(g, "C,A"), (VertexSet{0, 2}));
  EXPECT_EQ(format_vertex_set(g, {0, 2}), "A,C");
  EXPECT_THROW(parse_vertex_list(g, "A,A"), PreconditionError);
  EXPECT_THROW(parse_vertex_list(g, "A,,B"), PreconditionError);
  EXPECT_ANY_THROW(parse_vertex_list(g, "D"));
}

}  // namespace
