#include <gtest/gtest.h>

#include "printers.hpp"
#include "singlattice/corpus.hpp"
#include "singlattice/errors.hpp"
#include "singlattice/graph.hpp"
#include "singlattice/graph_io.hpp"

namespace {

using namespace singlattice;

ResolutionGraph graph_of(const std::string& text) { return parse_graph(text).graph; }

Cycle cyc(std::initializer_list<int> xs) {
  std::vector<Integer> c;
  for (int x : xs) c.emplace_back(x);
  return Cycle(std::move(c));
}

TEST(Graph, IntersectionFormAndCanonicalDegrees) {
  const auto g = graph_of(fig2_graph_text());
  EXPECT_EQ(g.form(0, 0), -2);
  EXPECT_EQ(g.form(0, 1), 1);
  EXPECT_EQ(g.form(1, 2), 0);
  // Adjunction: K.E = -E^2 + 2g - 2.
  EXPECT_EQ(g.canonical_degree(0), 2);
  EXPECT_EQ(g.canonical_degree(1), 0);
}

TEST(Graph, ChiOfHandComputedCycles) {
  const auto g = graph_of(fig2_graph_text());
  // chi(E_i) = 1 - g_i.
  EXPECT_EQ(euler_chi(g, Cycle::unit(4, 0)), 0);
  EXPECT_EQ(euler_chi(g, Cycle::unit(4, 1)), 1);
  // Z_f = 2F0 + F1 + F2 + F3: Z^2 = -8 - 6 + 12 = -2, K.Z = 4, chi = -(Z^2 + KZ)/2 = -1.
  EXPECT_EQ(intersection_number(g, cyc({2, 1, 1, 1}), cyc({2, 1, 1, 1})), -2);
  EXPECT_EQ(euler_chi(g, cyc({2, 1, 1, 1})), -1);
  EXPECT_EQ(pa_cycle(g, cyc({2, 1, 1, 1})), 2);
}

TEST(Graph, ValidationReportsMinorsAndConnectivity) {
  const auto ok = validate_graph(graph_of(fig2_graph_text()));
  EXPECT_TRUE(ok.ok);
  EXPECT_TRUE(ok.negative_definite);

  const auto bad = validate_graph(graph_of("graph B\nv A sq=1\n"));
  EXPECT_FALSE(bad.ok);
  EXPECT_FALSE(bad.negative_definite);
  EXPECT_FALSE(bad.diagnostic.empty());
  EXPECT_THROW(require_valid(graph_of("graph B\nv A sq=1\n")), ValidationError);

  const auto split = validate_graph(graph_of("graph S\nv A sq=-2\nv B sq=-2\n"));
  EXPECT_FALSE(split.ok);
  EXPECT_FALSE(split.connected);
  EXPECT_EQ(split.components.size(), 2u);

  // Two adjacent -1 curves have a degenerate form.
  EXPECT_FALSE(validate_graph(graph_of("graph C\nv A sq=-1\nv B sq=-1\ne A B\n")).ok);
}

TEST(Graph, AntiNefAndOrthogonalComponents) {
  const auto g = graph_of(kyc_graph_text(1, 3));
  const Cycle e = Cycle::reduced(3, g.all_vertices());
  EXPECT_TRUE(is_anti_nef(g, e));
  EXPECT_FALSE(is_anti_nef(g, Cycle::unit(3, 2)));
  const auto comps = orthogonal_components(g, e);
  for (const auto& c : comps) {
    for (VertexIndex v : c) EXPECT_EQ(pairing_with_vertex(g, e, v), 0);
  }
}

TEST(Graph, BlowUpOfVertexAndEdge) {
  const auto g = graph_of(fig2_graph_text());
  const auto at_vertex = blow_up(g, BlowUpSite{VertexIndex{1}});
  EXPECT_EQ(at_vertex.graph().size(), 5u);
  EXPECT_EQ(at_vertex.graph().vertex(1).self_intersection, -3);
  EXPECT_EQ(at_vertex.graph().vertex(4).self_intersection, -1);
  EXPECT_EQ(at_vertex.total_transform(Cycle::unit(4, 1)), cyc({0, 1, 0, 0, 1}));

  const auto at_edge = blow_up(g, BlowUpSite{EdgeSite{0, 1}});
  const auto& y = at_edge.graph();
  EXPECT_EQ(y.form(0, 1), 0);
  EXPECT_EQ(y.form(0, 4), 1);
  EXPECT_EQ(y.form(1, 4), 1);
  EXPECT_EQ(at_edge.total_transform(cyc({2, 1, 1, 1})), cyc({2, 1, 1, 1, 3}));

  // Total transforms are orthogonal to the new curve and preserve the form.
  const Cycle a = cyc({2, 1, 1, 1}), b = cyc({1, 0, 2, 1});
  for (const auto& bu : {at_vertex, at_edge}) {
    const Cycle ta = bu.total_transform(a), tb = bu.total_transform(b);
    EXPECT_EQ(pairing_with_vertex(bu.graph(), ta, bu.exceptional()), 0);
    EXPECT_EQ(intersection_number(bu.graph(), ta, tb), intersection_number(g, a, b));
    EXPECT_EQ(euler_chi(bu.graph(), ta), euler_chi(g, a));
  }
  EXPECT_EQ(all_blow_up_sites(g).size(), 7u);
}

TEST(Graph, NumericalPullbackIsOrthogonalToContracted) {
  const auto g = graph_of(kyc_graph_text(2, 3));
  const VertexSet contracted{1, 2};
  const auto p = numerical_pullback(g, contracted, Cycle::unit(3, 0));
  for (VertexIndex v : contracted) {
    Rational s = 0;
    for (VertexIndex j = 0; j < g.size(); ++j) s += p[j] * Rational(g.form(v, j));
    EXPECT_EQ(s, 0);
  }
  EXPECT_EQ(p[0], 1);
}

TEST(Graph, CycleArithmeticAndOrder) {
  const Cycle a = cyc({1, 2, 0}), b = cyc({1, 3, 1});
  EXPECT_TRUE(componentwise_le(a, b));
  EXPECT_FALSE(componentwise_le(b, a));
  EXPECT_EQ(b - a, cyc({0, 1, 1}));
  EXPECT_EQ(Integer(2) * a, cyc({2, 4, 0}));
  EXPECT_TRUE(CycleLexLess{}(a, b));
}

}  // namespace
