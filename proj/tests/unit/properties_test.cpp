#include <gtest/gtest.h>

#include <random>

#include "printers.hpp"
#include "random_graph.hpp"
#include "singlattice/bounds.hpp"
#include "singlattice/graph_io.hpp"
#include "singlattice/lattice.hpp"

namespace {

using namespace singlattice;
using singlattice::testing::random_cycle;
using singlattice::testing::random_graph;

constexpr int kInstances = 100;

TEST(Properties, ChiIsQuadraticWithPolarForm) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < kInstances; ++i) {
    const auto g = random_graph(rng);
    const Cycle a = random_cycle(rng, g.size(), -3, 3);
    const Cycle b = random_cycle(rng, g.size(), -3, 3);
    EXPECT_EQ(euler_chi(g, a + b), euler_chi(g, a) + euler_chi(g, b) - intersection_number(g, a, b));
    EXPECT_EQ(euler_chi(g, Cycle::zero(g.size())), 0);
    EXPECT_EQ(intersection_number(g, a, b), intersection_number(g, b, a));
  }
}

TEST(Properties, FormIsNegativeDefiniteOnSamples) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < kInstances; ++i) {
    const auto g = random_graph(rng);
    const Cycle a = random_cycle(rng, g.size(), -4, 4);
    bool zero = true;
    for (std::size_t v = 0; v < a.size(); ++v) zero = zero && a[v] == 0;
    if (!zero) EXPECT_LT(intersection_number(g, a, a), 0);
  }
}

TEST(Properties, BlowUpPreservesFormChiAndGenera) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < kInstances / 2; ++i) {
    const auto g = random_graph(rng);
    const auto gi = genus_invariants(g);
    const Cycle a = random_cycle(rng, g.size(), -2, 3);
    const Cycle b = random_cycle(rng, g.size(), -2, 3);
    for (const auto& site : all_blow_up_sites(g)) {
      const auto bu = blow_up(g, site);
      const auto& y = bu.graph();
      ASSERT_TRUE(validate_graph(y).ok);
      const Cycle ta = bu.total_transform(a), tb = bu.total_transform(b);
      EXPECT_EQ(intersection_number(y, ta, tb), intersection_number(g, a, b));
      EXPECT_EQ(euler_chi(y, ta), euler_chi(g, a));
      const auto up = genus_invariants(y);
      EXPECT_EQ(up.p_f, gi.p_f) << format_graph(g);
      EXPECT_EQ(up.p_a, gi.p_a) << format_graph(g);
    }
  }
}

TEST(Properties, ChainSetMembersBelowZfAndClosed) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < kInstances; ++i) {
    const auto g = random_graph(rng);
    const Cycle zf = fundamental_cycle(g);
    const ChainSet b = enumerate_B(g);
    EXPECT_TRUE(b.contains(zf));
    for (const auto& c : b.members()) {
      EXPECT_TRUE(componentwise_le(c, zf));
      for (VertexIndex j = 0; j < g.size(); ++j) {
        if (pairing_with_vertex(g, c, j) > 0) EXPECT_TRUE(b.contains(c + Cycle::unit(g.size(), j)));
      }
    }
  }
}

TEST(Properties, CccPartsResum) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < kInstances; ++i) {
    const auto g = random_graph(rng);
    Cycle d = random_cycle(rng, g.size(), 0, 3);
    d[0] += 1;
    const auto dec = ccc_decompose(g, d);
    Cycle sum = Cycle::zero(g.size());
    for (const auto& p : dec.parts) sum += p.multiplicity * p.cycle;
    EXPECT_EQ(sum, d);
    EXPECT_FALSE(check_ccc(g, d, dec.parts).has_value());
  }
}

TEST(Properties, ConditionModesAreMonotone) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < kInstances; ++i) {
    const auto g = random_graph(rng);
    const Cycle l = random_cycle(rng, g.size(), -3, 0);
    bool trivial = true;
    for (VertexIndex v = 0; v < g.size(); ++v) trivial = trivial && pairing_with_vertex(g, l, v) == 0;
    if (trivial) continue;
    const auto exact = vanishing_condition(g, l, ConditionMode::exact);
    const auto r1 = vanishing_condition(g, l, ConditionMode::remark1);
    const auto r2 = vanishing_condition(g, l, ConditionMode::remark2);
    EXPECT_TRUE(!r2.holds || r1.holds) << format_graph(g);
    EXPECT_TRUE(!r1.holds || exact.holds) << format_graph(g);
    EXPECT_NO_THROW(check_mode_consistency(g, l));
  }
}

TEST(Properties, BoundsDoNotExceedArithmeticGenusPlusOne) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < kInstances / 2; ++i) {
    const auto g = random_graph(rng);
    const auto gi = genus_invariants(g);
    const auto r = br_bound_report(g, gi.fundamental_cycle);
    EXPECT_LE(r.best, gi.p_a + 1);
    EXPECT_EQ(r.find("pa_plus_one")->value, gi.p_a + 1);
  }
}

}  // namespace
