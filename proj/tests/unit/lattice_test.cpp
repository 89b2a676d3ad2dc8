#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "printers.hpp"
#include "random_graph.hpp"
#include "singlattice/corpus.hpp"
#include "singlattice/errors.hpp"
#include "singlattice/graph_io.hpp"
#include "singlattice/lattice.hpp"
#include "singlattice/oracle.hpp"

namespace {

using namespace singlattice;

ResolutionGraph graph_of(const std::string& text) { return parse_graph(text).graph; }

Cycle cyc(std::initializer_list<int> xs) {
  std::vector<Integer> c;
  for (int x : xs) c.emplace_back(x);
  return Cycle(std::move(c));
}

std::vector<std::pair<Cycle, Integer>> as_multiset(const std::vector<CccPart>& parts) {
  std::vector<std::pair<Cycle, Integer>> out;
  for (const auto& p : parts) out.emplace_back(p.cycle, p.multiplicity);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return CycleLexLess{}(a.first, b.first) || (a.first == b.first && a.second < b.second);
  });
  return out;
}

// E8 with the branch vertex V8 attached to V5.
const char* kE8 =
    "graph E8\n"
    "v V1 sq=-2\nv V2 sq=-2\nv V3 sq=-2\nv V4 sq=-2\n"
    "v V5 sq=-2\nv V6 sq=-2\nv V7 sq=-2\nv V8 sq=-2\n"
    "e V1 V2\ne V2 V3\ne V3 V4\ne V4 V5\ne V5 V6\ne V6 V7\ne V5 V8\n";

TEST(FundamentalCycle, DynkinHighestRoots) {
  const auto e8 = graph_of(kE8);
  EXPECT_EQ(fundamental_cycle(e8), cyc({2, 3, 4, 5, 6, 4, 2, 3}));
  EXPECT_EQ(genus_invariants(e8).p_a, 0);

  const auto d4 = graph_of("graph D4\nv C sq=-2\nv A sq=-2\nv B sq=-2\nv D sq=-2\ne C A\ne C B\ne C D\n");
  EXPECT_EQ(fundamental_cycle(d4), cyc({2, 1, 1, 1}));

  const auto a3 = graph_of("graph A3\nv A sq=-2\nv B sq=-2\nv C sq=-2\ne A B\ne B C\n");
  EXPECT_EQ(fundamental_cycle(a3), cyc({1, 1, 1}));
}

TEST(FundamentalCycle, SubsetsAndErrors) {
  const auto e8 = graph_of(kE8);
  // The A4 sub-chain V1..V4 has reduced fundamental cycle.
  EXPECT_EQ(fundamental_cycle(e8, {0, 1, 2, 3}), cyc({1, 1, 1, 1, 0, 0, 0, 0}));
  EXPECT_THROW(fundamental_cycle(e8, {}), PreconditionError);
  EXPECT_THROW(fundamental_cycle(e8, {0, 2}), PreconditionError);
}

TEST(FundamentalCycle, MatchesBoxOracleAndIgnoresIncrementOrder) {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 150; ++i) {
    const auto g = singlattice::testing::random_graph(rng);
    const Cycle zf = fundamental_cycle(g);
    EXPECT_TRUE(is_anti_nef(g, zf));
    const auto last = fundamental_cycle(g, g.all_vertices(), [](const std::vector<VertexIndex>& e) {
      return e.back();
    });
    std::mt19937_64 pick(i);
    const auto random = fundamental_cycle(g, g.all_vertices(), [&](const std::vector<VertexIndex>& e) {
      return e[std::uniform_int_distribution<std::size_t>(0, e.size() - 1)(pick)];
    });
    EXPECT_EQ(last, zf);
    EXPECT_EQ(random, zf);

    Integer top = 0;
    for (std::size_t v = 0; v < zf.size(); ++v) top = std::max(top, zf[v]);
    const auto n = static_cast<std::int64_t>(top);
    std::vector<std::int64_t> hi(g.size(), n);
    if (oracle::box_points(hi) > 200'000) continue;
    const auto brute = oracle::fundamental_cycle_in_box(g, g.all_vertices(), n);
    ASSERT_TRUE(brute.has_value()) << format_graph(g);
    EXPECT_EQ(*brute, zf) << format_graph(g);
  }
}

TEST(ComputationSequence, StepsPairPositivelyAndEndAtZf) {
  const auto e8 = graph_of(kE8);
  for (VertexIndex seed = 0; seed < e8.size(); ++seed) {
    const auto seq = computation_sequence(e8, seed);
    ASSERT_FALSE(seq.empty());
    EXPECT_EQ(seq.front(), Cycle::unit(8, seed));
    EXPECT_EQ(seq.back(), fundamental_cycle(e8));
    for (std::size_t k = 1; k < seq.size(); ++k) {
      const Cycle step = seq[k] - seq[k - 1];
      VertexIndex j = 0;
      while (step[j] == 0) ++j;
      EXPECT_EQ(step, Cycle::unit(8, j));
      EXPECT_GT(pairing_with_vertex(e8, seq[k - 1], j), 0);
    }
  }
}

TEST(ChainSet, MatchesBruteForceBelowZf) {
  std::mt19937_64 rng(202);
  for (int i = 0; i < 120; ++i) {
    const auto g = singlattice::testing::random_graph(rng);
    const Cycle zf = fundamental_cycle(g);
    std::vector<std::int64_t> hi = oracle::to_vec(zf);
    if (oracle::box_points(hi) > 100'000) continue;
    const ChainSet b = enumerate_B(g);
    auto brute = oracle::chain_connected_below(g, zf);
    std::sort(brute.begin(), brute.end(), CycleLexLess{});
    auto fast = b.members();
    std::sort(fast.begin(), fast.end(), CycleLexLess{});
    EXPECT_EQ(fast, brute) << format_graph(g);
    for (const auto& c : fast) EXPECT_TRUE(is_chain_connected(g, c));
  }
}

TEST(ChainConnected, KnownCases) {
  const auto a3 = graph_of("graph A3\nv A sq=-2\nv B sq=-2\nv C sq=-2\ne A B\ne B C\n");
  EXPECT_TRUE(is_chain_connected(a3, cyc({1, 1, 1})));
  EXPECT_FALSE(is_chain_connected(a3, cyc({1, 0, 1})));
  EXPECT_FALSE(is_chain_connected(a3, cyc({2, 1, 1})));
  EXPECT_EQ(chain_connected_component(a3, cyc({2, 1, 1})), cyc({1, 1, 1}));
  EXPECT_THROW(is_chain_connected(a3, Cycle::zero(3)), PreconditionError);
}

TEST(Ccc, DecompositionsSatisfyKonnoAndAreUnique) {
  std::mt19937_64 rng(303);
  int checked = 0;
  for (int i = 0; i < 120; ++i) {
    const auto g = singlattice::testing::random_graph(rng);
    const Cycle d = singlattice::testing::random_cycle(rng, g.size(), 0, 2);
    bool positive = false;
    for (std::size_t v = 0; v < d.size(); ++v) positive = positive || d[v] > 0;
    if (!positive) continue;
    const auto dec = ccc_decompose(g, d);
    EXPECT_FALSE(check_ccc(g, d, dec.parts).has_value()) << *check_ccc(g, d, dec.parts);
    EXPECT_FALSE(oracle::konno_violation(g, d, dec.parts).has_value());
    const auto all = oracle::all_ccc_decompositions(g, d, 200'000);
    if (!all) continue;
    // Parts with disjoint supports may be listed in either order.
    ASSERT_EQ(all->size(), 1u) << format_graph(g) << format_cycle(g, d);
    EXPECT_EQ(as_multiset(all->front()), as_multiset(dec.parts)) << format_graph(g) << format_cycle(g, d);
    ++checked;
  }
  EXPECT_GT(checked, 50);
}

TEST(Ccc, ChainOfMinusTwoCurves) {
  const auto a3 = graph_of("graph A3\nv A sq=-2\nv B sq=-2\nv C sq=-2\ne A B\ne B C\n");
  // 2A + B + C: E is anti-nef on A but not on itself, so it peels off once.
  const auto dec = ccc_decompose(a3, cyc({2, 1, 1}));
  ASSERT_EQ(dec.parts.size(), 2u);
  EXPECT_EQ(dec.parts[0].cycle, cyc({1, 1, 1}));
  EXPECT_EQ(dec.parts[0].multiplicity, 1);
  EXPECT_EQ(dec.parts[1].cycle, cyc({1, 0, 0}));
  EXPECT_EQ(dec.parts[1].multiplicity, 1);
}

TEST(MinimalModel, FigureGraphsAndOracle) {
  const auto fig2 = graph_of(fig2_graph_text());
  EXPECT_EQ(minimal_model(fig2, fundamental_cycle(fig2)), cyc({2, 1, 1, 1}));
  const auto kyc = graph_of(kyc_graph_text(1, 4));
  EXPECT_EQ(minimal_model(kyc, fundamental_cycle(kyc)), cyc({1, 0, 0, 0}));

  std::mt19937_64 rng(404);
  for (int i = 0; i < 150; ++i) {
    const auto g = singlattice::testing::random_graph(rng);
    const Cycle zf = fundamental_cycle(g);
    if (euler_chi(g, zf) > 0) {
      EXPECT_THROW(minimal_model(g, zf), PreconditionError);
      continue;
    }
    const Cycle mc = minimal_model(g, zf);
    EXPECT_EQ(euler_chi(g, mc), euler_chi(g, zf));
    if (oracle::box_points(oracle::to_vec(zf)) > 200'000) continue;
    const auto brute = oracle::minimal_model(g, zf);
    ASSERT_TRUE(brute.has_value());
    EXPECT_EQ(*brute, mc) << format_graph(g);
  }
}

TEST(MinimizeChi, MatchesBoxOracle) {
  std::mt19937_64 rng(505);
  int compared = 0;
  for (int i = 0; i < 200; ++i) {
    const auto g = singlattice::testing::random_graph(rng);
    const Cycle a = singlattice::testing::random_cycle(rng, g.size(), -2, 2);
    const bool allow_zero = i % 2 == 0;
    const auto r = minimize_chi_shifted(g, g.all_vertices(), a, allow_zero);
    EXPECT_EQ(euler_chi(g, r.witness) - intersection_number(g, a, r.witness), r.value);
    std::vector<std::int64_t> hi;
    for (const auto& b : r.search_bound) hi.push_back(static_cast<std::int64_t>(b));
    if (oracle::box_points(hi) > 300'000) continue;
    const auto brute = oracle::minimize_chi_in_box(g, g.all_vertices(), a, allow_zero, hi);
    ASSERT_TRUE(brute.has_value());
    EXPECT_EQ(brute->value, r.value) << format_graph(g);
    EXPECT_EQ(brute->witness, r.witness) << format_graph(g);
    ++compared;
  }
  EXPECT_GT(compared, 100);
}

TEST(MinimizeChi, RationalAndEllipticValues) {
  const auto e8 = graph_of(kE8);
  // Rational: chi >= 1 on positive cycles.
  EXPECT_EQ(minimize_chi_shifted(e8, e8.all_vertices(), Cycle::zero(8), false).value, 1);
  EXPECT_EQ(minimize_chi_shifted(e8, e8.all_vertices(), Cycle::zero(8), true).value, 0);
  const auto fig2 = graph_of(fig2_graph_text());
  EXPECT_EQ(minimize_chi_shifted(fig2, fig2.all_vertices(), Cycle::zero(4), false).value, -1);
}

TEST(GenusInvariants, CorpusFormulas) {
  for (int p = 1; p <= 3; ++p) {
    for (int m = 1; m <= 3; ++m) {
      const auto gi = genus_invariants(graph_of(kyc_graph_text(p, m)));
      EXPECT_EQ(gi.p_f, p);
      EXPECT_EQ(gi.p_a, m * p * (p - 1) / 2 + 1);
      EXPECT_EQ(pa_cycle(graph_of(kyc_graph_text(p, m)), gi.pa_witness), gi.p_a);
    }
  }
  const auto a1 = genus_invariants(graph_of(a1_graph_text()));
  EXPECT_EQ(a1.p_a, 0);
}

}  // namespace
