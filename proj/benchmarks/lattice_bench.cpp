#include <benchmark/benchmark.h>

#include <string>

#include "singlattice/bounds.hpp"
#include "singlattice/corpus.hpp"
#include "singlattice/graph_io.hpp"
#include "singlattice/lattice.hpp"

namespace {

using namespace singlattice;

// Chain of n curves of self-intersection -2 hanging off an elliptic -1 curve.
ResolutionGraph chain(int n) { return parse_graph(kyc_graph_text(1, n)).graph; }

// Star with a -k centre of genus 1 and k rational -2 legs of length 2.
ResolutionGraph star(int k) {
  std::string s = "graph STAR\nv C sq=-" + std::to_string(k) + " g=1\n";
  for (int i = 0; i < k; ++i) {
    const std::string a = "A" + std::to_string(i), b = "B" + std::to_string(i);
    s += "v " + a + " sq=-2\nv " + b + " sq=-2\ne C " + a + "\ne " + a + " " + b + "\n";
  }
  return parse_graph(s).graph;
}

void BM_FundamentalCycle(benchmark::State& state) {
  const auto g = star(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fundamental_cycle(g));
}
BENCHMARK(BM_FundamentalCycle)->Arg(3)->Arg(6)->Arg(12);

void BM_EnumerateB(benchmark::State& state) {
  const auto g = star(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_B(g).size());
}
BENCHMARK(BM_EnumerateB)->Arg(3)->Arg(4)->Arg(5);

void BM_MinimizeChi(benchmark::State& state) {
  const auto g = chain(static_cast<int>(state.range(0)));
  const Cycle a = Cycle::unit(g.size(), 0);
  for (auto _ : state) benchmark::DoNotOptimize(minimize_chi_shifted(g, g.all_vertices(), a, true).value);
}
BENCHMARK(BM_MinimizeChi)->Arg(4)->Arg(8)->Arg(12);

void BM_VanishingConditionExact(benchmark::State& state) {
  const auto g = chain(static_cast<int>(state.range(0)));
  const Cycle l = Cycle::zero(g.size()) - Cycle::reduced(g.size(), g.all_vertices());
  for (auto _ : state) benchmark::DoNotOptimize(vanishing_condition(g, l, ConditionMode::exact).margin);
}
BENCHMARK(BM_VanishingConditionExact)->Arg(3)->Arg(6)->Arg(10);

void BM_Lambda(benchmark::State& state) {
  const auto g = star(static_cast<int>(state.range(0)));
  const Cycle z = fundamental_cycle(g);
  for (auto _ : state) benchmark::DoNotOptimize(lambda_exact(g, z).value);
}
BENCHMARK(BM_Lambda)->Arg(3)->Arg(4);

void BM_Corpus(benchmark::State& state) {
  const auto jobs = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_corpus(jobs).size());
}
BENCHMARK(BM_Corpus)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
