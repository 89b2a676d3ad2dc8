#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "singlattice/graph.hpp"

namespace singlattice::testing {

struct RandomGraphParams {
  std::size_t min_vertices = 1;
  std::size_t max_vertices = 6;
  /// Probability of an extra edge closing a cycle, per vertex.
  double cycle_edge_probability = 0.1;
  /// Probability that an edge has multiplicity 2.
  double double_edge_probability = 0.05;
};

inline ResolutionGraph random_candidate(std::mt19937_64& rng, const RandomGraphParams& p) {
  std::uniform_int_distribution<std::size_t> size(p.min_vertices, p.max_vertices);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t n = size(rng);

  std::vector<VertexData> vs;
  for (std::size_t i = 0; i < n; ++i) {
    VertexData v;
    v.id = "V" + std::to_string(i);
    const double r = unit(rng);
    v.self_intersection = r < 0.15 ? -1 : r < 0.65 ? -2 : r < 0.85 ? -3 : -4;
    const double s = unit(rng);
    v.genus = s < 0.75 ? 0 : s < 0.95 ? 1 : 2;
    vs.push_back(std::move(v));
  }

  std::vector<std::vector<bool>> adjacent(n, std::vector<bool>(n, false));
  std::vector<Edge> es;
  auto add = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    adjacent[a][b] = adjacent[b][a] = true;
    es.push_back({a, b, unit(rng) < p.double_edge_probability ? 2 : 1});
  };
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> parent(0, i - 1);
    add(parent(rng), i);
  }
  if (n >= 3) {
    std::uniform_int_distribution<std::size_t> any(0, n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (unit(rng) >= p.cycle_edge_probability) continue;
      const std::size_t a = any(rng), b = any(rng);
      if (a != b && !adjacent[a][b]) add(a, b);
    }
  }
  return ResolutionGraph(std::move(vs), std::move(es), "random");
}

/// Connected, negative definite graph drawn by rejection sampling.
inline ResolutionGraph random_graph(std::mt19937_64& rng, const RandomGraphParams& p = {}) {
  for (;;) {
    auto g = random_candidate(rng, p);
    if (validate_graph(g).ok) return g;
  }
}

/// Random cycle with coefficients in [lo, hi].
inline Cycle random_cycle(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> coef(lo, hi);
  std::vector<Integer> c(n);
  for (auto& x : c) x = coef(rng);
  return Cycle(std::move(c));
}

}  // namespace singlattice::testing
