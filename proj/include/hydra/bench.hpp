#pragma once

#include <functional>
#include <vector>

#include "hydra/distance_matrix.hpp"
#include "hydra/graph.hpp"

namespace hydra {

/// Seeded preferential-attachment random graph; connected by
/// construction, every node beyond the seed triangle attaches two edges.
Graph random_connected_graph(int n, unsigned seed);

struct BenchRow {
  int n = 0;
  double seconds = 0.0;
};

struct BenchResult {
  std::vector<BenchRow> rows;
  double alpha = 0.0;  // fitted exponent of t ~ n^alpha
};

/// Least-squares slope of log(t) against log(n), excluding the smallest
/// size (setup costs dominate there).
double fit_complexity_exponent(const std::vector<BenchRow>& rows);

/// Times embed_fn on the shortest-path distance matrix of a synthetic
/// graph per size (best of `repeats` runs) and fits the complexity
/// exponent.
BenchResult run_benchmark(
    const std::vector<int>& sizes,
    const std::function<void(const DistanceMatrix&)>& embed_fn, unsigned seed,
    int repeats = 3);

}  // namespace hydra
