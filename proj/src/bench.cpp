#include "hydra/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace hydra {

Graph random_connected_graph(int n, unsigned seed) {
  if (n < 4)
    throw std::invalid_argument("random_connected_graph: need n >= 4");
  std::mt19937 gen(seed);

  Graph g;
  g.node_labels.reserve(n);
  for (int i = 0; i < n; ++i) g.node_labels.push_back(std::to_string(i));
  g.adjacency.resize(n);

  auto add_edge = [&](int u, int v) {
    g.adjacency[u].push_back(v);
    g.adjacency[v].push_back(u);
  };

  // Seed triangle, then each new node attaches to two distinct targets
  // chosen proportionally to degree.
  std::vector<int> chances = {0, 1, 1, 2, 2, 0};
  add_edge(0, 1);
  add_edge(1, 2);
  add_edge(2, 0);
  for (int v = 3; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> pick(0, chances.size() - 1);
    const int t1 = chances[pick(gen)];
    int t2 = t1;
    while (t2 == t1) t2 = chances[pick(gen)];
    add_edge(v, t1);
    add_edge(v, t2);
    chances.push_back(t1);
    chances.push_back(t2);
    chances.push_back(v);
    chances.push_back(v);
  }
  for (auto& nbrs : g.adjacency) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

double fit_complexity_exponent(const std::vector<BenchRow>& rows) {
  int smallest = 0;
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i].n < rows[smallest].n) smallest = static_cast<int>(i);

  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(i) == smallest) continue;
    xs.push_back(std::log(static_cast<double>(rows[i].n)));
    ys.push_back(std::log(std::max(rows[i].seconds, 1e-9)));
  }
  if (xs.size() < 2)
    throw std::invalid_argument(
        "fit_complexity_exponent: need at least 2 sizes after excluding the "
        "smallest");

  const double xm = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
  const double ym = std::accumulate(ys.begin(), ys.end(), 0.0) / ys.size();
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - xm) * (xs[i] - xm);
    sxy += (xs[i] - xm) * (ys[i] - ym);
  }
  if (sxx == 0.0)
    throw std::invalid_argument("fit_complexity_exponent: sizes must differ");
  return sxy / sxx;
}

BenchResult run_benchmark(
    const std::vector<int>& sizes,
    const std::function<void(const DistanceMatrix&)>& embed_fn, unsigned seed,
    int repeats) {
  if (sizes.size() < 3)
    throw std::invalid_argument("run_benchmark: need at least 3 sizes");
  if (repeats < 1) throw std::invalid_argument("run_benchmark: repeats >= 1");

  BenchResult result;
  for (int n : sizes) {
    const Graph g = random_connected_graph(n, seed + static_cast<unsigned>(n));
    const DistanceMatrix D = shortest_path_matrix(g);
    double best = std::numeric_limits<double>::infinity();
    for (int rep = 0; rep < repeats; ++rep) {
      const auto t0 = std::chrono::steady_clock::now();
      embed_fn(D);
      const auto t1 = std::chrono::steady_clock::now();
      best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    result.rows.push_back(BenchRow{n, best});
  }
  result.alpha = fit_complexity_exponent(result.rows);
  return result;
}

}  // namespace hydra
