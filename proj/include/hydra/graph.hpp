#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "hydra/distance_matrix.hpp"

namespace hydra {

/// Unweighted undirected graph. Nodes carry external string labels in
/// first-appearance order; adjacency lists are sorted, loop-free and
/// duplicate-free.
struct Graph {
  std::vector<std::string> node_labels;
  std::vector<std::vector<int>> adjacency;

  int node_count() const { return static_cast<int>(node_labels.size()); }
  std::size_t edge_count() const;
  bool has_edge(int u, int v) const;
};

struct EdgeListResult {
  Graph graph;
  std::size_t duplicate_edges_dropped = 0;
  std::size_t self_loops_dropped = 0;
};

/// Parses a whitespace-separated edge list: one "u v" pair per line,
/// '#' lines are comments, columns beyond the second (e.g. weights) are
/// ignored. Duplicate edges and self-loops are dropped and counted.
EdgeListResult load_edge_list(std::istream& in);
EdgeListResult load_edge_list_file(const std::string& path);

/// Component id per node, ids assigned in order of discovery.
std::vector<int> connected_components(const Graph& g, int* count = nullptr);

/// Induced subgraph on the largest component; ties go to the component
/// containing the smallest node index. Labels are preserved.
Graph largest_connected_component(const Graph& g);

/// All-pairs shortest path lengths by breadth-first search from every
/// source. The graph must be connected.
DistanceMatrix shortest_path_matrix(const Graph& g);

}  // namespace hydra
