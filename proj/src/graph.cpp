#include "hydra/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace hydra {

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (const auto& nbrs : adjacency) total += nbrs.size();
  return total / 2;
}

bool Graph::has_edge(int u, int v) const {
  const auto& nbrs = adjacency[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

EdgeListResult load_edge_list(std::istream& in) {
  EdgeListResult result;
  std::unordered_map<std::string, int> index_of;
  std::unordered_set<std::uint64_t> seen_edges;
  std::vector<std::pair<int, int>> edges;

  auto intern = [&](const std::string& label) {
    auto [it, inserted] =
        index_of.emplace(label, static_cast<int>(index_of.size()));
    if (inserted) result.graph.node_labels.push_back(label);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string u, v;
    if (!(tokens >> u)) continue;  // blank line
    if (u[0] == '#') continue;
    if (!(tokens >> v)) {
      std::ostringstream msg;
      msg << "edge list line " << line_no << ": expected 'u v', got '" << line
          << "'";
      throw std::runtime_error(msg.str());
    }
    const int ui = intern(u);
    const int vi = intern(v);
    if (ui == vi) {
      ++result.self_loops_dropped;
      continue;
    }
    const auto a = static_cast<std::uint64_t>(std::min(ui, vi));
    const auto b = static_cast<std::uint64_t>(std::max(ui, vi));
    if (!seen_edges.insert((a << 32) | b).second) {
      ++result.duplicate_edges_dropped;
      continue;
    }
    edges.emplace_back(ui, vi);
  }

  result.graph.adjacency.resize(result.graph.node_labels.size());
  for (const auto& [u, v] : edges) {
    result.graph.adjacency[u].push_back(v);
    result.graph.adjacency[v].push_back(u);
  }
  for (auto& nbrs : result.graph.adjacency)
    std::sort(nbrs.begin(), nbrs.end());
  return result;
}

EdgeListResult load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list: " + path);
  return load_edge_list(in);
}

std::vector<int> connected_components(const Graph& g, int* count) {
  const int n = g.node_count();
  std::vector<int> comp(n, -1);
  int next = 0;
  std::deque<int> queue;
  for (int start = 0; start < n; ++start) {
    if (comp[start] != -1) continue;
    comp[start] = next;
    queue.push_back(start);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : g.adjacency[u]) {
        if (comp[v] == -1) {
          comp[v] = next;
          queue.push_back(v);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return comp;
}

Graph largest_connected_component(const Graph& g) {
  if (g.node_count() == 0)
    throw std::invalid_argument("largest_connected_component: empty graph");
  int count = 0;
  const std::vector<int> comp = connected_components(g, &count);
  std::vector<int> size(count, 0);
  for (int c : comp) ++size[c];
  // Components are discovered in node order, so the first maximal one
  // contains the smallest node index.
  const int best =
      static_cast<int>(std::max_element(size.begin(), size.end()) -
                       size.begin());

  std::vector<int> new_index(g.node_count(), -1);
  Graph out;
  for (int i = 0; i < g.node_count(); ++i) {
    if (comp[i] == best) {
      new_index[i] = out.node_count();
      out.node_labels.push_back(g.node_labels[i]);
    }
  }
  out.adjacency.resize(out.node_count());
  for (int i = 0; i < g.node_count(); ++i) {
    if (comp[i] != best) continue;
    for (int v : g.adjacency[i]) out.adjacency[new_index[i]].push_back(new_index[v]);
  }
  return out;
}

DistanceMatrix shortest_path_matrix(const Graph& g) {
  const int n = g.node_count();
  int count = 0;
  connected_components(g, &count);
  if (count != 1) {
    std::ostringstream msg;
    msg << "shortest_path_matrix: graph has " << count
        << " connected components; extract the largest connected component "
           "first";
    throw std::runtime_error(msg.str());
  }

  Eigen::MatrixXd dist(n, n);
  std::vector<int> level(n);
  std::deque<int> queue;
  for (int source = 0; source < n; ++source) {
    std::fill(level.begin(), level.end(), -1);
    level[source] = 0;
    queue.push_back(source);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : g.adjacency[u]) {
        if (level[v] == -1) {
          level[v] = level[u] + 1;
          queue.push_back(v);
        }
      }
    }
    for (int j = 0; j < n; ++j) dist(source, j) = level[j];
  }
  return DistanceMatrix(std::move(dist));
}

}  // namespace hydra
