#include "support.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <stdexcept>
#include <unistd.h>

#ifndef HYDRA_DATA_DIR
#define HYDRA_DATA_DIR "."
#endif
#ifndef HYDRA_CLI_PATH
#define HYDRA_CLI_PATH ""
#endif

namespace testsupport {

using Eigen::MatrixXd;
using Eigen::VectorXd;
using hydra::Curvature;
using hydra::DistanceMatrix;
using hydra::LorentzVector;

Eigen::MatrixXd sample_hyperboloid_spatial(int n, int d, double bound,
                                           double min_separation,
                                           unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> uni(-bound, bound);
  const Curvature unit_curvature(1.0);

  MatrixXd Y(n, d);
  std::vector<LorentzVector> accepted;
  for (int i = 0; i < n; ++i) {
    for (int attempt = 0;; ++attempt) {
      if (attempt > 20000)
        throw std::runtime_error("sample_hyperboloid_spatial: cannot satisfy "
                                 "separation constraint");
      VectorXd y(d);
      for (int j = 0; j < d; ++j) y[j] = uni(gen);
      if (y.norm() > bound) continue;
      VectorXd coords(d + 1);
      coords[0] = std::sqrt(1.0 + y.squaredNorm());
      coords.tail(d) = y;
      LorentzVector x(coords);
      bool ok = true;
      for (const auto& other : accepted) {
        if (hydra::hyperbolic_distance(x, other, unit_curvature) <
            min_separation) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      Y.row(i) = y;
      accepted.push_back(std::move(x));
      break;
    }
  }
  return Y;
}

std::vector<LorentzVector> lift_spatial(const MatrixXd& Y) {
  std::vector<LorentzVector> pts;
  pts.reserve(Y.rows());
  for (int i = 0; i < Y.rows(); ++i) {
    VectorXd coords(Y.cols() + 1);
    coords[0] = std::sqrt(1.0 + Y.row(i).squaredNorm());
    coords.tail(Y.cols()) = Y.row(i);
    pts.emplace_back(std::move(coords));
  }
  return pts;
}

DistanceMatrix pairwise_hyperbolic_distances(
    const std::vector<LorentzVector>& points, const Curvature& k) {
  const int n = static_cast<int>(points.size());
  MatrixXd D = MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double dist = hydra::hyperbolic_distance(points[i], points[j], k);
      D(i, j) = dist;
      D(j, i) = dist;
    }
  return DistanceMatrix(std::move(D));
}

MatrixXd lorentz_gram(const std::vector<LorentzVector>& points) {
  const int n = static_cast<int>(points.size());
  MatrixXd G(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      G(i, j) = hydra::lorentz_product(points[i], points[j]);
  return G;
}

DistanceMatrix random_distance_matrix(int n, unsigned seed,
                                      double max_distance) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> uni(1e-3, max_distance);
  MatrixXd D = MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double v = uni(gen);
      D(i, j) = v;
      D(j, i) = v;
    }
  return DistanceMatrix(std::move(D));
}

double naive_stress(const std::vector<LorentzVector>& points,
                    const DistanceMatrix& D, const Curvature& k) {
  const int n = static_cast<int>(points.size());
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      double g = hydra::lorentz_product(points[i], points[j]);
      if (g < 1.0) g = 1.0;
      const double h = std::acosh(g) / std::sqrt(k.kappa());
      const double r = D(i, j) - h;
      total += r * r;
    }
  }
  return std::sqrt(total);
}

namespace {

double stress_squared_oracle(const MatrixXd& Y, const DistanceMatrix& D,
                             const Curvature& k) {
  const double s = naive_stress(lift_spatial(Y), D, k);
  return s * s;
}

}  // namespace

MatrixXd finite_difference_gradient(const MatrixXd& Y, const DistanceMatrix& D,
                                    const Curvature& k, double h) {
  MatrixXd grad(Y.rows(), Y.cols());
  for (int i = 0; i < Y.rows(); ++i) {
    for (int j = 0; j < Y.cols(); ++j) {
      MatrixXd up = Y;
      MatrixXd down = Y;
      up(i, j) += h;
      down(i, j) -= h;
      grad(i, j) = (stress_squared_oracle(up, D, k) -
                    stress_squared_oracle(down, D, k)) /
                   (2.0 * h);
    }
  }
  return grad;
}

MatrixXd relaxation_all_pairs(const hydra::Graph& g) {
  const int n = g.node_count();
  const double inf = 1e18;
  MatrixXd dist = MatrixXd::Constant(n, n, inf);
  for (int i = 0; i < n; ++i) dist(i, i) = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j : g.adjacency[i]) dist(i, j) = 1.0;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        dist(i, j) = std::min(dist(i, j), dist(i, k) + dist(k, j));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (dist(i, j) >= inf) dist(i, j) = -1.0;
  return dist;
}

hydra::Graph random_connected_gnp(int n, double p, unsigned seed) {
  for (unsigned attempt = 0; attempt < 200; ++attempt) {
    std::mt19937 gen(seed + attempt * 7919u);
    std::bernoulli_distribution coin(p);
    hydra::Graph g;
    for (int i = 0; i < n; ++i) g.node_labels.push_back(std::to_string(i));
    g.adjacency.resize(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(gen)) {
          g.adjacency[i].push_back(j);
          g.adjacency[j].push_back(i);
        }
    // connectivity check independent of the library
    std::vector<int> stack = {0};
    std::vector<bool> seen(n, false);
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v : g.adjacency[u])
        if (!seen[v]) {
          seen[v] = true;
          ++reached;
          stack.push_back(v);
        }
    }
    if (reached == n) return g;
  }
  throw std::runtime_error("random_connected_gnp: no connected sample");
}

VectorXd full_spectrum_descending(const MatrixXd& A) {
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(A);
  return es.eigenvalues().reverse();
}

std::string karate_edge_list_path() {
  return std::string(HYDRA_DATA_DIR) + "/karate.edges";
}

std::string cli_binary_path() { return HYDRA_CLI_PATH; }

std::string unique_temp_dir(const std::string& tag) {
  static int counter = 0;
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() /
                 ("hydra_test_" + tag + "_" + std::to_string(::getpid()) +
                  "_" + std::to_string(counter++));
  fs::create_directories(dir);
  return dir.string();
}

std::vector<ParsedEdge> parse_svg_edges(const std::string& svg) {
  std::vector<ParsedEdge> edges;
  std::size_t pos = 0;
  while ((pos = svg.find("class=\"edge\"", pos)) != std::string::npos) {
    const std::size_t d_start = svg.find("d=\"", pos);
    const std::size_t d_end = svg.find('"', d_start + 3);
    std::string path = svg.substr(d_start + 3, d_end - d_start - 3);
    for (char& c : path)
      if (c == 'M' || c == 'L' || c == 'A') c = ' ';
    const bool chord = svg.substr(pos, d_end - pos).find(" L ") !=
                       std::string::npos;
    std::istringstream in(path);
    ParsedEdge e;
    e.chord = chord;
    if (chord) {
      in >> e.p1.x() >> e.p1.y() >> e.p2.x() >> e.p2.y();
    } else {
      double ry = 0.0, rot = 0.0;
      in >> e.p1.x() >> e.p1.y() >> e.radius >> ry >> rot >> e.large_arc >>
          e.sweep >> e.p2.x() >> e.p2.y();
    }
    if (!in) throw std::runtime_error("unparseable svg path: " + path);
    edges.push_back(e);
    pos = d_end;
  }
  return edges;
}

int count_svg_nodes(const std::string& svg) {
  int count = 0;
  std::size_t pos = 0;
  while ((pos = svg.find("class=\"node\"", pos)) != std::string::npos) {
    ++count;
    pos += 1;
  }
  return count;
}

Eigen::Vector2d svg_arc_center(const ParsedEdge& e) {
  const Eigen::Vector2d half = 0.5 * (e.p1 - e.p2);
  const Eigen::Vector2d mid = 0.5 * (e.p1 + e.p2);
  const double p2 = half.squaredNorm();
  const double coef =
      std::sqrt(std::max(0.0, (e.radius * e.radius - p2) / p2));
  const double s = (e.large_arc != e.sweep) ? 1.0 : -1.0;
  return mid + s * coef * Eigen::Vector2d(half.y(), -half.x());
}

}  // namespace testsupport
