#pragma once

// Shared generators and independent oracles for the test suites. The
// oracles deliberately avoid the library's computation paths: stress is
// re-summed with a plain double loop, all-pairs distances come from
// repeated relaxation instead of BFS, gradients from central
// differences, and SVG arcs are re-derived from the serialized path
// parameters.

#include <Eigen/Dense>

#include <random>
#include <string>
#include <vector>

#include "hydra/distance_matrix.hpp"
#include "hydra/geometry.hpp"
#include "hydra/graph.hpp"

namespace testsupport {

/// Spatial parts of n points on the hyperboloid H_d, |y_i| <= bound,
/// resampled so no two points come closer than min_separation in
/// hyperbolic distance (keeps test conditioning deterministic).
Eigen::MatrixXd sample_hyperboloid_spatial(int n, int d, double bound,
                                           double min_separation,
                                           unsigned seed);

std::vector<hydra::LorentzVector> lift_spatial(const Eigen::MatrixXd& Y);

hydra::DistanceMatrix pairwise_hyperbolic_distances(
    const std::vector<hydra::LorentzVector>& points, const hydra::Curvature& k);

Eigen::MatrixXd lorentz_gram(const std::vector<hydra::LorentzVector>& points);

/// Symmetric, zero-diagonal, entries uniform in (0, max_distance].
hydra::DistanceMatrix random_distance_matrix(int n, unsigned seed,
                                             double max_distance = 3.0);

/// Plain double-loop stress oracle over ordered pairs.
double naive_stress(const std::vector<hydra::LorentzVector>& points,
                    const hydra::DistanceMatrix& D, const hydra::Curvature& k);

/// Central finite differences of stress^2 in the spatial parameters.
Eigen::MatrixXd finite_difference_gradient(const Eigen::MatrixXd& Y,
                                           const hydra::DistanceMatrix& D,
                                           const hydra::Curvature& k,
                                           double h = 1e-6);

/// Cubic all-pairs oracle by repeated relaxation; -1 for unreachable.
Eigen::MatrixXd relaxation_all_pairs(const hydra::Graph& g);

/// Erdos-Renyi-style random graph, resampled until connected.
hydra::Graph random_connected_gnp(int n, double p, unsigned seed);

/// Full descending spectrum of a symmetric matrix.
Eigen::VectorXd full_spectrum_descending(const Eigen::MatrixXd& A);

std::string karate_edge_list_path();
std::string cli_binary_path();
std::string unique_temp_dir(const std::string& tag);

/// One drawn edge parsed back out of the SVG text.
struct ParsedEdge {
  bool chord = false;
  Eigen::Vector2d p1;
  Eigen::Vector2d p2;
  double radius = 0.0;
  int large_arc = 0;
  int sweep = 0;
};

std::vector<ParsedEdge> parse_svg_edges(const std::string& svg);
int count_svg_nodes(const std::string& svg);

/// Center implied by the SVG arc parameters per the endpoint-to-center
/// conversion of the SVG spec (appendix F.6.5), in file coordinates.
Eigen::Vector2d svg_arc_center(const ParsedEdge& e);

}  // namespace testsupport
