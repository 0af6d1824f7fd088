#pragma once

#include <Eigen/Core>

#include <string>
#include <utility>
#include <vector>

#include "hydra/graph.hpp"

namespace hydra {

/// Hyperbolic geodesic between two points of the Poincare disc: a
/// circular arc orthogonal to the unit circle, or a straight chord when
/// the points are collinear with the origin.
struct GeodesicArc {
  bool is_chord = false;
  Eigen::Vector2d a;
  Eigen::Vector2d b;
  Eigen::Vector2d center;  // valid iff !is_chord; |center|^2 = radius^2 + 1
  double radius = 0.0;
};

GeodesicArc geodesic_arc(const Eigen::Vector2d& a, const Eigen::Vector2d& b);

/// Per node, draws edges_per_node incident edges uniformly at random
/// (with repetition across nodes); the returned set is deduplicated.
std::vector<std::pair<int, int>> sample_incident_edges(const Graph& g,
                                                       int edges_per_node,
                                                       unsigned seed);

struct PlotOptions {
  unsigned seed = 1;
  int edges_per_node = 2;
  double node_radius = 0.012;
  int size_px = 640;
};

/// Renders the unit disc, geodesic edges and node dots as an SVG
/// document. Points are Cartesian disc coordinates (|z| < 1); edges
/// index into points.
std::string render_disc_svg(const std::vector<Eigen::Vector2d>& points,
                            const std::vector<std::pair<int, int>>& edges,
                            const PlotOptions& opts);

}  // namespace hydra
