#pragma once

#include <string>
#include <vector>

#include "hydra/distance_matrix.hpp"
#include "hydra/embed.hpp"

namespace hydra {

/// Writes content to path through a temporary file in the same
/// directory followed by a rename, so readers never observe partial
/// output.
void atomic_write_file(const std::string& path, const std::string& content);

/// Reads a headerless n x n comma-separated distance matrix.
DistanceMatrix load_distance_csv(const std::string& path);

/// Embedding coordinates in radial/directional form, decoupled from the
/// BallPoint invariants so that Euclidean (r >= 1) configurations can
/// use the same container.
struct CoordinateTable {
  std::vector<std::string> labels;
  std::vector<double> radii;
  Eigen::MatrixXd directions;   // n x d unit rows
  std::vector<double> angles;   // populated iff dim == 2
  int dim = 0;

  int n() const { return static_cast<int>(labels.size()); }

  /// Cartesian coordinates r_i * u_i.
  Eigen::MatrixXd cartesian() const;

  /// Converts to ball points; fails if any radius is >= 1. For d == 2
  /// directions are rebuilt from the stored angles so that a table and
  /// its serialized round trip produce bit-identical points.
  std::vector<BallPoint> to_ball_points() const;

  static CoordinateTable from_embedding(const std::vector<std::string>& labels,
                                        const PoincareEmbedding& E);
  /// Euclidean points in polar form: r = |x|, u = x / |x|.
  static CoordinateTable from_cartesian(const std::vector<std::string>& labels,
                                        const Eigen::MatrixXd& coords);
};

/// Serializes as CSV with header "node,r,theta" for d = 2 and
/// "node,r,u1,...,ud" otherwise; values are written with enough digits
/// to round-trip doubles exactly.
std::string format_coordinate_csv(const CoordinateTable& table);
void write_coordinate_csv(const std::string& path,
                          const CoordinateTable& table);
CoordinateTable read_coordinate_csv(const std::string& path);

/// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

}  // namespace hydra
