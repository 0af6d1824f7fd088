#pragma once

#include <string>
#include <vector>

#include "hydra/distance_matrix.hpp"
#include "hydra/eigs.hpp"
#include "hydra/geometry.hpp"

namespace hydra {

/// Entrywise cosh(sqrt(kappa) * d_ij): symmetric with unit diagonal and
/// all entries >= 1.
class CoshGramMatrix {
 public:
  explicit CoshGramMatrix(Eigen::MatrixXd entries)
      : entries_(std::move(entries)) {}
  int n() const { return static_cast<int>(entries_.rows()); }
  const Eigen::MatrixXd& entries() const { return entries_; }

 private:
  Eigen::MatrixXd entries_;
};

/// n x (d+1) coordinate matrix whose rows live in positive Lorentz
/// space; the strain-optimal configuration produced by the embedding.
class HyperboloidConfig {
 public:
  HyperboloidConfig(Eigen::MatrixXd coords, Curvature kappa);

  int n() const { return static_cast<int>(coords_.rows()); }
  int dim() const { return static_cast<int>(coords_.cols()) - 1; }
  const Eigen::MatrixXd& coords() const { return coords_; }
  const Curvature& kappa() const { return kappa_; }
  LorentzVector row(int i) const { return LorentzVector(coords_.row(i)); }

 private:
  Eigen::MatrixXd coords_;
  Curvature kappa_;
};

/// Radial/directional coordinates in the Poincare ball, one point per
/// embedded object.
struct PoincareEmbedding {
  std::vector<BallPoint> points;
  Curvature kappa;
  int dim;

  PoincareEmbedding(std::vector<BallPoint> pts, Curvature k, int d);
  int n() const { return static_cast<int>(points.size()); }
};

/// Guard for double-precision cosh: sqrt(kappa) * d must stay below this.
inline constexpr double kCoshArgumentLimit = 700.0;

CoshGramMatrix build_cosh_matrix(const DistanceMatrix& D, const Curvature& k);

/// Largest eigenpair and d smallest eigenpairs of the cosh-Gram matrix.
EigenSystem eigendecompose_reduced(const CoshGramMatrix& A, int d,
                                   const EigsOptions& opts = EigsOptions{});

/// Builds X = [sqrt(lambda_1) q_1, sqrt((-lambda_{n-d+1})^+) q_{n-d+1},
/// ..., sqrt((-lambda_n)^+) q_n]; trailing eigenvalues that are positive
/// contribute zero columns.
HyperboloidConfig assemble_coordinates(const EigenSystem& E, int d,
                                       const Curvature& k);

struct DirectionalProjection {
  Eigen::MatrixXd directions;    // n x d, unit rows
  std::vector<bool> degenerate;  // rows with zero spatial part
};

/// Row-normalized spatial parts; zero rows get the convention direction
/// (1, 0, ..., 0) and are flagged.
DirectionalProjection directional_projection(const HyperboloidConfig& X);

/// Radial coordinates r_i = sqrt((x_i1 - x_min) / (x_i1 + x_min)) with
/// x_min = min(1, x_11, ..., x_n1).
std::vector<double> radial_projection(const HyperboloidConfig& X);

struct HydraOptions {
  EigsOptions eigs;
};

struct HydraResult {
  HyperboloidConfig config;
  PoincareEmbedding embedding;
  std::vector<std::string> warnings;
};

/// The complete embedding pipeline: cosh-Gram matrix, reduced
/// eigendecomposition, coordinate assembly, directional and radial
/// projection. The returned configuration is a global minimizer of the
/// strain functional.
HydraResult hydra(const DistanceMatrix& D, int d, const Curvature& k,
                  const HydraOptions& opts = HydraOptions{});

/// Sum over all ordered pairs (i, j), including i == j, of
/// (cosh(sqrt(kappa) d_ij) - x_i o x_j)^2.
double strain(const HyperboloidConfig& X, const DistanceMatrix& D,
              const Curvature& k);

/// The attainable minimum of the strain functional for a matrix with the
/// given spectrum: sum_{i=2}^{n-d} lambda_i^2 + sum_{i>n-d} (lambda_i^+)^2.
double optimal_strain_value(const Eigen::VectorXd& eigenvalues_descending,
                            int d);

}  // namespace hydra
