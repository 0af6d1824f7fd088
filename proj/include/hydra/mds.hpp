#pragma once

#include <Eigen/Core>

#include "hydra/distance_matrix.hpp"

namespace hydra {

/// Euclidean point configuration produced by classic multidimensional
/// scaling; columns are centered.
struct EuclideanConfig {
  Eigen::MatrixXd coords;  // n x d

  int n() const { return static_cast<int>(coords.rows()); }
  int dim() const { return static_cast<int>(coords.cols()); }
};

/// Double-centered matrix -1/2 * C D C used by classic MDS.
Eigen::MatrixXd double_center(const Eigen::MatrixXd& D);

/// Classic multidimensional scaling: spectral coordinates of the
/// doubly-centered input, top d eigenpairs, negative eigenvalues
/// truncated to zero columns. Recovers point sets exactly when D holds
/// squared Euclidean distances.
EuclideanConfig classic_mds(const DistanceMatrix& D, int d);

/// ||double_center(D) - X X^T||_F^2, the functional classic_mds minimizes
/// over rank-d configurations.
double euclidean_strain(const EuclideanConfig& X, const DistanceMatrix& D);

}  // namespace hydra
