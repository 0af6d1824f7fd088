#include "hydra/mds.hpp"

#include <Eigen/Dense>

namespace hydra {

Eigen::MatrixXd double_center(const Eigen::MatrixXd& D) {
  const double total_mean = D.mean();
  const Eigen::VectorXd row_mean = D.rowwise().mean();
  const Eigen::VectorXd col_mean = D.colwise().mean();
  Eigen::MatrixXd A = D;
  A.colwise() -= row_mean;
  A.rowwise() -= col_mean.transpose();
  A.array() += total_mean;
  return -0.5 * A;
}

EuclideanConfig classic_mds(const DistanceMatrix& D, int d) {
  const int n = D.n();
  if (d < 1 || d > n - 1)
    throw std::invalid_argument("classic_mds: need 1 <= d <= n - 1");

  const Eigen::MatrixXd A = double_center(D.entries());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("classic_mds: eigendecomposition failed");

  Eigen::MatrixXd X = Eigen::MatrixXd::Zero(n, d);
  for (int j = 0; j < d; ++j) {
    const double lambda = es.eigenvalues()[n - 1 - j];
    if (lambda <= 0.0) continue;  // truncate non-Euclidean directions
    Eigen::VectorXd q = es.eigenvectors().col(n - 1 - j);
    for (Eigen::Index i = 0; i < q.size(); ++i) {
      if (std::abs(q[i]) > 1e-12) {
        if (q[i] < 0.0) q = -q;
        break;
      }
    }
    X.col(j) = std::sqrt(lambda) * q;
  }
  return EuclideanConfig{std::move(X)};
}

double euclidean_strain(const EuclideanConfig& X, const DistanceMatrix& D) {
  if (X.n() != D.n())
    throw std::invalid_argument("euclidean_strain: dimension mismatch");
  const Eigen::MatrixXd A = double_center(D.entries());
  return (A - X.coords * X.coords.transpose()).squaredNorm();
}

}  // namespace hydra
