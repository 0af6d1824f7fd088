#pragma once

#include <vector>

#include "hydra/distance_matrix.hpp"
#include "hydra/embed.hpp"
#include "hydra/geometry.hpp"

namespace hydra {

struct OptimizerSettings {
  int max_iterations = 1000;
  double gradient_tolerance = 1e-8;
  int history_size = 10;  // quasi-Newton memory
  unsigned seed = 1;      // used by callers drawing random initial conditions

  void validate() const {
    if (max_iterations < 1)
      throw std::invalid_argument("max_iterations must be >= 1");
    if (!(gradient_tolerance > 0.0))
      throw std::invalid_argument("gradient_tolerance must be > 0");
  }
};

/// Unconstrained coordinates for points on the hyperboloid: row i holds
/// the spatial part y_i, and the corresponding point is
/// x_i = (sqrt(1 + |y_i|^2), y_i), which satisfies x o x = 1 by
/// construction.
class SpatialParametrization {
 public:
  explicit SpatialParametrization(Eigen::MatrixXd params);
  static SpatialParametrization from_embedding(const PoincareEmbedding& E);

  int n() const { return static_cast<int>(params_.rows()); }
  int dim() const { return static_cast<int>(params_.cols()); }
  const Eigen::MatrixXd& params() const { return params_; }

  LorentzVector lift_row(int i) const;
  std::vector<LorentzVector> lift() const;
  /// Time coordinates sqrt(1 + |y_i|^2) of all rows.
  Eigen::VectorXd time_coordinates() const;

 private:
  Eigen::MatrixXd params_;
};

/// sqrt of the sum over all ordered pairs of (d_ij - d_H(x_i, x_j))^2.
double stress(const std::vector<LorentzVector>& points,
              const DistanceMatrix& D, const Curvature& k);
double stress(const PoincareEmbedding& E, const DistanceMatrix& D);

/// Gradient of stress^2 with respect to the spatial parameters Y.
Eigen::MatrixXd stress_gradient(const SpatialParametrization& Y,
                                const DistanceMatrix& D, const Curvature& k);

struct MinimizeResult {
  SpatialParametrization params;
  double stress = 0.0;
  bool converged = false;
  int iterations = 0;
};

/// Limited-memory quasi-Newton descent on stress^2. Returns the best
/// iterate encountered, so the result never exceeds the initial stress;
/// converged is false when the line search stalls or the gradient
/// tolerance is not reached within the iteration budget.
MinimizeResult minimize_stress(const SpatialParametrization& initial,
                               const DistanceMatrix& D, const Curvature& k,
                               const OptimizerSettings& opts = {});

/// Interpolates d = 2 angles toward the rank-based equiangular grid:
/// theta' = (1 - lambda) * theta + lambda * grid, where grid assigns
/// (rank - 1) * 2*pi/n by angular rank (ties broken by index). lambda = 0
/// leaves angles unchanged, lambda = 1 gives the pure grid. Radii are
/// preserved exactly.
PoincareEmbedding equiangular_adjust(const PoincareEmbedding& E,
                                     double lambda);

struct HydraPlusResult {
  PoincareEmbedding embedding;
  double stress = 0.0;
  double initial_stress = 0.0;  // stress of the adjusted initial condition
  bool converged = false;
  int iterations = 0;
  std::vector<std::string> warnings;
};

/// Strain-optimal embedding refined by direct stress minimization: runs
/// the spectral pipeline, applies the equiangular adjustment (d = 2
/// only), and uses the result as the initial condition for
/// minimize_stress.
HydraPlusResult hydra_plus(const DistanceMatrix& D, int d, const Curvature& k,
                           const OptimizerSettings& opts = {},
                           double equi_lambda = 0.5,
                           const HydraOptions& hydra_opts = {});

}  // namespace hydra
