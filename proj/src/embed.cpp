#include "hydra/embed.hpp"

#include <cmath>
#include <sstream>

namespace hydra {

HyperboloidConfig::HyperboloidConfig(Eigen::MatrixXd coords, Curvature kappa)
    : coords_(std::move(coords)), kappa_(kappa) {
  if (coords_.cols() < 2 || coords_.rows() < 1)
    throw std::invalid_argument(
        "hyperboloid configuration needs n >= 1 rows and d + 1 >= 2 columns");
  if ((coords_.col(0).array() <= 0.0).any())
    throw std::invalid_argument(
        "hyperboloid configuration: first column must be strictly positive");
}

PoincareEmbedding::PoincareEmbedding(std::vector<BallPoint> pts, Curvature k,
                                     int d)
    : points(std::move(pts)), kappa(k), dim(d) {
  for (const auto& p : points)
    if (p.dim() != d)
      throw std::invalid_argument("embedding points disagree on dimension");
}

CoshGramMatrix build_cosh_matrix(const DistanceMatrix& D, const Curvature& k) {
  const int n = D.n();
  const double sk = k.sqrt_kappa();
  Eigen::Index imax = 0, jmax = 0;
  const double dmax = D.entries().maxCoeff(&imax, &jmax);
  if (sk * dmax > kCoshArgumentLimit) {
    std::ostringstream msg;
    msg << "cosh overflow guard: sqrt(kappa) * d = " << sk * dmax
        << " for entry (" << imax << ", " << jmax << ") exceeds "
        << kCoshArgumentLimit << "; use a smaller kappa or rescale distances";
    throw std::domain_error(msg.str());
  }
  Eigen::MatrixXd A(n, n);
  for (int i = 0; i < n; ++i) {
    A(i, i) = 1.0;
    for (int j = i + 1; j < n; ++j) {
      const double a = std::cosh(sk * D(i, j));
      A(i, j) = a;
      A(j, i) = a;
    }
  }
  return CoshGramMatrix(std::move(A));
}

EigenSystem eigendecompose_reduced(const CoshGramMatrix& A, int d,
                                   const EigsOptions& opts) {
  return reduced_eigensystem(A.entries(), d, opts);
}

HyperboloidConfig assemble_coordinates(const EigenSystem& E, int d,
                                       const Curvature& k) {
  if (E.d() != d)
    throw std::invalid_argument(
        "assemble_coordinates: eigensystem holds a different d");
  if (E.top_value <= 0.0)
    throw std::domain_error(
        "assemble_coordinates: leading eigenvalue must be positive");
  const int n = E.n();
  Eigen::MatrixXd X(n, d + 1);
  X.col(0) = std::sqrt(E.top_value) * E.top_vector;
  for (int j = 0; j < d; ++j) {
    const double w = std::max(-E.bottom_values[j], 0.0);
    X.col(1 + j) = std::sqrt(w) * E.bottom_vectors.col(j);
  }
  return HyperboloidConfig(std::move(X), k);
}

DirectionalProjection directional_projection(const HyperboloidConfig& X) {
  const int n = X.n();
  const int d = X.dim();
  DirectionalProjection out;
  out.directions.resize(n, d);
  out.degenerate.assign(n, false);
  for (int i = 0; i < n; ++i) {
    const Eigen::VectorXd spatial = X.coords().row(i).tail(d);
    const double norm = spatial.stableNorm();
    if (norm == 0.0) {
      out.directions.row(i).setZero();
      out.directions(i, 0) = 1.0;
      out.degenerate[i] = true;
    } else {
      out.directions.row(i) = spatial.transpose() / norm;
    }
  }
  return out;
}

std::vector<double> radial_projection(const HyperboloidConfig& X) {
  const double x_min = std::min(1.0, X.coords().col(0).minCoeff());
  std::vector<double> r(X.n());
  for (int i = 0; i < X.n(); ++i) {
    const double x1 = X.coords()(i, 0);
    r[i] = std::sqrt((x1 - x_min) / (x1 + x_min));
  }
  return r;
}

HydraResult hydra(const DistanceMatrix& D, int d, const Curvature& k,
                  const HydraOptions& opts) {
  if (d < 1 || d > D.n() - 1)
    throw std::invalid_argument("hydra: need 1 <= d <= n - 1");
  const CoshGramMatrix A = build_cosh_matrix(D, k);
  const EigenSystem E = eigendecompose_reduced(A, d, opts.eigs);
  HyperboloidConfig X = assemble_coordinates(E, d, k);
  const DirectionalProjection dir = directional_projection(X);
  const std::vector<double> r = radial_projection(X);

  std::vector<BallPoint> points;
  points.reserve(X.n());
  for (int i = 0; i < X.n(); ++i)
    points.emplace_back(r[i], Eigen::VectorXd(dir.directions.row(i)));

  std::vector<std::string> warnings;
  for (int i = 0; i < X.n(); ++i) {
    if (dir.degenerate[i]) {
      std::ostringstream w;
      w << "point " << i
        << " has zero spatial coordinates; direction set by convention";
      warnings.push_back(w.str());
    }
  }

  return HydraResult{std::move(X),
                     PoincareEmbedding(std::move(points), k, d),
                     std::move(warnings)};
}

double strain(const HyperboloidConfig& X, const DistanceMatrix& D,
              const Curvature& k) {
  if (X.n() != D.n())
    throw std::invalid_argument("strain: dimension mismatch");
  const CoshGramMatrix A = build_cosh_matrix(D, k);
  const auto& C = X.coords();
  // Lorentzian Gram matrix X J X^T, with J = diag(1, -1, ..., -1).
  Eigen::MatrixXd G = C.col(0) * C.col(0).transpose();
  G.noalias() -= C.rightCols(X.dim()) * C.rightCols(X.dim()).transpose();
  return (A.entries() - G).squaredNorm();
}

double optimal_strain_value(const Eigen::VectorXd& ev, int d) {
  const int n = static_cast<int>(ev.size());
  if (d < 1 || d > n - 1)
    throw std::invalid_argument("optimal_strain_value: need 1 <= d <= n - 1");
  double total = 0.0;
  for (int i = 1; i < n - d; ++i) total += ev[i] * ev[i];
  for (int i = n - d; i < n; ++i) {
    const double p = std::max(ev[i], 0.0);
    total += p * p;
  }
  return total;
}

}  // namespace hydra
