#include "hydra/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

namespace hydra {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

double dot(const MatrixXd& a, const MatrixXd& b) {
  return (a.array() * b.array()).sum();
}

VectorXd time_coords(const MatrixXd& Y) {
  return (Y.rowwise().squaredNorm().array() + 1.0).sqrt();
}

// stress^2: sum over ordered pairs of (d_ij - acosh(g_ij)/sqrt(kappa))^2
// with g_ij = c_i c_j - y_i . y_j.
double stress_squared(const MatrixXd& Y, const DistanceMatrix& D, double sk) {
  const int n = static_cast<int>(Y.rows());
  const VectorXd c = time_coords(Y);
  double f = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double g = c[i] * c[j] - Y.row(i).dot(Y.row(j));
      const double h = arcosh_clamped(g) / sk;
      const double r = D(i, j) - h;
      f += 2.0 * r * r;
    }
  }
  return f;
}

MatrixXd stress_squared_gradient(const MatrixXd& Y, const DistanceMatrix& D,
                                 double sk) {
  const int n = static_cast<int>(Y.rows());
  const VectorXd c = time_coords(Y);
  // w_ij = (d_ij - h_ij) / sqrt(g_ij^2 - 1), with the denominator clamped
  // below at 1e-9 for near-coincident pairs.
  MatrixXd W = MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double g = c[i] * c[j] - Y.row(i).dot(Y.row(j));
      const double h = arcosh_clamped(g) / sk;
      const double g2 = g * g - 1.0;
      const double denom = g2 < 1e-18 ? 1e-9 : std::sqrt(g2);
      const double w = (D(i, j) - h) / denom;
      W(i, j) = w;
      W(j, i) = w;
    }
  }
  const VectorXd s = (W * c).cwiseQuotient(c);
  MatrixXd grad = s.asDiagonal() * Y;
  grad.noalias() -= W * Y;
  grad *= -4.0 / sk;
  return grad;
}

}  // namespace

SpatialParametrization::SpatialParametrization(Eigen::MatrixXd params)
    : params_(std::move(params)) {
  if (params_.rows() < 1 || params_.cols() < 1)
    throw std::invalid_argument("spatial parametrization must be nonempty");
}

SpatialParametrization SpatialParametrization::from_embedding(
    const PoincareEmbedding& E) {
  MatrixXd Y(E.n(), E.dim);
  for (int i = 0; i < E.n(); ++i)
    Y.row(i) = lift_to_hyperboloid(E.points[i]).spatial();
  return SpatialParametrization(std::move(Y));
}

LorentzVector SpatialParametrization::lift_row(int i) const {
  VectorXd coords(dim() + 1);
  coords[0] = std::sqrt(1.0 + params_.row(i).squaredNorm());
  coords.tail(dim()) = params_.row(i);
  return LorentzVector(std::move(coords));
}

std::vector<LorentzVector> SpatialParametrization::lift() const {
  std::vector<LorentzVector> pts;
  pts.reserve(n());
  for (int i = 0; i < n(); ++i) pts.push_back(lift_row(i));
  return pts;
}

VectorXd SpatialParametrization::time_coordinates() const {
  return time_coords(params_);
}

double stress(const std::vector<LorentzVector>& points,
              const DistanceMatrix& D, const Curvature& k) {
  const int n = static_cast<int>(points.size());
  if (n != D.n()) throw std::invalid_argument("stress: dimension mismatch");
  double f = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double r = D(i, j) - hyperbolic_distance(points[i], points[j], k);
      f += 2.0 * r * r;
    }
  }
  return std::sqrt(f);
}

double stress(const PoincareEmbedding& E, const DistanceMatrix& D) {
  std::vector<LorentzVector> pts;
  pts.reserve(E.n());
  for (const auto& p : E.points) pts.push_back(lift_to_hyperboloid(p));
  return stress(pts, D, E.kappa);
}

Eigen::MatrixXd stress_gradient(const SpatialParametrization& Y,
                                const DistanceMatrix& D, const Curvature& k) {
  if (Y.n() != D.n())
    throw std::invalid_argument("stress_gradient: dimension mismatch");
  return stress_squared_gradient(Y.params(), D, k.sqrt_kappa());
}

MinimizeResult minimize_stress(const SpatialParametrization& initial,
                               const DistanceMatrix& D, const Curvature& k,
                               const OptimizerSettings& opts) {
  opts.validate();
  if (initial.n() != D.n())
    throw std::invalid_argument("minimize_stress: dimension mismatch");
  const double sk = k.sqrt_kappa();

  MatrixXd x = initial.params();
  double f = stress_squared(x, D, sk);
  MatrixXd g = stress_squared_gradient(x, D, sk);

  double best_f = f;
  MatrixXd best_x = x;

  std::deque<MatrixXd> mem_s, mem_y;
  std::deque<double> mem_rho;

  bool converged = false;
  int iter = 0;
  for (; iter < opts.max_iterations; ++iter) {
    if (g.cwiseAbs().maxCoeff() <= opts.gradient_tolerance) {
      converged = true;
      break;
    }

    // Two-loop recursion for the quasi-Newton direction.
    MatrixXd q = g;
    std::vector<double> a(mem_s.size());
    for (int i = static_cast<int>(mem_s.size()) - 1; i >= 0; --i) {
      a[i] = mem_rho[i] * dot(mem_s[i], q);
      q -= a[i] * mem_y[i];
    }
    if (!mem_s.empty())
      q *= dot(mem_s.back(), mem_y.back()) / dot(mem_y.back(), mem_y.back());
    for (std::size_t i = 0; i < mem_s.size(); ++i) {
      const double b = mem_rho[i] * dot(mem_y[i], q);
      q += (a[i] - b) * mem_s[i];
    }
    MatrixXd dir = -q;
    double gd = dot(g, dir);
    if (!(gd < 0.0)) {
      // Memory produced a non-descent direction; fall back to steepest
      // descent with a fresh memory.
      mem_s.clear();
      mem_y.clear();
      mem_rho.clear();
      dir = -g;
      gd = dot(g, dir);
      if (!(gd < 0.0)) {
        converged = true;  // zero gradient
        break;
      }
    }

    // Backtracking Armijo line search.
    double t = (iter == 0) ? std::min(1.0, 1.0 / std::sqrt(dot(g, g))) : 1.0;
    MatrixXd xn;
    double fn = 0.0;
    bool accepted = false;
    for (int ls = 0; ls < 60; ++ls) {
      xn = x + t * dir;
      fn = stress_squared(xn, D, sk);
      if (fn < best_f) {
        best_f = fn;
        best_x = xn;
      }
      if (fn <= f + 1e-4 * t * gd) {
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    if (!accepted) break;  // line search stalled; report converged = false

    MatrixXd gn = stress_squared_gradient(xn, D, sk);
    const MatrixXd s = xn - x;
    const MatrixXd yv = gn - g;
    const double sy = dot(s, yv);
    if (sy > 1e-12 * std::sqrt(dot(s, s) * dot(yv, yv))) {
      mem_s.push_back(s);
      mem_y.push_back(yv);
      mem_rho.push_back(1.0 / sy);
      if (static_cast<int>(mem_s.size()) > opts.history_size) {
        mem_s.pop_front();
        mem_y.pop_front();
        mem_rho.pop_front();
      }
    }
    x = std::move(xn);
    f = fn;
    g = std::move(gn);
  }

  return MinimizeResult{SpatialParametrization(std::move(best_x)),
                        std::sqrt(best_f), converged, iter};
}

PoincareEmbedding equiangular_adjust(const PoincareEmbedding& E,
                                     double lambda) {
  if (E.dim != 2)
    throw std::invalid_argument("equiangular_adjust requires dim == 2");
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw std::invalid_argument("equiangular_adjust: lambda must be in [0, 1]");
  const int n = E.n();

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return *E.points[a].angle < *E.points[b].angle;
  });
  std::vector<int> rank(n);
  for (int pos = 0; pos < n; ++pos) rank[order[pos]] = pos + 1;

  std::vector<BallPoint> adjusted;
  adjusted.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double grid = (rank[i] - 1) * (2.0 * M_PI / n);
    const double theta = (1.0 - lambda) * *E.points[i].angle + lambda * grid;
    adjusted.emplace_back(E.points[i].radius, theta);
  }
  return PoincareEmbedding(std::move(adjusted), E.kappa, 2);
}

HydraPlusResult hydra_plus(const DistanceMatrix& D, int d, const Curvature& k,
                           const OptimizerSettings& opts, double equi_lambda,
                           const HydraOptions& hydra_opts) {
  HydraResult base = hydra(D, d, k, hydra_opts);
  PoincareEmbedding init = (d == 2)
                               ? equiangular_adjust(base.embedding, equi_lambda)
                               : base.embedding;
  const SpatialParametrization Y0 = SpatialParametrization::from_embedding(init);
  const double initial_stress = stress(Y0.lift(), D, k);

  MinimizeResult mr = minimize_stress(Y0, D, k, opts);

  std::vector<BallPoint> points;
  points.reserve(mr.params.n());
  for (int i = 0; i < mr.params.n(); ++i)
    points.push_back(stereographic_project(mr.params.lift_row(i)));

  return HydraPlusResult{PoincareEmbedding(std::move(points), k, d),
                         mr.stress,
                         initial_stress,
                         mr.converged,
                         mr.iterations,
                         std::move(base.warnings)};
}

}  // namespace hydra
