#include "hydra/geometry.hpp"

#include <cmath>
#include <sstream>

namespace hydra {

namespace {

Eigen::VectorXd origin_direction(int d) {
  Eigen::VectorXd u = Eigen::VectorXd::Zero(d);
  u[0] = 1.0;
  return u;
}

// Wraps atan2 output into [0, 2*pi).
double wrap_angle(double theta) {
  const double two_pi = 2.0 * M_PI;
  if (theta < 0.0) theta += two_pi;
  if (theta >= two_pi) theta -= two_pi;
  return theta;
}

}  // namespace

BallPoint::BallPoint(double r, Eigen::VectorXd u)
    : radius(r), direction(std::move(u)) {
  if (direction.size() < 1)
    throw std::invalid_argument("BallPoint direction must be nonempty");
  if (!(radius >= 0.0 && radius < 1.0))
    throw std::invalid_argument("BallPoint radius must lie in [0, 1)");
  if (std::abs(direction.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("BallPoint direction must be a unit vector");
  if (direction.size() == 2)
    angle = wrap_angle(std::atan2(direction[1], direction[0]));
}

BallPoint::BallPoint(double r, double theta)
    : BallPoint(r, Eigen::Vector2d(std::cos(theta), std::sin(theta))) {}

double lorentz_product(const LorentzVector& x, const LorentzVector& y) {
  if (x.coords.size() != y.coords.size())
    throw std::invalid_argument("lorentz_product: dimension mismatch");
  const auto n = x.coords.size();
  return x.coords[0] * y.coords[0] -
         x.coords.tail(n - 1).dot(y.coords.tail(n - 1));
}

bool is_on_hyperboloid(const LorentzVector& x, double tol) {
  return x.coords[0] > 0.0 &&
         std::abs(lorentz_product(x, x) - 1.0) <= tol;
}

double arcosh_clamped(double t) {
  if (t < 1.0) {
    if (t < 1.0 - 1e-9) {
      std::ostringstream msg;
      msg << "arcosh argument " << t
          << " below 1; inputs are not valid hyperboloid points";
      throw std::domain_error(msg.str());
    }
    t = 1.0;
  }
  return std::acosh(t);
}

double hyperbolic_distance(const LorentzVector& x, const LorentzVector& y,
                           const Curvature& k, bool checked) {
  if (checked && (!is_on_hyperboloid(x) || !is_on_hyperboloid(y)))
    throw std::domain_error("hyperbolic_distance: input not on hyperboloid");
  return arcosh_clamped(lorentz_product(x, y)) / k.sqrt_kappa();
}

BallPoint stereographic_project(const LorentzVector& x) {
  const int d = x.spatial_dim();
  const Eigen::VectorXd xi = x.spatial() / (1.0 + x.time());
  const double r = xi.stableNorm();
  if (r == 0.0) return BallPoint(0.0, origin_direction(d));
  return BallPoint(r, Eigen::VectorXd(xi / r));
}

LorentzVector lift_to_hyperboloid(const BallPoint& z) {
  const double r2 = z.radius * z.radius;
  const double denom = 1.0 - r2;
  Eigen::VectorXd coords(z.dim() + 1);
  coords[0] = (1.0 + r2) / denom;
  coords.tail(z.dim()) = (2.0 * z.radius / denom) * z.direction;
  return LorentzVector(std::move(coords));
}

double radial_coordinate(double x1) {
  if (x1 < 1.0)
    throw std::domain_error("radial_coordinate: argument must be >= 1");
  return std::sqrt((x1 - 1.0) / (x1 + 1.0));
}

double poincare_distance(const BallPoint& z1, const BallPoint& z2,
                         const Curvature& k) {
  return hyperbolic_distance(lift_to_hyperboloid(z1), lift_to_hyperboloid(z2),
                             k);
}

}  // namespace hydra
