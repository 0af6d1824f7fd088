#pragma once

#include <Eigen/Core>

#include <optional>
#include <stdexcept>

namespace hydra {

/// Positive curvature parameter; the embedding space has sectional
/// curvature -kappa.
class Curvature {
 public:
  explicit Curvature(double kappa) : kappa_(kappa) {
    if (!(kappa > 0.0))
      throw std::invalid_argument("curvature parameter kappa must be > 0");
  }
  double kappa() const { return kappa_; }
  double sqrt_kappa() const { return std::sqrt(kappa_); }

 private:
  double kappa_;
};

/// A vector in Lorentz space R^{1,d}: time coordinate first, then d
/// spatial coordinates. Points on the hyperboloid additionally satisfy
/// lorentz_product(x, x) == 1 and coords[0] > 0.
struct LorentzVector {
  Eigen::VectorXd coords;

  explicit LorentzVector(Eigen::VectorXd c) : coords(std::move(c)) {
    if (coords.size() < 2)
      throw std::invalid_argument("LorentzVector needs at least 2 coordinates");
  }

  int spatial_dim() const { return static_cast<int>(coords.size()) - 1; }
  double time() const { return coords[0]; }
  Eigen::VectorXd spatial() const { return coords.tail(coords.size() - 1); }
};

/// A point of the open unit ball in radial/directional form. For d == 2
/// the polar angle in [0, 2*pi) is carried along as well.
struct BallPoint {
  double radius = 0.0;
  Eigen::VectorXd direction;        // unit vector, length d
  std::optional<double> angle;      // present iff d == 2

  BallPoint(double r, Eigen::VectorXd u);
  /// d == 2 convenience constructor from polar coordinates.
  BallPoint(double r, double theta);

  int dim() const { return static_cast<int>(direction.size()); }
  Eigen::VectorXd cartesian() const { return radius * direction; }
};

/// Indefinite inner product x1*y1 - (x2*y2 + ... + x_{d+1}*y_{d+1}).
double lorentz_product(const LorentzVector& x, const LorentzVector& y);

/// True if lorentz_product(x, x) == 1 within tol and the time coordinate
/// is positive.
bool is_on_hyperboloid(const LorentzVector& x, double tol = 1e-9);

/// arcosh with the argument clamped up to 1 when it lies in
/// [1 - 1e-9, 1); arguments below that band are rejected.
double arcosh_clamped(double t);

/// Hyperbolic distance (1/sqrt(kappa)) * arcosh(x o y) between two
/// hyperboloid points. With checked == true both inputs are validated
/// against the hyperboloid invariant first.
double hyperbolic_distance(const LorentzVector& x, const LorentzVector& y,
                           const Curvature& k, bool checked = false);

/// Stereographic projection of a hyperboloid point onto the unit ball,
/// returned in radial/directional form. The origin gets the convention
/// direction (1, 0, ..., 0).
BallPoint stereographic_project(const LorentzVector& x);

/// Inverse stereographic projection; the result satisfies
/// lorentz_product(x, x) == 1 up to rounding.
LorentzVector lift_to_hyperboloid(const BallPoint& z);

/// Radial conversion sqrt((x1 - 1) / (x1 + 1)) for a first Lorentz
/// coordinate x1 >= 1.
double radial_coordinate(double x1);

/// Ball-model distance, computed through the hyperboloid model.
double poincare_distance(const BallPoint& z1, const BallPoint& z2,
                         const Curvature& k);

}  // namespace hydra
