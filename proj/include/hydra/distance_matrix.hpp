#pragma once

#include <Eigen/Core>

#include <stdexcept>
#include <utility>

namespace hydra {

/// Symmetric nonnegative dissimilarity matrix with zero diagonal.
/// Construction validates the invariants (symmetry within 1e-12, zero
/// diagonal, no negative entries) and symmetrizes exactly so downstream
/// matrices inherit exact symmetry.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(Eigen::MatrixXd entries);

  int n() const { return static_cast<int>(entries_.rows()); }
  const Eigen::MatrixXd& entries() const { return entries_; }
  double operator()(int i, int j) const { return entries_(i, j); }
  double max_entry() const { return entries_.maxCoeff(); }

 private:
  Eigen::MatrixXd entries_;
};

inline DistanceMatrix::DistanceMatrix(Eigen::MatrixXd entries)
    : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() < 1)
    throw std::invalid_argument("distance matrix must be square and nonempty");
  for (int i = 0; i < entries_.rows(); ++i) {
    if (entries_(i, i) != 0.0)
      throw std::invalid_argument("distance matrix diagonal must be zero");
    for (int j = i + 1; j < entries_.cols(); ++j) {
      if (std::abs(entries_(i, j) - entries_(j, i)) > 1e-12)
        throw std::invalid_argument("distance matrix must be symmetric");
      if (entries_(i, j) < 0.0 || entries_(j, i) < 0.0)
        throw std::invalid_argument("distance matrix entries must be >= 0");
      const double v = 0.5 * (entries_(i, j) + entries_(j, i));
      entries_(i, j) = v;
      entries_(j, i) = v;
    }
  }
}

}  // namespace hydra
