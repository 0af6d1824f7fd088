#pragma once

#include <Eigen/Core>

#include <stdexcept>
#include <string>
#include <utility>

namespace hydra {

struct EigsOptions {
  /// Full dense decomposition at or below this order; Lanczos above it.
  int dense_threshold = 128;
  /// Residual tolerance for the iterative path, relative to ||A||_2.
  double tolerance = 1e-10;
  /// Iteration cap for the iterative path, as a multiple of n. The
  /// Lanczos basis is additionally capped at n, where the factorization
  /// becomes exact.
  int max_iteration_factor = 10;
};

/// The leading eigenpair and the d trailing eigenpairs of a symmetric
/// matrix. Trailing eigenvalues are stored in descending order
/// (lambda_{n-d+1} >= ... >= lambda_n), trailing vectors column-aligned.
///
/// Sign convention: the top vector is flipped so its entry of largest
/// magnitude is positive (entrywise positive for positive matrices, by
/// Perron's theorem); trailing vectors are flipped so their first
/// nonzero entry is positive. This makes results deterministic across
/// solvers and runs.
struct EigenSystem {
  double top_value = 0.0;
  Eigen::VectorXd top_vector;
  Eigen::VectorXd bottom_values;
  Eigen::MatrixXd bottom_vectors;

  int n() const { return static_cast<int>(top_vector.size()); }
  int d() const { return static_cast<int>(bottom_values.size()); }
};

/// Raised when the iterative solver cannot reach the residual tolerance.
class EigsConvergenceError : public std::runtime_error {
 public:
  EigsConvergenceError(const std::string& what, Eigen::VectorXd residuals)
      : std::runtime_error(what), residual_norms(std::move(residuals)) {}

  Eigen::VectorXd residual_norms;
};

/// Computes the largest eigenpair and the d smallest eigenpairs of the
/// symmetric matrix A. Equivalent to a full decomposition restricted to
/// those pairs; above opts.dense_threshold a Lanczos iteration with full
/// reorthogonalization extracts both ends of the spectrum from a single
/// Krylov basis (the basis of A and of -A coincide).
EigenSystem reduced_eigensystem(const Eigen::MatrixXd& A, int d,
                                const EigsOptions& opts = EigsOptions{});

}  // namespace hydra
