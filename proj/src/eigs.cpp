#include "hydra/eigs.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace hydra {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

void flip_to_positive_max_entry(Eigen::Ref<VectorXd> v) {
  Eigen::Index idx = 0;
  v.cwiseAbs().maxCoeff(&idx);
  if (v[idx] < 0.0) v = -v;
}

void flip_to_positive_first_entry(Eigen::Ref<VectorXd> v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > 1e-12) {
      if (v[i] < 0.0) v = -v;
      return;
    }
  }
}

void normalize_signs(EigenSystem& sys) {
  flip_to_positive_max_entry(sys.top_vector);
  for (int j = 0; j < sys.d(); ++j)
    flip_to_positive_first_entry(sys.bottom_vectors.col(j));
}

// Picks the largest pair and the d smallest pairs out of an ascending
// spectrum, reordering the trailing block to descending.
EigenSystem extract_ends(const VectorXd& values_asc, const MatrixXd& vectors,
                         int d) {
  const auto m = values_asc.size();
  EigenSystem sys;
  sys.top_value = values_asc[m - 1];
  sys.top_vector = vectors.col(m - 1);
  sys.bottom_values.resize(d);
  sys.bottom_vectors.resize(vectors.rows(), d);
  for (int j = 0; j < d; ++j) {
    sys.bottom_values[j] = values_asc[d - 1 - j];
    sys.bottom_vectors.col(j) = vectors.col(d - 1 - j);
  }
  normalize_signs(sys);
  return sys;
}

EigenSystem dense_eigensystem(const MatrixXd& A, int d) {
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(A);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("dense symmetric eigendecomposition failed");
  return extract_ends(es.eigenvalues(), es.eigenvectors(), d);
}

// Lanczos with full reorthogonalization (two classical Gram-Schmidt
// passes per step). The three-term recurrence is subsumed by the full
// reorthogonalization, so the computed T = V^T A V stays tridiagonal to
// machine precision and Ritz pairs can be read off T directly. Because
// the basis may grow up to n, where the factorization is a complete
// orthogonal similarity, termination with accurate pairs is guaranteed
// for any symmetric input; the residual test below is still checked
// explicitly against A.
EigenSystem lanczos_eigensystem(const MatrixXd& A, int d,
                                const EigsOptions& opts) {
  const int n = static_cast<int>(A.rows());
  const int want = d + 1;
  const int max_basis =
      std::min<long>(n, static_cast<long>(opts.max_iteration_factor) * n);

  MatrixXd V(n, max_basis + 1);
  VectorXd alpha = VectorXd::Zero(max_basis);
  VectorXd beta = VectorXd::Zero(max_basis);

  std::mt19937 gen(0x48595233u);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto random_unit = [&]() {
    VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = gauss(gen);
    v.normalize();
    return v;
  };

  auto orthogonalize = [&](VectorXd& w, int cols) {
    VectorXd h = V.leftCols(cols).transpose() * w;
    w.noalias() -= V.leftCols(cols) * h;
    h.noalias() = V.leftCols(cols).transpose() * w;
    w.noalias() -= V.leftCols(cols) * h;
  };

  V.col(0) = random_unit();
  // ||A||_inf bounds ||A||_2 for symmetric A; refined from Ritz values.
  double scale = std::max(A.cwiseAbs().rowwise().sum().maxCoeff(), 1e-300);

  Eigen::SelfAdjointEigenSolver<MatrixXd> tri;
  VectorXd prev_wanted;
  bool exhausted = false;  // no fresh direction exists; basis spans R^n
  int next_check = std::min(max_basis, std::max(2 * want + 6, 12));
  int m = 0;

  for (int j = 0; j < max_basis; ++j) {
    VectorXd w = A * V.col(j);
    alpha[j] = V.col(j).dot(w);
    orthogonalize(w, j + 1);
    const double b = w.norm();
    m = j + 1;

    bool breakdown = (b <= 1e-13 * scale);
    if (!breakdown) {
      beta[j] = b;
      V.col(j + 1) = w / b;
    } else if (m < max_basis) {
      // Invariant subspace found. For symmetric A its orthogonal
      // complement is invariant too, so restarting with a fresh
      // orthogonal direction keeps T tridiagonal (the coupling is 0).
      beta[j] = 0.0;
      VectorXd f;
      double fn = 0.0;
      for (int attempt = 0; attempt < 5 && fn <= 1e-8; ++attempt) {
        f = random_unit();
        orthogonalize(f, m);
        fn = f.norm();
      }
      if (fn <= 1e-8) {
        exhausted = true;
      } else {
        V.col(j + 1) = f / fn;
      }
    }

    if (m < next_check && !breakdown && m != max_basis) continue;
    next_check = std::min(max_basis, m + std::max(8, m / 8));
    if (m < want + 1 && m < max_basis && !exhausted) continue;

    tri.computeFromTridiagonal(alpha.head(m), beta.head(std::max(m - 1, 0)),
                               Eigen::EigenvaluesOnly);
    const VectorXd theta = tri.eigenvalues();
    scale = std::max({std::abs(theta[0]), std::abs(theta[m - 1]), 1e-300});

    bool stable = false;
    if (m >= want) {
      VectorXd wanted(want);
      for (int i = 0; i < d; ++i) wanted[i] = theta[i];
      wanted[d] = theta[m - 1];
      if (prev_wanted.size() == want)
        stable = ((wanted - prev_wanted).cwiseAbs().maxCoeff() <=
                  0.05 * opts.tolerance * scale);
      prev_wanted = wanted;
    }
    if (m < want) continue;
    if (!stable && m < max_basis && !exhausted && !breakdown) continue;

    // Candidate converged: form the wanted Ritz vectors and verify the
    // residuals against A itself.
    tri.computeFromTridiagonal(alpha.head(m), beta.head(std::max(m - 1, 0)),
                               Eigen::ComputeEigenvectors);
    VectorXd values(want);
    MatrixXd ritz(n, want);
    for (int i = 0; i < d; ++i) {
      values[i] = tri.eigenvalues()[i];
      ritz.col(i) = V.leftCols(m) * tri.eigenvectors().col(i);
    }
    values[d] = tri.eigenvalues()[m - 1];
    ritz.col(d) = V.leftCols(m) * tri.eigenvectors().col(m - 1);

    VectorXd residuals(want);
    for (int i = 0; i < want; ++i)
      residuals[i] = (A * ritz.col(i) - values[i] * ritz.col(i)).norm();

    if (residuals.maxCoeff() <= opts.tolerance * scale) {
      EigenSystem sys;
      sys.top_value = values[d];
      sys.top_vector = ritz.col(d);
      sys.bottom_values.resize(d);
      sys.bottom_vectors.resize(n, d);
      for (int i = 0; i < d; ++i) {
        sys.bottom_values[i] = values[d - 1 - i];
        sys.bottom_vectors.col(i) = ritz.col(d - 1 - i);
      }
      normalize_signs(sys);
      return sys;
    }

    if (m == max_basis || exhausted) {
      std::ostringstream msg;
      msg << "Lanczos did not reach residual tolerance "
          << opts.tolerance * scale << " after " << m
          << " iterations; worst residual " << residuals.maxCoeff();
      throw EigsConvergenceError(msg.str(), residuals);
    }
  }

  throw EigsConvergenceError("Lanczos iteration budget exhausted",
                             VectorXd());
}

}  // namespace

EigenSystem reduced_eigensystem(const Eigen::MatrixXd& A, int d,
                                const EigsOptions& opts) {
  const int n = static_cast<int>(A.rows());
  if (A.rows() != A.cols())
    throw std::invalid_argument("reduced_eigensystem: matrix must be square");
  if (d < 1 || d > n - 1)
    throw std::invalid_argument(
        "reduced_eigensystem: need 1 <= d <= n - 1");
  if (n <= opts.dense_threshold) return dense_eigensystem(A, d);
  return lanczos_eigensystem(A, d, opts);
}

}  // namespace hydra
