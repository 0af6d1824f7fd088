#include <doctest.h>

#include <cmath>
#include <random>

#include "hydra/bench.hpp"
#include "hydra/embed.hpp"
#include "hydra/graph.hpp"
#include "support.hpp"

using namespace hydra;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

DistanceMatrix two_point(double t) {
  MatrixXd D(2, 2);
  D << 0.0, t, t, 0.0;
  return DistanceMatrix(D);
}

const Curvature kUnit(1.0);

}  // namespace

TEST_CASE("cosh matrix construction") {
  MatrixXd D(2, 2);
  D << 0.0, 2.0, 2.0, 0.0;
  const CoshGramMatrix A = build_cosh_matrix(DistanceMatrix(D), kUnit);
  CHECK(A.entries()(0, 0) == 1.0);
  CHECK(A.entries()(1, 1) == 1.0);
  CHECK(A.entries()(0, 1) == doctest::Approx(std::cosh(2.0)).epsilon(1e-12));

  // sqrt(kappa) * d is what enters
  MatrixXd D2(2, 2);
  D2 << 0.0, 1.0, 1.0, 0.0;
  const CoshGramMatrix A2 = build_cosh_matrix(DistanceMatrix(D2), Curvature(4.0));
  CHECK(A2.entries()(0, 1) == doctest::Approx(std::cosh(2.0)).epsilon(1e-12));

  SUBCASE("overflow guard names the entry") {
    MatrixXd big(2, 2);
    big << 0.0, 800.0, 800.0, 0.0;
    try {
      build_cosh_matrix(DistanceMatrix(big), kUnit);
      FAIL("expected overflow rejection");
    } catch (const std::domain_error& e) {
      const std::string msg = e.what();
      CHECK(msg.find("(0, 1)") != std::string::npos);
      CHECK(msg.find("kappa") != std::string::npos);
    }
  }
}

TEST_CASE("distance matrix validation") {
  MatrixXd asym(2, 2);
  asym << 0.0, 1.0, 1.1, 0.0;
  CHECK_THROWS_AS(DistanceMatrix(asym), std::invalid_argument);

  MatrixXd diag(2, 2);
  diag << 0.5, 1.0, 1.0, 0.0;
  CHECK_THROWS_AS(DistanceMatrix(diag), std::invalid_argument);

  MatrixXd neg(2, 2);
  neg << 0.0, -1.0, -1.0, 0.0;
  CHECK_THROWS_AS(DistanceMatrix(neg), std::invalid_argument);
}

TEST_CASE("coordinate assembly in the two-point closed form") {
  const double t = 2.3;
  const double c = std::cosh(t);
  const CoshGramMatrix A = build_cosh_matrix(two_point(t), kUnit);
  const EigenSystem E = eigendecompose_reduced(A, 1);
  const HyperboloidConfig X = assemble_coordinates(E, 1, kUnit);

  const double time = std::sqrt((1.0 + c) / 2.0);
  const double space = std::sqrt((c - 1.0) / 2.0);
  CHECK(X.coords()(0, 0) == doctest::Approx(time).epsilon(1e-12));
  CHECK(X.coords()(1, 0) == doctest::Approx(time).epsilon(1e-12));
  CHECK(X.coords()(0, 1) == doctest::Approx(space).epsilon(1e-12));
  CHECK(X.coords()(1, 1) == doctest::Approx(-space).epsilon(1e-12));
  CHECK(lorentz_product(X.row(0), X.row(1)) == doctest::Approx(c).epsilon(1e-12));
}

TEST_CASE("positive trailing eigenvalues produce zero spatial columns") {
  // all-zero distances: spectrum (n, 0, 0), both trailing values >= 0
  const DistanceMatrix D(MatrixXd::Zero(3, 3));
  const HydraResult hr = hydra(D, 2, kUnit);
  CHECK(hr.config.coords().rightCols(2).cwiseAbs().maxCoeff() == 0.0);
  CHECK(hr.warnings.size() == 3);  // every direction is degenerate
  for (const auto& p : hr.embedding.points) CHECK(p.direction[0] == 1.0);
}

TEST_CASE("directional projection") {
  MatrixXd coords(2, 3);
  coords << 5.0, 3.0, 4.0, 5.0, 0.0, 0.0;
  const HyperboloidConfig X(coords, kUnit);
  const DirectionalProjection dir = directional_projection(X);
  CHECK(dir.directions(0, 0) == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(dir.directions(0, 1) == doctest::Approx(0.8).epsilon(1e-15));
  CHECK_FALSE(dir.degenerate[0]);
  CHECK(dir.directions(1, 0) == 1.0);
  CHECK(dir.directions(1, 1) == 0.0);
  CHECK(dir.degenerate[1]);
}

TEST_CASE("radial projection") {
  SUBCASE("minimum above one rescales to zero radius") {
    MatrixXd coords(2, 2);
    coords << 1.0, 0.0, std::cosh(1.0), std::sinh(1.0);
    const auto r = radial_projection(HyperboloidConfig(coords, kUnit));
    CHECK(r[0] == 0.0);
    CHECK(r[1] == doctest::Approx(std::tanh(0.5)).epsilon(1e-12));
  }
  SUBCASE("first coordinates below one are valid") {
    MatrixXd coords(2, 2);
    coords << 0.5, 0.0, 2.0, 0.0;
    const auto r = radial_projection(HyperboloidConfig(coords, kUnit));
    CHECK(r[0] == 0.0);
    CHECK(r[1] == doctest::Approx(std::sqrt(1.5 / 2.5)).epsilon(1e-12));
  }
  SUBCASE("constant first column keeps x_min = 1") {
    const double c = 2.5;
    MatrixXd coords(3, 2);
    coords << c, 0.1, c, -0.4, c, 0.2;
    const auto r = radial_projection(HyperboloidConfig(coords, kUnit));
    for (double ri : r)
      CHECK(ri == doctest::Approx(std::sqrt((c - 1.0) / (c + 1.0))).epsilon(1e-12));
  }
}

TEST_CASE("hydra on two points reproduces the distance") {
  const HydraResult hr = hydra(two_point(3.0), 1, kUnit);
  CHECK(poincare_distance(hr.embedding.points[0], hr.embedding.points[1],
                          kUnit) == doctest::Approx(3.0).epsilon(1e-9));
}

TEST_CASE("unit triangle embeds with zero strain in d = 2") {
  MatrixXd D(3, 3);
  D << 0, 1, 1, 1, 0, 1, 1, 1, 0;
  const HydraResult hr = hydra(DistanceMatrix(D), 2, kUnit);
  CHECK(strain(hr.config, DistanceMatrix(D), kUnit) ==
        doctest::Approx(0.0).epsilon(0).scale(1e-12));

  // circulant spectrum: 1 + 2 cosh(1), then 1 - cosh(1) twice
  const VectorXd spectrum = testsupport::full_spectrum_descending(
      build_cosh_matrix(DistanceMatrix(D), kUnit).entries());
  CHECK(spectrum[0] == doctest::Approx(1.0 + 2.0 * std::cosh(1.0)));
  CHECK(spectrum[1] == doctest::Approx(1.0 - std::cosh(1.0)));
  CHECK(spectrum[2] == doctest::Approx(1.0 - std::cosh(1.0)));
  CHECK(optimal_strain_value(spectrum, 2) == 0.0);
}

TEST_CASE("exact recovery of hyperboloid samples") {
  for (const int d : {1, 2, 3}) {
    for (const int n : {5, 50}) {
      const MatrixXd Y = testsupport::sample_hyperboloid_spatial(
          n, d, std::sinh(2.0), 0.05, 900 + 10 * d + n);
      const auto pts = testsupport::lift_spatial(Y);
      const DistanceMatrix D =
          testsupport::pairwise_hyperbolic_distances(pts, kUnit);
      const HydraResult hr = hydra(D, d, kUnit);

      // recovered Lorentz products match the cosh-Gram matrix
      const CoshGramMatrix A = build_cosh_matrix(D, kUnit);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          CHECK(lorentz_product(hr.config.row(i), hr.config.row(j)) ==
                doctest::Approx(A.entries()(i, j)).epsilon(1e-8));

      // and the ball embedding reproduces every pairwise distance
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          CHECK(std::abs(poincare_distance(hr.embedding.points[i],
                                           hr.embedding.points[j], kUnit) -
                         D(i, j)) < 1e-7);

      CHECK(strain(hr.config, D, kUnit) < 1e-8);
      CHECK((hr.config.coords().col(0).array() > 0.0).all());
    }
  }
}

TEST_CASE("strain bookkeeping") {
  const double t = 1.4;
  const double c = std::cosh(t);

  SUBCASE("exact two-point configuration has zero strain") {
    const HydraResult hr = hydra(two_point(t), 1, kUnit);
    CHECK(strain(hr.config, two_point(t), kUnit) ==
          doctest::Approx(0.0).epsilon(0).scale(1e-14));
  }

  SUBCASE("single off-diagonal mismatch counts twice") {
    const double delta = 0.37;
    // hyperboloid pair at distance t' with cosh(t') = cosh(t) - delta
    const double t_prime = std::acosh(c - delta);
    MatrixXd coords(2, 2);
    coords << 1.0, 0.0, std::cosh(t_prime), std::sinh(t_prime);
    const HyperboloidConfig X(coords, kUnit);
    CHECK(strain(X, two_point(t), kUnit) ==
          doctest::Approx(2.0 * delta * delta).epsilon(1e-10));
  }
}

TEST_CASE("optimal strain value formula") {
  VectorXd ev(3);
  ev << 5.0, 2.0, -1.0;
  CHECK(optimal_strain_value(ev, 1) == doctest::Approx(4.0));
  CHECK_THROWS_AS(optimal_strain_value(ev, 0), std::invalid_argument);
  CHECK_THROWS_AS(optimal_strain_value(ev, 3), std::invalid_argument);

  // exact hyperbolic spectra sit at zero
  const auto pts = testsupport::lift_spatial(
      testsupport::sample_hyperboloid_spatial(12, 2, std::sinh(1.5), 0.05, 3));
  const DistanceMatrix D = testsupport::pairwise_hyperbolic_distances(pts, kUnit);
  const VectorXd spectrum = testsupport::full_spectrum_descending(
      build_cosh_matrix(D, kUnit).entries());
  CHECK(optimal_strain_value(spectrum, 2) ==
        doctest::Approx(0.0).epsilon(0).scale(1e-10));
}

TEST_CASE("hydra attains the global strain minimum") {
  std::mt19937 gen(77);
  for (int trial = 0; trial < 5; ++trial) {
    const int n = 12;
    const int d = 2;
    const DistanceMatrix D =
        testsupport::random_distance_matrix(n, 500 + trial);
    const HydraResult hr = hydra(D, d, kUnit);
    const double achieved = strain(hr.config, D, kUnit);

    const VectorXd spectrum = testsupport::full_spectrum_descending(
        build_cosh_matrix(D, kUnit).entries());
    const double optimum = optimal_strain_value(spectrum, d);
    CHECK(std::abs(achieved - optimum) <= 1e-6 * std::max(optimum, 1e-12));

    for (int z = 0; z < 50; ++z) {
      const MatrixXd Y = testsupport::sample_hyperboloid_spatial(
          n, d, std::sinh(1.5), 0.0, gen());
      MatrixXd coords(n, d + 1);
      for (int i = 0; i < n; ++i)
        coords.row(i) = testsupport::lift_spatial(Y)[i].coords;
      CHECK(achieved <= strain(HyperboloidConfig(coords, kUnit), D, kUnit) +
                            1e-9 * std::max(1.0, achieved));
    }
  }
}

TEST_CASE("Lorentzian Gram signature") {
  std::mt19937 gen(31);
  std::uniform_int_distribution<int> pick_n(2, 16);
  std::uniform_int_distribution<int> pick_d(1, 4);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = pick_n(gen);
    const int d = pick_d(gen);
    const auto pts = testsupport::lift_spatial(
        testsupport::sample_hyperboloid_spatial(n, d, std::sinh(1.5), 0.0,
                                                gen()));
    const MatrixXd G = testsupport::lorentz_gram(pts);
    const VectorXd spectrum = testsupport::full_spectrum_descending(G);
    const double threshold = 1e-8 * spectrum.cwiseAbs().maxCoeff();
    const int positives = (spectrum.array() > threshold).count();
    const int negatives = (spectrum.array() < -threshold).count();
    CHECK(positives == 1);
    CHECK(negatives <= d);
  }
}

TEST_CASE("reduced and dense solvers give the same strain") {
  const Graph g = random_connected_graph(160, 2024);
  const DistanceMatrix D = shortest_path_matrix(g);

  HydraOptions iterative;
  iterative.eigs.dense_threshold = 0;
  HydraOptions dense;
  dense.eigs.dense_threshold = 1 << 20;

  const double s_iter = strain(hydra(D, 2, kUnit, iterative).config, D, kUnit);
  const double s_dense = strain(hydra(D, 2, kUnit, dense).config, D, kUnit);
  CHECK(std::abs(s_iter - s_dense) <= 1e-8 * std::max(s_dense, 1.0));
}
