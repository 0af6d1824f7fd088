#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "hydra/bench.hpp"
#include "hydra/optimize.hpp"
#include "hydra/plot.hpp"

namespace hydra {

enum class Method { Hydra, HydraEqui, HydraPlus, Mds, StressRandom };
enum class InputType { EdgeList, DistMatrix };

Method parse_method(const std::string& name);
std::string method_name(Method m);

struct RunConfig {
  Method method = Method::Hydra;
  std::string input_path;
  InputType input_type = InputType::EdgeList;
  int dim = 2;
  double kappa = 1.0;
  double equi_lambda = 0.5;
  unsigned seed = 1;
  OptimizerSettings optimizer;
  int repeats = 20;  // random-restart runs for the stress-random arm
  std::string out_coords = "coords.csv";
  std::string out_report = "report.txt";
};

/// Key-value run summary, serialized one "key value" pair per line.
struct RunReport {
  std::string method;
  int n = 0;
  int dim = 0;
  double kappa = 1.0;
  double strain = 0.0;
  double stress = 0.0;
  double wall_time_seconds = 0.0;
  bool converged = true;
  std::vector<std::string> warnings;
  std::vector<std::pair<std::string, std::string>> extra;

  std::string to_text() const;
  void save(const std::string& path) const;
  static RunReport load(const std::string& path);
};

/// Runs the configured embedding method, writes the coordinate CSV and
/// the report (both atomically), and returns the report. Reported
/// stress/strain are computed from the coordinates exactly as written,
/// so a later cmd_eval of the output reproduces them.
RunReport cmd_embed(const RunConfig& config);

/// Recomputes stress and strain for stored coordinates against an
/// input. eval_method selects the geometry: Mds evaluates Euclidean
/// coordinates, everything else evaluates Poincare coordinates.
RunReport cmd_eval(const std::string& coords_path,
                   const std::string& input_path, InputType input_type,
                   double kappa, Method eval_method = Method::Hydra,
                   const std::string& out_report = "");

/// Renders stored d = 2 coordinates (and a seeded subsample of edges,
/// when an edge list is given) as an SVG Poincare disc.
void cmd_plot(const std::string& coords_path, const std::string& edges_path,
              const PlotOptions& opts, const std::string& out_svg);

struct BenchConfig {
  std::vector<int> sizes;
  std::string method = "hydra";  // embedding methods plus "stub"
  unsigned seed = 1;
  int repeats = 3;
  int dim = 2;
  double kappa = 1.0;
  double equi_lambda = 0.5;
  OptimizerSettings optimizer;
};

/// Times the method on synthetic graphs per size, prints one table row
/// per size plus the fitted exponent, and returns the measurements.
BenchResult cmd_bench(const BenchConfig& config, std::ostream& out);

}  // namespace hydra
