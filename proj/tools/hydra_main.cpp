#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "hydra/commands.hpp"

namespace {

hydra::InputType parse_input_type(const std::string& s) {
  if (s == "edgelist") return hydra::InputType::EdgeList;
  if (s == "distmatrix") return hydra::InputType::DistMatrix;
  throw CLI::ValidationError("--input-type must be edgelist or distmatrix");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hydra: strain-minimizing hyperbolic embedding of networks "
               "and distance matrices"};
  app.require_subcommand(1);

  std::string method = "hydra";
  std::string input_path;
  std::string input_type = "edgelist";
  std::string coords_path;
  std::string out_coords = "coords.csv";
  std::string out_report = "report.txt";
  std::string out_svg = "plot.svg";
  int dim = 2;
  double kappa = 1.0;
  double equi_lambda = 0.5;
  unsigned seed = 1;
  int max_iter = 1000;
  double grad_tol = 1e-8;
  int repeats = 0;  // 0 = per-command default
  std::vector<int> sizes;
  int edges_per_node = 2;

  auto* embed = app.add_subcommand("embed", "Embed a network or distance matrix");
  embed->add_option("--input", input_path, "Input file")->required();
  embed->add_option("--input-type", input_type,
                    "Input format: edgelist or distmatrix");
  embed->add_option("--method", method,
                    "hydra | hydra-equi | hydra-plus | mds | stress-random");
  embed->add_option("--dim", dim, "Embedding dimension");
  embed->add_option("--curvature", kappa, "Curvature parameter kappa");
  embed->add_option("--equi-lambda", equi_lambda,
                    "Equiangular adjustment weight in [0, 1]");
  embed->add_option("--seed", seed, "Random seed");
  embed->add_option("--max-iter", max_iter, "Optimizer iteration cap");
  embed->add_option("--grad-tol", grad_tol, "Optimizer gradient tolerance");
  embed->add_option("--repeats", repeats,
                    "Random restarts for stress-random (default 20)");
  embed->add_option("--out-coords", out_coords, "Coordinate CSV output path");
  embed->add_option("--out-report", out_report, "Report output path");

  auto* eval = app.add_subcommand("eval", "Re-evaluate stored coordinates");
  eval->add_option("--coords", coords_path, "Coordinate CSV")->required();
  eval->add_option("--input", input_path, "Input file")->required();
  eval->add_option("--input-type", input_type,
                   "Input format: edgelist or distmatrix");
  eval->add_option("--curvature", kappa, "Curvature parameter kappa");
  eval->add_option("--method", method,
                   "Evaluation geometry: mds = Euclidean, else Poincare");
  eval->add_option("--out-report", out_report, "Report output path (optional)");

  auto* plot = app.add_subcommand("plot", "Render d = 2 coordinates as SVG");
  plot->add_option("--coords", coords_path, "Coordinate CSV")->required();
  plot->add_option("--input", input_path,
                   "Edge list; a seeded subsample of edges is drawn");
  plot->add_option("--seed", seed, "Random seed for edge sampling");
  plot->add_option("--edges-per-node", edges_per_node,
                   "Incident edges sampled per node");
  plot->add_option("--out-svg", out_svg, "SVG output path");

  auto* bench = app.add_subcommand("bench", "Time a method on synthetic graphs");
  bench->add_option("--sizes", sizes, "Graph sizes, e.g. 200,400,800,1600")
      ->required()
      ->delimiter(',');
  bench->add_option("--method", method,
                    "hydra | hydra-equi | hydra-plus | mds | stress-random | "
                    "stub");
  bench->add_option("--dim", dim, "Embedding dimension");
  bench->add_option("--curvature", kappa, "Curvature parameter kappa");
  bench->add_option("--seed", seed, "Random seed for graph generation");
  bench->add_option("--repeats", repeats, "Timed runs per size (default 3)");
  bench->add_option("--max-iter", max_iter, "Optimizer iteration cap");
  bench->add_option("--grad-tol", grad_tol, "Optimizer gradient tolerance");

  CLI11_PARSE(app, argc, argv);

  try {
    hydra::OptimizerSettings optimizer;
    optimizer.max_iterations = max_iter;
    optimizer.gradient_tolerance = grad_tol;
    optimizer.seed = seed;

    if (embed->parsed()) {
      hydra::RunConfig config;
      config.method = hydra::parse_method(method);
      config.input_path = input_path;
      config.input_type = parse_input_type(input_type);
      config.dim = dim;
      config.kappa = kappa;
      config.equi_lambda = equi_lambda;
      config.seed = seed;
      config.optimizer = optimizer;
      config.repeats = repeats > 0 ? repeats : 20;
      config.out_coords = out_coords;
      config.out_report = out_report;
      const hydra::RunReport report = hydra::cmd_embed(config);
      std::cout << report.to_text();
    } else if (eval->parsed()) {
      const hydra::RunReport report = hydra::cmd_eval(
          coords_path, input_path, parse_input_type(input_type), kappa,
          hydra::parse_method(method),
          eval->count("--out-report") ? out_report : "");
      std::cout << report.to_text();
    } else if (plot->parsed()) {
      hydra::PlotOptions opts;
      opts.seed = seed;
      opts.edges_per_node = edges_per_node;
      hydra::cmd_plot(coords_path, input_path, opts, out_svg);
      std::cout << "wrote " << out_svg << '\n';
    } else if (bench->parsed()) {
      hydra::BenchConfig config;
      config.sizes = sizes;
      config.method = method;
      config.seed = seed;
      config.repeats = repeats > 0 ? repeats : 3;
      config.dim = dim;
      config.kappa = kappa;
      config.optimizer = optimizer;
      hydra::cmd_bench(config, std::cout);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
