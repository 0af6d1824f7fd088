#include "hydra/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <unordered_map>

#include "hydra/io.hpp"
#include "hydra/mds.hpp"

namespace hydra {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(const Clock::time_point& t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct LoadedInput {
  std::vector<std::string> labels;
  DistanceMatrix D;
};

LoadedInput load_input(const std::string& path, InputType type) {
  if (type == InputType::EdgeList) {
    EdgeListResult el = load_edge_list_file(path);
    return LoadedInput{el.graph.node_labels,
                       shortest_path_matrix(el.graph)};
  }
  DistanceMatrix D = load_distance_csv(path);
  std::vector<std::string> labels;
  labels.reserve(D.n());
  for (int i = 0; i < D.n(); ++i) labels.push_back(std::to_string(i));
  return LoadedInput{std::move(labels), std::move(D)};
}

struct Metrics {
  double stress = 0.0;
  double strain = 0.0;
};

// Stress and strain of coordinates exactly as stored in the table, so
// that embedding reports and later evaluations of the written file
// agree bit-for-bit (modulo the text round trip, which is exact).
Metrics evaluate_table(const CoordinateTable& table, const DistanceMatrix& D,
                       double kappa, bool euclidean) {
  Metrics m;
  if (euclidean) {
    const Eigen::MatrixXd X = table.cartesian();
    double f = 0.0;
    for (int i = 0; i < D.n(); ++i)
      for (int j = i + 1; j < D.n(); ++j) {
        const double r = D(i, j) - (X.row(i) - X.row(j)).norm();
        f += 2.0 * r * r;
      }
    m.stress = std::sqrt(f);
    m.strain = euclidean_strain(EuclideanConfig{X}, D);
    return m;
  }
  const Curvature k(kappa);
  const std::vector<BallPoint> pts = table.to_ball_points();
  std::vector<LorentzVector> lifted;
  lifted.reserve(pts.size());
  Eigen::MatrixXd rows(table.n(), table.dim + 1);
  for (int i = 0; i < table.n(); ++i) {
    lifted.push_back(lift_to_hyperboloid(pts[i]));
    rows.row(i) = lifted.back().coords;
  }
  m.stress = stress(lifted, D, k);
  m.strain = strain(HyperboloidConfig(std::move(rows), k), D, k);
  return m;
}

CoordinateTable embedding_table(const std::vector<std::string>& labels,
                                const PoincareEmbedding& E) {
  return CoordinateTable::from_embedding(labels, E);
}

PoincareEmbedding embedding_from_params(const SpatialParametrization& Y,
                                        const Curvature& k) {
  std::vector<BallPoint> points;
  points.reserve(Y.n());
  for (int i = 0; i < Y.n(); ++i)
    points.push_back(stereographic_project(Y.lift_row(i)));
  return PoincareEmbedding(std::move(points), k, Y.dim());
}

// Interpolating sample quantile of sorted values (R default type 7).
double quantile(std::vector<double> sorted, double q) {
  const double h = q * (static_cast<double>(sorted.size()) - 1.0);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  if (lo + 1 >= sorted.size()) return sorted.back();
  return sorted[lo] + (h - lo) * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace

Method parse_method(const std::string& name) {
  if (name == "hydra") return Method::Hydra;
  if (name == "hydra-equi") return Method::HydraEqui;
  if (name == "hydra-plus") return Method::HydraPlus;
  if (name == "mds") return Method::Mds;
  if (name == "stress-random") return Method::StressRandom;
  throw std::invalid_argument("unknown method: " + name);
}

std::string method_name(Method m) {
  switch (m) {
    case Method::Hydra: return "hydra";
    case Method::HydraEqui: return "hydra-equi";
    case Method::HydraPlus: return "hydra-plus";
    case Method::Mds: return "mds";
    case Method::StressRandom: return "stress-random";
  }
  throw std::logic_error("unreachable");
}

std::string RunReport::to_text() const {
  std::ostringstream out;
  out << "method " << method << '\n';
  out << "n " << n << '\n';
  out << "dim " << dim << '\n';
  out << "kappa " << format_double(kappa) << '\n';
  out << "strain " << format_double(strain) << '\n';
  out << "stress " << format_double(stress) << '\n';
  out << "wall_time_seconds " << format_double(wall_time_seconds) << '\n';
  out << "converged " << (converged ? "true" : "false") << '\n';
  for (const auto& [key, value] : extra) out << key << ' ' << value << '\n';
  for (const auto& w : warnings) out << "warning " << w << '\n';
  return out.str();
}

void RunReport::save(const std::string& path) const {
  atomic_write_file(path, to_text());
}

RunReport RunReport::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open report: " + path);
  RunReport rep;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto space = line.find(' ');
    const std::string key = line.substr(0, space);
    const std::string value =
        space == std::string::npos ? "" : line.substr(space + 1);
    if (key == "method") rep.method = value;
    else if (key == "n") rep.n = std::stoi(value);
    else if (key == "dim") rep.dim = std::stoi(value);
    else if (key == "kappa") rep.kappa = std::stod(value);
    else if (key == "strain") rep.strain = std::stod(value);
    else if (key == "stress") rep.stress = std::stod(value);
    else if (key == "wall_time_seconds") rep.wall_time_seconds = std::stod(value);
    else if (key == "converged") rep.converged = (value == "true");
    else if (key == "warning") rep.warnings.push_back(value);
    else rep.extra.emplace_back(key, value);
  }
  return rep;
}

RunReport cmd_embed(const RunConfig& config) {
  if (config.dim < 1) throw std::invalid_argument("dim must be >= 1");
  const LoadedInput input = load_input(config.input_path, config.input_type);
  const Curvature k(config.kappa);

  RunReport rep;
  rep.method = method_name(config.method);
  rep.n = input.D.n();
  rep.dim = config.dim;
  rep.kappa = config.kappa;

  CoordinateTable table;
  const auto t0 = Clock::now();
  switch (config.method) {
    case Method::Hydra: {
      HydraResult hr = hydra(input.D, config.dim, k);
      rep.warnings = hr.warnings;
      table = embedding_table(input.labels, hr.embedding);
      break;
    }
    case Method::HydraEqui: {
      if (config.dim != 2)
        throw std::invalid_argument("hydra-equi requires dim == 2");
      HydraResult hr = hydra(input.D, config.dim, k);
      rep.warnings = hr.warnings;
      const PoincareEmbedding adjusted =
          equiangular_adjust(hr.embedding, config.equi_lambda);
      table = embedding_table(input.labels, adjusted);
      break;
    }
    case Method::HydraPlus: {
      HydraPlusResult hp = hydra_plus(input.D, config.dim, k,
                                      config.optimizer, config.equi_lambda);
      rep.warnings = hp.warnings;
      rep.converged = hp.converged;
      rep.extra.emplace_back("initial_stress",
                             format_double(hp.initial_stress));
      rep.extra.emplace_back("iterations", std::to_string(hp.iterations));
      table = embedding_table(input.labels, hp.embedding);
      break;
    }
    case Method::Mds: {
      EuclideanConfig X = classic_mds(input.D, config.dim);
      table = CoordinateTable::from_cartesian(input.labels, X.coords);
      break;
    }
    case Method::StressRandom: {
      if (config.repeats < 1)
        throw std::invalid_argument("stress-random requires repeats >= 1");
      std::vector<double> finals;
      finals.reserve(config.repeats);
      double best_stress = std::numeric_limits<double>::infinity();
      bool best_converged = false;
      Eigen::MatrixXd best_params;
      for (int rep_i = 0; rep_i < config.repeats; ++rep_i) {
        std::mt19937 gen(config.seed + static_cast<unsigned>(rep_i));
        std::uniform_real_distribution<double> uni(-1.0, 1.0);
        Eigen::MatrixXd Y0(input.D.n(), config.dim);
        for (int i = 0; i < Y0.rows(); ++i)
          for (int j = 0; j < Y0.cols(); ++j) Y0(i, j) = uni(gen);
        MinimizeResult mr = minimize_stress(SpatialParametrization(Y0),
                                            input.D, k, config.optimizer);
        finals.push_back(mr.stress);
        if (mr.stress < best_stress) {
          best_stress = mr.stress;
          best_converged = mr.converged;
          best_params = mr.params.params();
        }
      }
      std::vector<double> sorted = finals;
      std::sort(sorted.begin(), sorted.end());
      const double mean =
          std::accumulate(finals.begin(), finals.end(), 0.0) / finals.size();
      rep.converged = best_converged;
      rep.extra.emplace_back("repeats", std::to_string(config.repeats));
      rep.extra.emplace_back("stress_mean", format_double(mean));
      rep.extra.emplace_back("stress_q05",
                             format_double(quantile(sorted, 0.05)));
      rep.extra.emplace_back("stress_q95",
                             format_double(quantile(sorted, 0.95)));
      table = embedding_table(
          input.labels,
          embedding_from_params(SpatialParametrization(best_params), k));
      break;
    }
  }
  rep.wall_time_seconds = seconds_since(t0);

  const Metrics m = evaluate_table(table, input.D, config.kappa,
                                   config.method == Method::Mds);
  rep.stress = m.stress;
  rep.strain = m.strain;

  write_coordinate_csv(config.out_coords, table);
  rep.save(config.out_report);
  return rep;
}

RunReport cmd_eval(const std::string& coords_path,
                   const std::string& input_path, InputType input_type,
                   double kappa, Method eval_method,
                   const std::string& out_report) {
  const CoordinateTable table = read_coordinate_csv(coords_path);
  const LoadedInput input = load_input(input_path, input_type);
  if (table.n() != input.D.n()) {
    std::ostringstream msg;
    msg << "node-set mismatch: coordinates hold " << table.n()
        << " nodes, input holds " << input.D.n();
    throw std::runtime_error(msg.str());
  }
  std::unordered_map<std::string, int> input_index;
  for (int i = 0; i < input.D.n(); ++i) input_index.emplace(input.labels[i], i);
  std::vector<int> perm(table.n());
  for (int i = 0; i < table.n(); ++i) {
    const auto it = input_index.find(table.labels[i]);
    if (it == input_index.end())
      throw std::runtime_error("node-set mismatch: coordinate node '" +
                               table.labels[i] + "' not present in input");
    perm[i] = it->second;
  }
  Eigen::MatrixXd reordered(table.n(), table.n());
  for (int i = 0; i < table.n(); ++i)
    for (int j = 0; j < table.n(); ++j)
      reordered(i, j) = input.D(perm[i], perm[j]);
  const DistanceMatrix D(std::move(reordered));

  const auto t0 = Clock::now();
  const Metrics m =
      evaluate_table(table, D, kappa, eval_method == Method::Mds);

  RunReport rep;
  rep.method = method_name(eval_method);
  rep.n = table.n();
  rep.dim = table.dim;
  rep.kappa = kappa;
  rep.stress = m.stress;
  rep.strain = m.strain;
  rep.wall_time_seconds = seconds_since(t0);
  if (!out_report.empty()) rep.save(out_report);
  return rep;
}

void cmd_plot(const std::string& coords_path, const std::string& edges_path,
              const PlotOptions& opts, const std::string& out_svg) {
  const CoordinateTable table = read_coordinate_csv(coords_path);
  if (table.dim != 2)
    throw std::runtime_error("plot requires d = 2 coordinates");
  const std::vector<BallPoint> pts = table.to_ball_points();
  std::vector<Eigen::Vector2d> points;
  points.reserve(pts.size());
  for (const auto& p : pts) points.emplace_back(p.cartesian());

  std::vector<std::pair<int, int>> edges;
  if (!edges_path.empty()) {
    const EdgeListResult el = load_edge_list_file(edges_path);
    std::unordered_map<std::string, int> row_of;
    for (int i = 0; i < table.n(); ++i) row_of.emplace(table.labels[i], i);
    std::vector<int> to_row(el.graph.node_count());
    for (int i = 0; i < el.graph.node_count(); ++i) {
      const auto it = row_of.find(el.graph.node_labels[i]);
      if (it == row_of.end())
        throw std::runtime_error("edge list node '" +
                                 el.graph.node_labels[i] +
                                 "' has no stored coordinates");
      to_row[i] = it->second;
    }
    for (const auto& [u, v] :
         sample_incident_edges(el.graph, opts.edges_per_node, opts.seed))
      edges.emplace_back(to_row[u], to_row[v]);
  }

  atomic_write_file(out_svg, render_disc_svg(points, edges, opts));
}

BenchResult cmd_bench(const BenchConfig& config, std::ostream& out) {
  const Curvature k(config.kappa);
  const int dim = config.dim;
  std::function<void(const DistanceMatrix&)> fn;
  if (config.method == "stub") {
    // Constant-work reference for harness self-tests.
    fn = [](const DistanceMatrix&) {
      const auto t0 = Clock::now();
      volatile double sink = 0.0;
      while (seconds_since(t0) < 2e-3) sink = sink + 1.0;
    };
  } else if (config.method == "mds") {
    fn = [dim](const DistanceMatrix& D) { classic_mds(D, dim); };
  } else if (config.method == "hydra") {
    fn = [dim, k](const DistanceMatrix& D) { hydra(D, dim, k); };
  } else if (config.method == "hydra-equi") {
    fn = [dim, k, &config](const DistanceMatrix& D) {
      equiangular_adjust(hydra(D, dim, k).embedding, config.equi_lambda);
    };
  } else if (config.method == "hydra-plus") {
    fn = [dim, k, &config](const DistanceMatrix& D) {
      hydra_plus(D, dim, k, config.optimizer, config.equi_lambda);
    };
  } else if (config.method == "stress-random") {
    fn = [dim, k, &config](const DistanceMatrix& D) {
      std::mt19937 gen(config.seed);
      std::uniform_real_distribution<double> uni(-1.0, 1.0);
      Eigen::MatrixXd Y0(D.n(), dim);
      for (int i = 0; i < Y0.rows(); ++i)
        for (int j = 0; j < Y0.cols(); ++j) Y0(i, j) = uni(gen);
      minimize_stress(SpatialParametrization(Y0), D, k, config.optimizer);
    };
  } else {
    throw std::invalid_argument("unknown benchmark method: " + config.method);
  }

  const BenchResult result =
      run_benchmark(config.sizes, fn, config.seed, config.repeats);
  out << "n,seconds\n";
  for (const auto& row : result.rows)
    out << row.n << ',' << format_double(row.seconds) << '\n';
  out << "alpha " << format_double(result.alpha) << '\n';
  return result;
}

}  // namespace hydra
