#include "hydra/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hydra {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) fields.push_back(field);
  return fields;
}

double parse_double(const std::string& token, const std::string& context) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(token, &pos);
    while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos])))
      ++pos;
    if (pos != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error(context + ": cannot parse number '" + token + "'");
  }
}

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  for (int precision = 15; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

void atomic_write_file(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    if (!out.good()) throw std::runtime_error("write failed: " + tmp.string());
  }
  fs::rename(tmp, target);
}

DistanceMatrix load_distance_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open distance matrix: " + path);

  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (line.empty()) continue;
    std::vector<double> row;
    std::ostringstream ctx;
    ctx << path << " line " << line_no;
    for (const auto& field : split(line, ','))
      row.push_back(parse_double(field, ctx.str()));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::runtime_error(path + ": empty distance matrix");
  const std::size_t n = rows.size();
  Eigen::MatrixXd D(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      std::ostringstream msg;
      msg << path << ": row " << i + 1 << " has " << rows[i].size()
          << " columns, expected " << n;
      throw std::runtime_error(msg.str());
    }
    for (std::size_t j = 0; j < n; ++j) D(i, j) = rows[i][j];
  }
  return DistanceMatrix(std::move(D));
}

Eigen::MatrixXd CoordinateTable::cartesian() const {
  Eigen::MatrixXd pts(n(), dim);
  for (int i = 0; i < n(); ++i) pts.row(i) = radii[i] * directions.row(i);
  return pts;
}

std::vector<BallPoint> CoordinateTable::to_ball_points() const {
  std::vector<BallPoint> points;
  points.reserve(n());
  for (int i = 0; i < n(); ++i) {
    if (radii[i] >= 1.0)
      throw std::runtime_error(
          "coordinate radius >= 1: not a Poincare embedding (evaluate with "
          "the Euclidean method instead)");
    if (dim == 2)
      points.emplace_back(radii[i], angles[i]);
    else
      points.emplace_back(radii[i], Eigen::VectorXd(directions.row(i)));
  }
  return points;
}

CoordinateTable CoordinateTable::from_embedding(
    const std::vector<std::string>& labels, const PoincareEmbedding& E) {
  if (static_cast<int>(labels.size()) != E.n())
    throw std::invalid_argument("coordinate table: label count mismatch");
  CoordinateTable t;
  t.labels = labels;
  t.dim = E.dim;
  t.directions.resize(E.n(), E.dim);
  t.radii.resize(E.n());
  for (int i = 0; i < E.n(); ++i) {
    t.radii[i] = E.points[i].radius;
    t.directions.row(i) = E.points[i].direction;
    if (E.dim == 2) t.angles.push_back(*E.points[i].angle);
  }
  return t;
}

CoordinateTable CoordinateTable::from_cartesian(
    const std::vector<std::string>& labels, const Eigen::MatrixXd& coords) {
  if (static_cast<int>(labels.size()) != coords.rows())
    throw std::invalid_argument("coordinate table: label count mismatch");
  CoordinateTable t;
  t.labels = labels;
  t.dim = static_cast<int>(coords.cols());
  t.directions.resize(coords.rows(), coords.cols());
  t.radii.resize(coords.rows());
  for (int i = 0; i < coords.rows(); ++i) {
    const double r = coords.row(i).stableNorm();
    t.radii[i] = r;
    if (r == 0.0) {
      t.directions.row(i).setZero();
      t.directions(i, 0) = 1.0;
    } else {
      t.directions.row(i) = coords.row(i) / r;
    }
    if (t.dim == 2) {
      double theta = std::atan2(t.directions(i, 1), t.directions(i, 0));
      if (theta < 0.0) theta += 2.0 * M_PI;
      t.angles.push_back(theta);
    }
  }
  return t;
}

std::string format_coordinate_csv(const CoordinateTable& table) {
  std::ostringstream out;
  if (table.dim == 2) {
    out << "node,r,theta\n";
    for (int i = 0; i < table.n(); ++i)
      out << table.labels[i] << ',' << format_double(table.radii[i]) << ','
          << format_double(table.angles[i]) << '\n';
  } else {
    out << "node,r";
    for (int j = 1; j <= table.dim; ++j) out << ",u" << j;
    out << '\n';
    for (int i = 0; i < table.n(); ++i) {
      out << table.labels[i] << ',' << format_double(table.radii[i]);
      for (int j = 0; j < table.dim; ++j)
        out << ',' << format_double(table.directions(i, j));
      out << '\n';
    }
  }
  return out.str();
}

void write_coordinate_csv(const std::string& path,
                          const CoordinateTable& table) {
  atomic_write_file(path, format_coordinate_csv(table));
}

CoordinateTable read_coordinate_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open coordinates: " + path);

  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error(path + ": empty coordinate file");
  strip_cr(line);
  const auto header = split(line, ',');
  if (header.size() < 3 || header[0] != "node" || header[1] != "r")
    throw std::runtime_error(path + ": unrecognized coordinate header");
  const bool polar = (header.size() == 3 && header[2] == "theta");
  const int dim = polar ? 2 : static_cast<int>(header.size()) - 2;

  CoordinateTable t;
  t.dim = dim;
  std::vector<Eigen::VectorXd> dirs;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (line.empty()) continue;
    const auto fields = split(line, ',');
    std::ostringstream ctx;
    ctx << path << " line " << line_no;
    if (static_cast<int>(fields.size()) != (polar ? 3 : dim + 2))
      throw std::runtime_error(ctx.str() + ": wrong column count");
    t.labels.push_back(fields[0]);
    t.radii.push_back(parse_double(fields[1], ctx.str()));
    if (polar) {
      const double theta = parse_double(fields[2], ctx.str());
      t.angles.push_back(theta);
      dirs.push_back(Eigen::Vector2d(std::cos(theta), std::sin(theta)));
    } else {
      Eigen::VectorXd u(dim);
      for (int j = 0; j < dim; ++j)
        u[j] = parse_double(fields[j + 2], ctx.str());
      dirs.push_back(std::move(u));
    }
  }
  if (t.labels.empty())
    throw std::runtime_error(path + ": coordinate file has no rows");
  t.directions.resize(t.labels.size(), dim);
  for (std::size_t i = 0; i < dirs.size(); ++i)
    t.directions.row(static_cast<int>(i)) = dirs[i];
  return t;
}

}  // namespace hydra
