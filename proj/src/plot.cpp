#include "hydra/plot.hpp"

#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "hydra/io.hpp"

namespace hydra {

GeodesicArc geodesic_arc(const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  GeodesicArc arc;
  arc.a = a;
  arc.b = b;
  // Center of the circle through a, b orthogonal to the unit circle:
  //   c . a = (|a|^2 + 1) / 2,  c . b = (|b|^2 + 1) / 2.
  const double det = a.x() * b.y() - a.y() * b.x();
  if (std::abs(det) <= 1e-7) {
    arc.is_chord = true;  // collinear with the origin (or nearly so)
    return arc;
  }
  const double ra = 0.5 * (a.squaredNorm() + 1.0);
  const double rb = 0.5 * (b.squaredNorm() + 1.0);
  arc.center = Eigen::Vector2d(ra * b.y() - rb * a.y(),
                               a.x() * rb - b.x() * ra) /
               det;
  arc.radius = std::sqrt(arc.center.squaredNorm() - 1.0);
  return arc;
}

std::vector<std::pair<int, int>> sample_incident_edges(const Graph& g,
                                                       int edges_per_node,
                                                       unsigned seed) {
  std::mt19937 gen(seed);
  std::set<std::pair<int, int>> selected;
  for (int u = 0; u < g.node_count(); ++u) {
    const auto& nbrs = g.adjacency[u];
    if (nbrs.empty()) continue;
    std::uniform_int_distribution<int> pick(0,
                                            static_cast<int>(nbrs.size()) - 1);
    for (int k = 0; k < edges_per_node; ++k) {
      const int v = nbrs[pick(gen)];
      selected.emplace(std::min(u, v), std::max(u, v));
    }
  }
  return {selected.begin(), selected.end()};
}

namespace {

// SVG y axis points down; all geometry below is emitted with y negated.
std::string svg_point(const Eigen::Vector2d& z) {
  return format_double(z.x()) + " " + format_double(-z.y());
}

// Chooses the sweep flag that makes the SVG arc command (large-arc = 0)
// reproduce the computed center. Both candidate centers per the SVG
// endpoint parameterization are formed in emitted (y-down) coordinates
// and compared against the target.
int sweep_flag_for(const GeodesicArc& arc) {
  const Eigen::Vector2d p1(arc.a.x(), -arc.a.y());
  const Eigen::Vector2d p2(arc.b.x(), -arc.b.y());
  const Eigen::Vector2d target(arc.center.x(), -arc.center.y());
  const Eigen::Vector2d mid = 0.5 * (p1 + p2);
  const Eigen::Vector2d half = 0.5 * (p1 - p2);
  const double h2 = arc.radius * arc.radius - half.squaredNorm();
  const double h = std::sqrt(std::max(h2, 0.0));
  const Eigen::Vector2d perp =
      Eigen::Vector2d(half.y(), -half.x()).normalized();
  // sweep = 1 corresponds to center = mid + h * perp (SVG spec F.6.5
  // with fA = 0), sweep = 0 to the mirrored center.
  const Eigen::Vector2d c1 = mid + h * perp;
  const Eigen::Vector2d c0 = mid - h * perp;
  return (c1 - target).norm() <= (c0 - target).norm() ? 1 : 0;
}

}  // namespace

std::string render_disc_svg(const std::vector<Eigen::Vector2d>& points,
                            const std::vector<std::pair<int, int>>& edges,
                            const PlotOptions& opts) {
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opts.size_px
      << "\" height=\"" << opts.size_px
      << "\" viewBox=\"-1.05 -1.05 2.1 2.1\">\n";
  svg << "  <circle class=\"disc\" cx=\"0\" cy=\"0\" r=\"1\" fill=\"#f2f2f2\""
         " stroke=\"#999999\" stroke-width=\"0.004\"/>\n";

  for (const auto& [i, j] : edges) {
    const GeodesicArc arc = geodesic_arc(points[i], points[j]);
    svg << "  <path class=\"edge\" d=\"M " << svg_point(arc.a);
    if (arc.is_chord) {
      svg << " L " << svg_point(arc.b);
    } else {
      svg << " A " << format_double(arc.radius) << ' '
          << format_double(arc.radius) << " 0 0 " << sweep_flag_for(arc) << ' '
          << svg_point(arc.b);
    }
    svg << "\" fill=\"none\" stroke=\"#222222\" stroke-width=\"0.003\"/>\n";
  }

  for (const auto& z : points) {
    svg << "  <circle class=\"node\" cx=\"" << format_double(z.x())
        << "\" cy=\"" << format_double(-z.y()) << "\" r=\""
        << format_double(opts.node_radius) << "\" fill=\"#d62728\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace hydra
