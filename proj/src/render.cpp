#include "uncrossed/render.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>
#include <fmt/format.h>

#include "uncrossed/error.hpp"

namespace uncrossed {

std::vector<Point> barycentric_layout(const RotationSystem& r) {
  const Graph& g = r.graph();
  const int n = g.n();
  std::vector<Point> pts(n, Point::Zero());
  if (n == 1) return pts;
  const FaceSet faces = trace_faces(r);

  std::vector<Vertex> outer;
  for (const auto& d : faces[0].walk) {
    if (std::find(outer.begin(), outer.end(), d.from) == outer.end()) outer.push_back(d.from);
  }
  std::vector<int> fixed(n, 0);
  for (std::size_t i = 0; i < outer.size(); ++i) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / outer.size();
    pts[outer[i]] = Point(std::cos(angle), std::sin(angle));
    fixed[outer[i]] = 1;
  }

  std::vector<int> index(n, -1);
  int free_count = 0;
  for (int v = 0; v < n; ++v) {
    if (!fixed[v]) index[v] = free_count++;
  }
  if (free_count == 0) return pts;

  // Graph Laplacian restricted to the free vertices; symmetric positive
  // definite for a connected graph with at least one pinned vertex.
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(free_count, free_count);
  Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(free_count, 2);
  for (int v = 0; v < n; ++v) {
    if (fixed[v]) continue;
    const int row = index[v];
    lap(row, row) = g.degree(v);
    for (Vertex u : g.neighbors(v)) {
      if (fixed[u]) rhs.row(row) += pts[u].transpose();
      else lap(row, index[u]) -= 1.0;
    }
  }
  const Eigen::MatrixXd sol = lap.ldlt().solve(rhs);
  for (int v = 0; v < n; ++v) {
    if (!fixed[v]) pts[v] = sol.row(index[v]).transpose();
  }
  return pts;
}

std::vector<Point> chord_arc(const Point& a, const Point& b, int samples) {
  const double ta = std::atan2(a.y(), a.x());
  double sweep = std::atan2(b.y(), b.x()) - ta;
  while (sweep > std::numbers::pi) sweep -= 2 * std::numbers::pi;
  while (sweep < -std::numbers::pi) sweep += 2 * std::numbers::pi;
  // Bulge grows with the angular span so nested chords stay apart.
  const double lift = 0.15 + 0.35 * std::abs(sweep) / std::numbers::pi;
  std::vector<Point> out;
  out.reserve(samples + 1);
  for (int i = 0; i <= samples; ++i) {
    const double s = static_cast<double>(i) / samples;
    const double radius = 1.0 + lift * std::sin(std::numbers::pi * s);
    const double angle = ta + s * sweep;
    out.emplace_back(radius * std::cos(angle), radius * std::sin(angle));
  }
  out.front() = a;
  out.back() = b;
  return out;
}

Drawing drawing_from_record(const ConstructionRecord& rec) {
  Drawing d;
  d.coordinates = rec.coordinates;
  d.solid = rec.certificate.uncrossed;
  d.dotted = rec.crossed_edges;
  d.dotted_outside = true;
  return d;
}

Drawing drawing_from_certificate(const SubdrawingCertificate& c) {
  Drawing d;
  d.coordinates = barycentric_layout(c.rotation);
  d.solid = c.uncrossed;
  for (const auto& [e, face] : c.face_assignment) d.dotted.push_back(e);
  return d;
}

namespace {

std::vector<Point> dotted_path(const Drawing& d, const Edge& e) {
  const Point& a = d.coordinates[e.u];
  const Point& b = d.coordinates[e.v];
  if (d.dotted_outside) return chord_arc(a, b);
  // Quadratic bulge to one side of the straight segment.
  const Point mid = (a + b) / 2.0;
  const Point dir = b - a;
  const Point control = mid + 0.2 * Point(-dir.y(), dir.x());
  std::vector<Point> out;
  const int samples = 16;
  for (int i = 0; i <= samples; ++i) {
    const double s = static_cast<double>(i) / samples;
    out.push_back((1 - s) * (1 - s) * a + 2 * (1 - s) * s * control + s * s * b);
  }
  return out;
}

}  // namespace

std::string render_svg(const Drawing& d) {
  std::vector<std::vector<Point>> curves;
  for (const auto& e : d.dotted) curves.push_back(dotted_path(d, e));

  Point lo = Point::Constant(-1.0);
  Point hi = Point::Constant(1.0);
  auto extend = [&](const Point& p) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  };
  for (const auto& p : d.coordinates) extend(p);
  for (const auto& c : curves)
    for (const auto& p : c) extend(p);

  constexpr double size = 480.0;
  constexpr double margin = 20.0;
  const double scale = (size - 2 * margin) / std::max(hi.x() - lo.x(), hi.y() - lo.y());
  // SVG y grows downward.
  auto sx = [&](const Point& p) { return margin + (p.x() - lo.x()) * scale; };
  auto sy = [&](const Point& p) { return size - margin - (p.y() - lo.y()) * scale; };

  std::string out = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0:.0f}\" height=\"{0:.0f}\" "
      "viewBox=\"0 0 {0:.0f} {0:.0f}\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n",
      size);
  for (const auto& c : curves) {
    out += "<path d=\"";
    for (std::size_t i = 0; i < c.size(); ++i) {
      out += fmt::format("{}{:.3f} {:.3f}", i == 0 ? "M" : " L", sx(c[i]), sy(c[i]));
    }
    out += "\" fill=\"none\" stroke=\"gray\" stroke-width=\"1\" stroke-dasharray=\"2 3\"/>\n";
  }
  for (const auto& e : d.solid) {
    const Point& a = d.coordinates[e.u];
    const Point& b = d.coordinates[e.v];
    out += fmt::format(
        "<line x1=\"{:.3f}\" y1=\"{:.3f}\" x2=\"{:.3f}\" y2=\"{:.3f}\" stroke=\"black\" "
        "stroke-width=\"1.5\"/>\n",
        sx(a), sy(a), sx(b), sy(b));
  }
  for (std::size_t v = 0; v < d.coordinates.size(); ++v) {
    const Point& p = d.coordinates[v];
    out += fmt::format(
        "<circle cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"4\" fill=\"white\" stroke=\"black\"/>\n", sx(p),
        sy(p));
  }
  out += "</svg>\n";
  return out;
}

std::string render_json(const json& j) {
  try {
    if (j.contains("coordinates")) {
      Drawing d;
      const auto& coords = j.at("coordinates");
      const int n = j.at("parameters").at("n").get<int>();
      if (!coords.is_array() || static_cast<int>(coords.size()) != n) {
        throw RenderError("record has coordinates for " + std::to_string(coords.size()) +
                          " of " + std::to_string(n) + " vertices");
      }
      for (const auto& p : coords) d.coordinates.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
      d.solid = edges_from_json(j.at("certificate").at("uncrossed"));
      d.dotted = edges_from_json(j.at("crossed_edges"));
      d.dotted_outside = true;
      for (const auto* list : {&d.solid, &d.dotted}) {
        for (const auto& e : *list) {
          if (e.u < 0 || e.v >= n) throw RenderError("edge endpoint without coordinates");
        }
      }
      return render_svg(d);
    }
    if (j.contains("witness")) return render_json(j.at("witness"));
    if (j.contains("cover")) {
      if (j.at("cover").empty()) throw RenderError("empty cover");
      return render_json(j.at("cover").at(0));
    }
    if (j.contains("uncrossed")) {
      const SubdrawingCertificate c = certificate_from_json(j);
      if (!verify_certificate(c)) throw RenderError("certificate does not verify");
      return render_svg(drawing_from_certificate(c));
    }
  } catch (const json::exception& e) {
    throw RenderError(std::string("render input: ") + e.what());
  }
  throw RenderError("render input is neither a construction record nor a certificate");
}

}  // namespace uncrossed
